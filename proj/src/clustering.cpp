#include "ics/clustering.hpp"

#include "ics/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace ics {

namespace {

constexpr double kTiny = 1e-300;

double max_shift(const CentroidSet& a, const CentroidSet& b) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.k(); ++i) best = std::max(best, distance(a[i], b[i]));
    return best;
}

double centroid_scale(const CentroidSet& c) {
    double s = 1.0;
    for (double v : c.data()) s = std::max(s, std::abs(v));
    return s;
}

std::vector<double> phi_values(const PointSet& ps, const PhiParams& params) {
    std::vector<double> w(ps.size());
    for (std::size_t j = 0; j < ps.size(); ++j) w[j] = phi(ps.amp(j), params);
    return w;
}

// Kernels are instantiated per dimension so the inner loops unroll.
template <std::size_t D>
void assign_kernel(std::span<const double> coords, std::span<const double> cents, std::size_t k,
                   std::vector<std::uint32_t>& out) {
    const std::size_t n = out.size();
    for (std::size_t j = 0; j < n; ++j) {
        const double* x = coords.data() + j * D;
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_i = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const double* c = cents.data() + i * D;
            double s = 0.0;
            for (std::size_t a = 0; a < D; ++a) {
                const double t = x[a] - c[a];
                s += t * t;
            }
            if (s < best) {
                best = s;
                best_i = static_cast<std::uint32_t>(i);
            }
        }
        out[j] = best_i;
    }
}

template <std::size_t D>
void update_kernel(std::span<const double> coords, std::span<const double> phis,
                   const std::vector<std::uint32_t>& assignment, std::span<const double> cents,
                   std::vector<double>& num, std::vector<double>& den) {
    for (std::size_t j = 0; j < assignment.size(); ++j) {
        const std::uint32_t i = assignment[j];
        const double* x = coords.data() + j * D;
        const double* c = cents.data() + i * D;
        double s = 0.0;
        for (std::size_t a = 0; a < D; ++a) {
            const double t = x[a] - c[a];
            s += t * t;
        }
        const double w = phis[j] * s;
        den[i] += w;
        for (std::size_t a = 0; a < D; ++a) num[i * D + a] += w * x[a];
    }
}

template <template <std::size_t> class K, typename... Args>
void dispatch(std::size_t d, Args&&... args) {
    switch (d) {
        case 1: K<1>::run(std::forward<Args>(args)...); break;
        case 2: K<2>::run(std::forward<Args>(args)...); break;
        case 3: K<3>::run(std::forward<Args>(args)...); break;
        case 4: K<4>::run(std::forward<Args>(args)...); break;
        default: throw InvalidDataError("clustering supports 1 to 4 dimensions");
    }
}

template <std::size_t D>
struct Assign {
    template <typename... A>
    static void run(A&&... a) { assign_kernel<D>(std::forward<A>(a)...); }
};

template <std::size_t D>
struct Update {
    template <typename... A>
    static void run(A&&... a) { update_kernel<D>(std::forward<A>(a)...); }
};

void check_shapes(const PointSet& ps, const CentroidSet& centroids) {
    if (centroids.k() == 0) throw InvalidDataError("clustering needs at least one centroid");
    if (centroids.ndim() != ps.ndim()) {
        throw InvalidDataError("centroid and point dimensions differ");
    }
}

CentroidSet update_with(const PointSet& ps, std::span<const double> phis,
                        const std::vector<std::uint32_t>& assignment,
                        const CentroidSet& centroids) {
    if (assignment.size() != ps.size()) {
        throw InvalidDataError("assignment length does not match point count");
    }
    const std::size_t k = centroids.k();
    const std::size_t d = centroids.ndim();
    for (std::uint32_t i : assignment) {
        if (i >= k) throw InvalidDataError("assignment index out of range");
    }
    std::vector<double> num(k * d, 0.0);
    std::vector<double> den(k, 0.0);
    dispatch<Update>(d, ps.coords(), phis, assignment, centroids.data(), num, den);

    CentroidSet next = centroids;
    for (std::size_t i = 0; i < k; ++i) {
        if (!(den[i] > 0.0)) continue;
        auto c = next.mutable_centroid(i);
        for (std::size_t a = 0; a < d; ++a) c[a] = num[i * d + a] / den[i];
    }
    return next;
}

double objective_with(const PointSet& ps, std::span<const double> phis,
                      const std::vector<std::uint32_t>& assignment,
                      const CentroidSet& centroids) {
    double r = 0.0;
    for (std::size_t j = 0; j < ps.size(); ++j) {
        r += phis[j] * squared_distance(ps.coord(j), centroids[assignment[j]]);
    }
    return r;
}

}  // namespace

double phi(double amp, const PhiParams& params) { return std::exp(params.p * amp); }

std::vector<std::uint32_t> assign(const PointSet& ps, const CentroidSet& centroids,
                                  const PhiParams& /*params*/) {
    check_shapes(ps, centroids);
    // phi(a_j) > 0 scales every candidate of point j equally, so the argmin
    // over phi * |x - c|^2 is the argmin over |x - c|^2.
    std::vector<std::uint32_t> out(ps.size());
    dispatch<Assign>(ps.ndim(), ps.coords(), centroids.data(), centroids.k(), out);
    return out;
}

CentroidSet update_centroids(const PointSet& ps, const std::vector<std::uint32_t>& assignment,
                             const CentroidSet& centroids, const PhiParams& params) {
    check_shapes(ps, centroids);
    const auto phis = phi_values(ps, params);
    return update_with(ps, phis, assignment, centroids);
}

double objective(const PointSet& ps, const std::vector<std::uint32_t>& assignment,
                 const CentroidSet& centroids, const PhiParams& params) {
    check_shapes(ps, centroids);
    if (assignment.size() != ps.size()) {
        throw InvalidDataError("assignment length does not match point count");
    }
    const auto phis = phi_values(ps, params);
    return objective_with(ps, phis, assignment, centroids);
}

ClusteringResult run_clustering(const PointSet& ps, std::size_t k, const PhiParams& params,
                                const ClusteringOptions& options, std::uint64_t rng_seed) {
    if (options.max_iters == 0) throw InvalidDataError("max_iters must be at least 1");
    if (!(params.p >= 0.0)) throw InvalidDataError("phi exponent p must be non-negative");

    ClusteringResult res;
    res.centroids = seed_kmeanspp(ps, k, rng_seed);
    const auto phis = phi_values(ps, params);

    std::vector<std::uint32_t> prev;
    for (std::size_t it = 0; it < options.max_iters; ++it) {
        res.assignment = assign(ps, res.centroids, params);
        const double r = objective_with(ps, phis, res.assignment, res.centroids);
        auto next = update_with(ps, phis, res.assignment, res.centroids);
        // The update weights depend on the old centroid, so a stable assignment
        // alone does not mean the centroids have settled.
        const bool settled = max_shift(res.centroids, next) <= options.tol * centroid_scale(next);
        res.centroids = std::move(next);
        res.iterations_run = it + 1;

        bool converged = false;
        if (!res.objective_trace.empty()) {
            const double last = res.objective_trace.back();
            const double rel = std::abs(r - last) / std::max(std::abs(r), kTiny);
            converged = rel < options.tol || (settled && res.assignment == prev);
        }
        res.objective_trace.push_back(r);
        if (converged) break;
        prev = res.assignment;
    }
    return res;
}

}  // namespace ics
