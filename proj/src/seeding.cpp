#include "ics/seeding.hpp"

#include "ics/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ics {

CentroidSet::CentroidSet(std::size_t ndim, std::vector<double> data)
    : ndim_(ndim), data_(std::move(data)) {
    if (ndim_ == 0 || data_.size() % ndim_ != 0) {
        throw InvalidDataError("centroid data is not a multiple of ndim");
    }
}

std::size_t count_distinct_points(const PointSet& ps, std::size_t limit) {
    std::set<std::vector<double>> seen;
    for (std::size_t i = 0; i < ps.size() && seen.size() < limit; ++i) {
        auto c = ps.coord(i);
        seen.emplace(c.begin(), c.end());
    }
    return seen.size();
}

CentroidSet seed_kmeanspp(const PointSet& ps, std::size_t k, Rng& rng,
                          std::optional<std::size_t> first_index) {
    if (ps.empty()) throw InvalidDataError("cannot seed centroids from an empty point set");
    if (k == 0) throw InvalidDataError("k must be at least 1");
    if (count_distinct_points(ps, k) < k) {
        throw InvalidDataError("k exceeds distinct points (k = " + std::to_string(k) + ")");
    }
    if (first_index && *first_index >= ps.size()) {
        throw InvalidDataError("forced first seed index out of range");
    }

    const std::size_t n = ps.size();
    const std::size_t d = ps.ndim();
    std::vector<double> out;
    out.reserve(k * d);
    std::vector<char> chosen(n, 0);

    auto take = [&](std::size_t idx) {
        chosen[idx] = 1;
        auto c = ps.coord(idx);
        out.insert(out.end(), c.begin(), c.end());
    };

    std::size_t first = first_index.value_or(
        std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    take(first);

    // squared distance of each point to its nearest chosen centroid
    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i) d2[i] = squared_distance(ps.coord(i), ps.coord(first));

    while (out.size() < k * d) {
        double total = 0.0;
        for (double v : d2) total += v;

        std::size_t pick = n;
        if (total > 0.0) {
            const double target = std::uniform_real_distribution<double>(0.0, total)(rng);
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (d2[i] <= 0.0) continue;
                acc += d2[i];
                pick = i;
                if (acc > target) break;
            }
        } else {
            std::vector<std::size_t> pool;
            for (std::size_t i = 0; i < n; ++i) {
                if (!chosen[i]) pool.push_back(i);
            }
            pick = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        }
        take(pick);

        auto c = ps.coord(pick);
        for (std::size_t i = 0; i < n; ++i) {
            d2[i] = std::min(d2[i], squared_distance(ps.coord(i), c));
        }
    }
    return CentroidSet(d, std::move(out));
}

CentroidSet seed_kmeanspp(const PointSet& ps, std::size_t k, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return seed_kmeanspp(ps, k, rng);
}

}  // namespace ics
