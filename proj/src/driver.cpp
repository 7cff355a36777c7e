#include "ics/driver.hpp"

#include "ics/errors.hpp"
#include "ics/seeding.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <numeric>

namespace ics {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw InvalidDataError(std::string("invalid config: ") + what);
}

std::vector<double> axis_steps(const PointSet& ps) {
    std::vector<double> steps(ps.ndim(), 0.0);
    for (std::size_t a = 0; a < ps.ndim(); ++a) {
        std::vector<double> v(ps.size());
        for (std::size_t j = 0; j < ps.size(); ++j) v[j] = ps.coord(j)[a];
        std::sort(v.begin(), v.end());
        double best = 0.0;
        for (std::size_t j = 1; j < v.size(); ++j) {
            const double g = v[j] - v[j - 1];
            if (g > 0.0 && (best == 0.0 || g < best)) best = g;
        }
        steps[a] = best;
    }
    return steps;
}

bool has_higher_removed_neighbor(const PointSet& ps, const std::vector<char>& removed,
                                 const std::vector<double>& steps, std::size_t peak) {
    const auto c = ps.coord(peak);
    for (std::size_t j = 0; j < ps.size(); ++j) {
        if (!removed[j] || !(ps.amp(j) > ps.amp(peak))) continue;
        const auto x = ps.coord(j);
        bool near = true;
        for (std::size_t a = 0; a < c.size() && near; ++a) {
            near = std::abs(x[a] - c[a]) <= steps[a] * (1.0 + 1e-9);
        }
        if (near) return true;
    }
    return false;
}

}  // namespace

void IcsConfig::validate() const {
    require(k0 >= 1, "k0 must be >= 1");
    require(std::isfinite(p) && p >= 0.0, "p must be >= 0");
    require(std::isfinite(alpha_cutoff) && alpha_cutoff >= 0.0, "alpha_cutoff must be >= 0");
    require(beta_c > 0.0 && beta_c <= 1.0, "beta_c must lie in (0, 1]");
    require(std::isfinite(epsilon) && epsilon > 0.0, "epsilon must be > 0");
    require(bins >= 1, "bins must be >= 1");
    require(significance > 0.0 && significance <= 1.0, "significance must lie in (0, 1]");
    require(kmeans_max_iters >= 1, "kmeans_max_iters must be >= 1");
    require(std::isfinite(kmeans_tol) && kmeans_tol >= 0.0, "kmeans_tol must be >= 0");
    require(max_cycles >= 1, "max_cycles must be >= 1");
}

std::size_t clusters_for_cycle(std::size_t k0, std::size_t cycle) {
    return cycle > k0 ? 1 : std::max<std::size_t>(k0 - (cycle - 1), 1);
}

std::uint64_t cycle_seed(std::uint64_t rng_seed, std::size_t cycle) {
    return derive_seed(rng_seed, cycle);
}

std::vector<Partition> analyze_partitions(const PointSet& ps, const ClusteringResult& clustering,
                                          const IcsConfig& config) {
    auto parts = build_partitions(ps, clustering.assignment, clustering.centroids);
    const auto stats_params = config.stats_params();
    const auto span_params = config.span_params();
    for (auto& part : parts) {
        if (part.members.empty()) continue;
        part.stats = compute_stats(member_amps(part, ps), stats_params);
        part.span = span_radius(part, ps, span_params);
    }
    return parts;
}

DetectionReport detect(const AmplitudeField& field, const IcsConfig& config) {
    return detect_points(to_point_set(field), config);
}

DetectionReport detect_points(const PointSet& ps, const IcsConfig& config) {
    config.validate();
    DetectionReport report;
    report.config = config;

    PointSet active = ps;
    std::vector<std::size_t> origin(ps.size());
    std::iota(origin.begin(), origin.end(), std::size_t{0});
    std::vector<char> removed(ps.size(), 0);
    const auto steps = axis_steps(ps);
    for (std::size_t cycle = 1; cycle <= config.max_cycles && !active.empty(); ++cycle) {
        CycleDiagnostics diag;
        diag.cycle = cycle;
        diag.points_before = active.size();
        const std::size_t k = std::min(clusters_for_cycle(config.k0, cycle),
                                       count_distinct_points(active, config.k0));
        diag.clusters = k;
        report.cycles_run = cycle;

        const auto clustering = run_clustering(active, k, config.phi_params(),
                                               config.clustering_options(),
                                               cycle_seed(config.rng_seed, cycle));
        diag.kmeans_iterations = clustering.iterations_run;
        auto parts = analyze_partitions(active, clustering, config);
        for (const auto& part : parts) diag.alphas.push_back(part.stats.alpha_r);

        auto survivors = eliminate_empty(std::move(parts), config.alpha_cutoff);
        diag.survivors = survivors.size();
        if (survivors.empty()) {
            diag.outcome = CycleOutcome::no_survivors;
            report.diagnostics.push_back(std::move(diag));
            break;
        }

        auto merged = merge_overlapping(std::move(survivors), active, config.span_params(),
                                        config.stats_params());
        diag.merges = merged.merges;

        const auto& parts_after = merged.partitions;
        std::size_t pick = 0;
        for (std::size_t i = 1; i < parts_after.size(); ++i) {
            if (parts_after[i].stats.a_bar_max > parts_after[pick].stats.a_bar_max) pick = i;
        }
        const Partition& selected = parts_after[pick];
        diag.selected_peak = selected.span.event_center;
        diag.selected_strength = selected.stats.a_bar_max;
        diag.selected_span = selected.span.beta_r;

        // A peak next to an already deleted, brighter point is the cut-off
        // flank of an earlier selection rather than an event of its own.
        bool overlaps = config.remnant_check &&
                        has_higher_removed_neighbor(ps, removed, steps,
                                                    origin[selected.span.peak_index]);
        for (const auto& prior : report.events) {
            if (overlaps) break;
            if (distance(selected.span.event_center, prior.peak) <= prior.span) {
                overlaps = true;
                break;
            }
        }
        if (overlaps) {
            diag.outcome = CycleOutcome::discarded;
        } else {
            diag.outcome = CycleOutcome::accepted;
            DetectedEvent ev;
            ev.peak = selected.span.event_center;
            ev.centroid = selected.centroid;
            ev.strength = selected.stats.a_bar_max;
            ev.span = selected.span.beta_r;
            ev.cycle = cycle;
            ev.alpha = selected.stats.alpha_r;
            ev.n_points = selected.members.size();
            report.events.push_back(std::move(ev));
        }
        report.diagnostics.push_back(std::move(diag));
        std::vector<char> gone(active.size(), 0);
        for (std::size_t m : selected.members) gone[m] = 1;
        std::vector<std::size_t> kept;
        kept.reserve(active.size() - selected.members.size());
        for (std::size_t j = 0; j < active.size(); ++j) {
            if (gone[j]) {
                removed[origin[j]] = 1;
            } else {
                kept.push_back(origin[j]);
            }
        }
        origin = std::move(kept);
        active = delete_points(active, selected.members);
    }
    return report;
}

}  // namespace ics
