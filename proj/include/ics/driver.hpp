#pragma once

// The outer detection loop. Each cycle clusters the surviving points,
// drops partitions without an event, merges partitions sharing an event,
// selects the strongest one, and deletes its points. From the second cycle
// on, a selection whose peak falls inside an already accepted event's span
// is discarded instead of accepted. With remnant_check on, a selection whose
// peak borders a brighter point deleted in an earlier cycle is discarded too:
// it is the leftover flank of an event that was already handled.

#include "ics/clustering.hpp"
#include "ics/field.hpp"
#include "ics/partition_stats.hpp"
#include "ics/span_merge.hpp"

#include <cstdint>
#include <vector>

namespace ics {

struct IcsConfig {
    std::size_t k0 = 8;
    double p = 16.0;
    double alpha_cutoff = 0.1;
    double beta_c = 0.4;
    double epsilon = 0.01;
    std::size_t bins = 100;
    double significance = 0.999;
    std::size_t kmeans_max_iters = 100;
    double kmeans_tol = 1e-6;
    std::size_t max_cycles = 64;
    std::uint64_t rng_seed = 0;
    SpanReduce span_reduce = SpanReduce::median;
    bool remnant_check = true;

    /// Throws InvalidDataError naming the first out-of-range field.
    void validate() const;

    PhiParams phi_params() const { return {p}; }
    StatsParams stats_params() const { return {bins, significance, 0.01}; }
    SpanParams span_params() const { return {beta_c, epsilon, span_reduce}; }
    ClusteringOptions clustering_options() const { return {kmeans_max_iters, kmeans_tol}; }

    friend bool operator==(const IcsConfig&, const IcsConfig&) = default;
};

struct DetectedEvent {
    std::vector<double> peak;
    std::vector<double> centroid;
    double strength = 0.0;
    double span = 0.0;
    std::size_t cycle = 0;
    double alpha = 0.0;
    std::size_t n_points = 0;
};

enum class CycleOutcome { accepted, discarded, no_survivors };

struct CycleDiagnostics {
    std::size_t cycle = 0;
    std::size_t clusters = 0;
    std::size_t points_before = 0;
    std::size_t survivors = 0;
    std::size_t merges = 0;
    std::vector<double> alphas;  ///< one per cluster label; 0 for empty clusters
    CycleOutcome outcome = CycleOutcome::no_survivors;
    std::size_t kmeans_iterations = 0;
    std::vector<double> selected_peak;  ///< empty when nothing was selected
    double selected_strength = 0.0;
    double selected_span = 0.0;
};

struct DetectionReport {
    IcsConfig config;
    std::size_t cycles_run = 0;
    std::vector<DetectedEvent> events;
    std::vector<CycleDiagnostics> diagnostics;
};

/// Number of clusters used in cycle `cycle` (1-based): max(k0 - (cycle - 1), 1).
std::size_t clusters_for_cycle(std::size_t k0, std::size_t cycle);

/// Seed for the k-means run of cycle `cycle`.
std::uint64_t cycle_seed(std::uint64_t rng_seed, std::size_t cycle);

/// Partitions of one clustering with stats for every non-empty cluster and
/// spans for every partition that is non-empty.
std::vector<Partition> analyze_partitions(const PointSet& ps, const ClusteringResult& clustering,
                                          const IcsConfig& config);

DetectionReport detect(const AmplitudeField& field, const IcsConfig& config);
DetectionReport detect_points(const PointSet& ps, const IcsConfig& config);

}  // namespace ics
