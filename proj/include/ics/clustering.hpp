#pragma once

// Amplitude-weighted k-means.
//
// Objective:  R(C) = sum_j min_i phi(a_j) * |x_j - c_i|^2,   phi(a) = exp(p * a)
// Update:     c_i  = sum_{x in S_i} w(x) x / sum w(x),   w(x) = phi(a) * |x - c_i_old|^2
//
// phi(a_j) is a positive per-point factor, so assignment is plain
// nearest-centroid; the amplitude only shapes the centroid update.

#include "ics/field.hpp"
#include "ics/seeding.hpp"

#include <cstdint>
#include <vector>

namespace ics {

struct PhiParams {
    double p = 16.0;
};

struct ClusteringOptions {
    std::size_t max_iters = 100;
    double tol = 1e-6;  ///< relative objective change
};

struct ClusteringResult {
    CentroidSet centroids;
    std::vector<std::uint32_t> assignment;
    std::vector<double> objective_trace;
    std::size_t iterations_run = 0;
};

double phi(double amp, const PhiParams& params);

/// Nearest centroid under phi(a_j) * |x_j - c_e|^2; ties go to the lowest index.
std::vector<std::uint32_t> assign(const PointSet& ps, const CentroidSet& centroids,
                                  const PhiParams& params);

/// One update pass. Weights use the centroid from before the pass; clusters that
/// are empty or have zero total weight keep their centroid.
CentroidSet update_centroids(const PointSet& ps, const std::vector<std::uint32_t>& assignment,
                             const CentroidSet& centroids, const PhiParams& params);

double objective(const PointSet& ps, const std::vector<std::uint32_t>& assignment,
                 const CentroidSet& centroids, const PhiParams& params);

/// Seeds with k-means++ then alternates assign/update. Stops on a relative
/// objective change below `tol`, a stable assignment whose centroids moved by
/// at most `tol` (relative to the coordinate scale), or `max_iters`.
/// The returned assignment is the last one computed (it defines the partitions);
/// the returned centroids are post-update.
ClusteringResult run_clustering(const PointSet& ps, std::size_t k, const PhiParams& params,
                                const ClusteringOptions& options, std::uint64_t rng_seed);

}  // namespace ics
