#pragma once

// Per-partition amplitude statistics and the rejection factor
//
//   alpha_R = f_max / max(median, median_floor) * trimmed_max^2
//
// used to drop partitions that hold no event.

#include "ics/partition.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ics {

struct StatsParams {
    std::size_t bins = 100;
    double significance = 0.999;
    double median_floor = 0.01;
};

/// Number of top samples discarded by trimmed_max for n samples.
std::size_t trim_count(std::size_t n, double significance);

/// Max after dropping the top ceil((1 - significance) * n) values; falls back
/// to min(amps) when that would drop everything.
double trimmed_max(std::span<const double> amps, double significance);

/// Midpoint-of-two median.
double median(std::span<const double> values);

/// Equal-width bins over [min, max]; a zero-width range puts everything in bin 0.
std::vector<std::size_t> histogram(std::span<const double> values, std::size_t bins);

PartitionStats compute_stats(std::span<const double> amps, const StatsParams& params);

/// Keeps partitions with alpha_r >= cutoff, in order. Empty partitions never survive.
std::vector<Partition> eliminate_empty(std::vector<Partition> partitions, double cutoff);

}  // namespace ics
