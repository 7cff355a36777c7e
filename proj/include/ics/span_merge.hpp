#pragma once

// Span radius of a partition's event and merging of partitions that sit on the
// same event.
//
// The span radius is read off the "decay band": members whose amplitude lies in
// [beta_c * A - eps, beta_c * A + eps], A being the trimmed maximum. A weaker
// partition p is absorbed by q when p's peak lies within q's span radius.

#include "ics/partition.hpp"
#include "ics/partition_stats.hpp"

#include <string_view>
#include <vector>

namespace ics {

enum class SpanReduce { median, max, mean };

SpanReduce parse_span_reduce(std::string_view name);
std::string_view to_string(SpanReduce r);

struct SpanParams {
    double beta_c = 0.4;
    double epsilon = 0.01;
    SpanReduce reduce = SpanReduce::median;
};

/// Requires partition.stats to be current. Throws on an empty partition.
SpanInfo span_radius(const Partition& partition, const PointSet& ps, const SpanParams& params);

struct MergeResult {
    std::vector<Partition> partitions;
    std::size_t merges = 0;
};

/// Applies the absorb rule until no pair qualifies. Candidate pairs are taken
/// by descending absorber strength, then ascending peak distance, then index.
/// The absorber's stats and span are recomputed over the union after each merge.
/// Requires stats and spans to be current for every input partition.
MergeResult merge_overlapping(std::vector<Partition> partitions, const PointSet& ps,
                              const SpanParams& span_params, const StatsParams& stats_params);

}  // namespace ics
