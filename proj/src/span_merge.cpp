#include "ics/span_merge.hpp"

#include "ics/errors.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>

namespace ics {

SpanReduce parse_span_reduce(std::string_view name) {
    if (name == "median") return SpanReduce::median;
    if (name == "max") return SpanReduce::max;
    if (name == "mean") return SpanReduce::mean;
    throw InvalidDataError("unknown span reduction '" + std::string(name) +
                           "' (expected median, max or mean)");
}

std::string_view to_string(SpanReduce r) {
    switch (r) {
        case SpanReduce::median: return "median";
        case SpanReduce::max: return "max";
        case SpanReduce::mean: return "mean";
    }
    return "median";
}

SpanInfo span_radius(const Partition& partition, const PointSet& ps, const SpanParams& params) {
    if (partition.members.empty()) throw InvalidDataError("span of an empty partition");

    SpanInfo info;
    info.peak_index = partition.members.front();
    for (std::size_t j : partition.members) {
        if (ps.amp(j) > ps.amp(info.peak_index) ||
            (ps.amp(j) == ps.amp(info.peak_index) && j < info.peak_index)) {
            info.peak_index = j;
        }
    }
    const auto center = ps.coord(info.peak_index);
    info.event_center.assign(center.begin(), center.end());

    const double level = params.beta_c * partition.stats.a_bar_max;
    const double lo = level - params.epsilon;
    const double hi = level + params.epsilon;
    std::vector<double> dists;
    for (std::size_t j : partition.members) {
        const double a = ps.amp(j);
        if (a >= lo && a <= hi) dists.push_back(distance(ps.coord(j), center));
    }
    info.band_count = dists.size();
    if (dists.empty()) return info;

    switch (params.reduce) {
        case SpanReduce::median: info.beta_r = median(dists); break;
        case SpanReduce::max: info.beta_r = *std::max_element(dists.begin(), dists.end()); break;
        case SpanReduce::mean:
            info.beta_r = std::accumulate(dists.begin(), dists.end(), 0.0) /
                          static_cast<double>(dists.size());
            break;
    }
    return info;
}

MergeResult merge_overlapping(std::vector<Partition> partitions, const PointSet& ps,
                              const SpanParams& span_params, const StatsParams& stats_params) {
    MergeResult out;
    for (;;) {
        // key: (-absorber strength, distance, absorber index, absorbed index)
        std::optional<std::tuple<double, double, std::size_t, std::size_t>> best;
        for (std::size_t q = 0; q < partitions.size(); ++q) {
            const auto& pq = partitions[q];
            for (std::size_t p = 0; p < partitions.size(); ++p) {
                if (p == q) continue;
                const auto& pp = partitions[p];
                if (!(pp.stats.a_bar_max < pq.stats.a_bar_max)) continue;
                const double dist = distance(pp.span.event_center, pq.span.event_center);
                if (dist > pq.span.beta_r) continue;
                auto key = std::make_tuple(-pq.stats.a_bar_max, dist, q, p);
                if (!best || key < *best) best = key;
            }
        }
        if (!best) break;

        const auto [neg_strength, dist, q, p] = *best;
        auto& absorber = partitions[q];
        std::vector<std::size_t> merged;
        merged.reserve(absorber.members.size() + partitions[p].members.size());
        std::merge(absorber.members.begin(), absorber.members.end(),
                   partitions[p].members.begin(), partitions[p].members.end(),
                   std::back_inserter(merged));
        absorber.members = std::move(merged);
        absorber.stats = compute_stats(member_amps(absorber, ps), stats_params);
        absorber.span = span_radius(absorber, ps, span_params);
        partitions.erase(partitions.begin() + static_cast<std::ptrdiff_t>(p));
        ++out.merges;
    }
    out.partitions = std::move(partitions);
    return out;
}

}  // namespace ics
