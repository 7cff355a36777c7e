#include "ics/partition_stats.hpp"

#include "ics/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ics {

std::size_t trim_count(std::size_t n, double significance) {
    if (!(significance > 0.0 && significance <= 1.0)) {
        throw InvalidDataError("significance must lie in (0, 1]");
    }
    // 1 - 0.999 is not exact in binary; shave the rounding noise before ceil
    const double raw = (1.0 - significance) * static_cast<double>(n);
    return static_cast<std::size_t>(std::ceil(raw - 1e-9 * std::max(1.0, raw)));
}

double trimmed_max(std::span<const double> amps, double significance) {
    if (amps.empty()) throw InvalidDataError("trimmed_max of an empty list");
    const std::size_t drop = trim_count(amps.size(), significance);
    if (drop >= amps.size()) return *std::min_element(amps.begin(), amps.end());
    std::vector<double> v(amps.begin(), amps.end());
    const std::size_t keep_top = v.size() - 1 - drop;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(keep_top), v.end());
    return v[keep_top];
}

double median(std::span<const double> values) {
    if (values.empty()) throw InvalidDataError("median of an empty list");
    std::vector<double> v(values.begin(), values.end());
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double hi = v[mid];
    if (v.size() % 2 == 1) return hi;
    const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lo + hi);
}

std::vector<std::size_t> histogram(std::span<const double> values, std::size_t bins) {
    if (bins == 0) throw InvalidDataError("histogram needs at least one bin");
    std::vector<std::size_t> counts(bins, 0);
    if (values.empty()) return counts;
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it;
    const double width = (*hi_it - lo) / static_cast<double>(bins);
    if (!(width > 0.0)) {
        counts[0] = values.size();
        return counts;
    }
    for (double v : values) {
        auto b = static_cast<std::size_t>((v - lo) / width);
        counts[std::min(b, bins - 1)] += 1;
    }
    return counts;
}

PartitionStats compute_stats(std::span<const double> amps, const StatsParams& params) {
    if (amps.empty()) throw InvalidDataError("statistics of an empty partition");
    PartitionStats s;
    s.n_points = amps.size();
    const auto counts = histogram(amps, params.bins);
    s.f_max = *std::max_element(counts.begin(), counts.end());
    s.median_amp = median(amps);
    s.a_bar_max = trimmed_max(amps, params.significance);
    s.alpha_r = static_cast<double>(s.f_max) / std::max(s.median_amp, params.median_floor) *
                s.a_bar_max * s.a_bar_max;
    return s;
}

std::vector<Partition> eliminate_empty(std::vector<Partition> partitions, double cutoff) {
    std::vector<Partition> kept;
    for (auto& p : partitions) {
        if (p.members.empty() || p.stats.n_points == 0) continue;
        if (p.stats.alpha_r >= cutoff) kept.push_back(std::move(p));
    }
    return kept;
}

}  // namespace ics
