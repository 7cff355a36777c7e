#pragma once

#include "ics/clustering.hpp"
#include "ics/field.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ics {

struct PartitionStats {
    std::size_t f_max = 0;     ///< tallest histogram bin (raw count)
    double median_amp = 0.0;
    double a_bar_max = 0.0;    ///< trimmed maximum, also the event strength
    double alpha_r = 0.0;      ///< rejection factor
    std::size_t n_points = 0;
};

struct SpanInfo {
    std::vector<double> event_center;  ///< coordinates of the peak-amplitude member
    std::size_t peak_index = 0;        ///< point index of that member
    double beta_r = 0.0;
    std::size_t band_count = 0;
};

/// One cluster of the current cycle plus its cached statistics.
struct Partition {
    std::size_t label = 0;              ///< cluster index this partition started as
    std::vector<double> centroid;
    std::vector<std::size_t> members;   ///< indices into the active PointSet, ascending
    PartitionStats stats;
    SpanInfo span;
};

/// Groups points by cluster label; returns k partitions, possibly empty.
std::vector<Partition> build_partitions(const PointSet& ps,
                                        const std::vector<std::uint32_t>& assignment,
                                        const CentroidSet& centroids);

std::vector<double> member_amps(const Partition& part, const PointSet& ps);

}  // namespace ics
