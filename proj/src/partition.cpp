#include "ics/partition.hpp"

#include "ics/errors.hpp"

namespace ics {

std::vector<Partition> build_partitions(const PointSet& ps,
                                        const std::vector<std::uint32_t>& assignment,
                                        const CentroidSet& centroids) {
    if (assignment.size() != ps.size()) {
        throw InvalidDataError("assignment length does not match point count");
    }
    std::vector<Partition> parts(centroids.k());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        parts[i].label = i;
        auto c = centroids[i];
        parts[i].centroid.assign(c.begin(), c.end());
    }
    for (std::size_t j = 0; j < assignment.size(); ++j) {
        if (assignment[j] >= parts.size()) throw InvalidDataError("assignment index out of range");
        parts[assignment[j]].members.push_back(j);
    }
    return parts;
}

std::vector<double> member_amps(const Partition& part, const PointSet& ps) {
    std::vector<double> out;
    out.reserve(part.members.size());
    for (std::size_t j : part.members) out.push_back(ps.amp(j));
    return out;
}

}  // namespace ics
