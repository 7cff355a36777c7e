#pragma once

#include "ics/field.hpp"
#include "ics/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ics {

/// k centroids of dimension ndim, stored row-major.
class CentroidSet {
public:
    CentroidSet() = default;
    CentroidSet(std::size_t ndim, std::vector<double> data);

    std::size_t k() const { return ndim_ ? data_.size() / ndim_ : 0; }
    std::size_t ndim() const { return ndim_; }

    std::span<const double> operator[](std::size_t i) const {
        return {data_.data() + i * ndim_, ndim_};
    }
    std::span<double> mutable_centroid(std::size_t i) { return {data_.data() + i * ndim_, ndim_}; }

    std::span<const double> data() const { return data_; }

    friend bool operator==(const CentroidSet&, const CentroidSet&) = default;

private:
    std::size_t ndim_ = 0;
    std::vector<double> data_;
};

/// Number of distinct coordinate vectors in `ps`, counting stops at `limit`.
std::size_t count_distinct_points(const PointSet& ps, std::size_t limit);

/// k-means++ seeding over spatial coordinates only.
///
/// The first centroid is uniform over points (or `first_index` if given);
/// each subsequent one is drawn with probability D(x)^2 / sum D^2. If every
/// remaining D(x) is zero the draw falls back to uniform over unchosen points.
CentroidSet seed_kmeanspp(const PointSet& ps, std::size_t k, Rng& rng,
                          std::optional<std::size_t> first_index = std::nullopt);

CentroidSet seed_kmeanspp(const PointSet& ps, std::size_t k, std::uint64_t rng_seed);

}  // namespace ics
