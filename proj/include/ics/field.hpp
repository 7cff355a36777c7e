#pragma once

// Amplitude grids and the flat point sets the clustering stages operate on.

#include <cstddef>
#include <span>
#include <vector>

namespace ics {

inline constexpr std::size_t kMaxDims = 4;

/// Dense row-major grid of amplitude samples, 1 to 4 axes.
struct AmplitudeField {
    std::vector<std::size_t> dims;
    std::vector<double> spacing;
    std::vector<double> values;

    std::size_t ndim() const { return dims.size(); }
    std::size_t size() const { return values.size(); }

    /// Throws InvalidDataError when dims/spacing/values are inconsistent.
    void validate() const;

    /// Unit spacing, zero-filled.
    static AmplitudeField zeros(std::vector<std::size_t> dims);

    /// Row-major grid index of each axis for flat offset `flat`.
    std::vector<std::size_t> unravel(std::size_t flat) const;
    std::size_t ravel(std::span<const std::size_t> index) const;
};

/// Surviving (coordinates, normalized amplitude) records.
///
/// Amplitudes are normalized once against the original field bounds
/// (`norm_min`, `norm_max`); deleting points never renormalizes.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::size_t ndim, std::vector<double> coords, std::vector<double> amps,
             double norm_min = 0.0, double norm_max = 1.0);

    std::size_t size() const { return amps_.size(); }
    bool empty() const { return amps_.empty(); }
    std::size_t ndim() const { return ndim_; }

    std::span<const double> coord(std::size_t i) const {
        return {coords_.data() + i * ndim_, ndim_};
    }
    double amp(std::size_t i) const { return amps_[i]; }

    std::span<const double> coords() const { return coords_; }
    std::span<const double> amps() const { return amps_; }

    double norm_min() const { return norm_min_; }
    double norm_max() const { return norm_max_; }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t ndim_ = 0;
    std::vector<double> coords_;  // size() * ndim_, row-major
    std::vector<double> amps_;
    double norm_min_ = 0.0;
    double norm_max_ = 1.0;
};

/// Min-max normalizes the field into a point set with coords = index * spacing.
/// A constant field maps to all-zero amplitudes.
PointSet to_point_set(const AmplitudeField& field);

/// Copy of `ps` without the listed points. Duplicate indices are ignored;
/// out-of-range indices throw InvalidDataError.
PointSet delete_points(const PointSet& ps, std::span<const std::size_t> indices);

double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);

}  // namespace ics
