#include "ics/field.hpp"

#include "ics/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace ics {

void AmplitudeField::validate() const {
    if (dims.empty() || dims.size() > kMaxDims) {
        throw InvalidDataError("field must have between 1 and 4 axes, got " +
                               std::to_string(dims.size()));
    }
    if (spacing.size() != dims.size()) {
        throw InvalidDataError("spacing length does not match number of axes");
    }
    for (double s : spacing) {
        if (!(s > 0.0) || !std::isfinite(s)) throw InvalidDataError("spacing must be positive");
    }
    const std::size_t expected =
        std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    if (expected != values.size()) {
        throw InvalidDataError("field holds " + std::to_string(values.size()) +
                               " values but dims imply " + std::to_string(expected));
    }
}

AmplitudeField AmplitudeField::zeros(std::vector<std::size_t> dims) {
    AmplitudeField f;
    const std::size_t n =
        std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    f.spacing.assign(dims.size(), 1.0);
    f.dims = std::move(dims);
    f.values.assign(n, 0.0);
    return f;
}

std::vector<std::size_t> AmplitudeField::unravel(std::size_t flat) const {
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t a = dims.size(); a-- > 0;) {
        idx[a] = flat % dims[a];
        flat /= dims[a];
    }
    return idx;
}

std::size_t AmplitudeField::ravel(std::span<const std::size_t> index) const {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < dims.size(); ++a) flat = flat * dims[a] + index[a];
    return flat;
}

PointSet::PointSet(std::size_t ndim, std::vector<double> coords, std::vector<double> amps,
                   double norm_min, double norm_max)
    : ndim_(ndim),
      coords_(std::move(coords)),
      amps_(std::move(amps)),
      norm_min_(norm_min),
      norm_max_(norm_max) {
    if (ndim_ == 0 && !amps_.empty()) throw InvalidDataError("point set needs ndim >= 1");
    if (coords_.size() != amps_.size() * ndim_) {
        throw InvalidDataError("point set coordinate count does not match ndim * points");
    }
    for (double a : amps_) {
        if (!(a >= 0.0 && a <= 1.0)) throw InvalidDataError("point amplitude outside [0, 1]");
    }
}

PointSet to_point_set(const AmplitudeField& field) {
    if (field.values.empty()) throw InvalidDataError("empty field");
    field.validate();

    const auto [lo_it, hi_it] = std::minmax_element(field.values.begin(), field.values.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw InvalidDataError("field contains non-finite amplitudes");
    }
    const double range = hi - lo;

    const std::size_t d = field.ndim();
    const std::size_t n = field.size();
    std::vector<double> coords(n * d);
    std::vector<double> amps(n);
    std::vector<std::size_t> idx(d, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < d; ++a) {
            coords[i * d + a] = static_cast<double>(idx[a]) * field.spacing[a];
        }
        amps[i] = range > 0.0 ? std::clamp((field.values[i] - lo) / range, 0.0, 1.0) : 0.0;
        // odometer increment, last axis fastest
        for (std::size_t a = d; a-- > 0;) {
            if (++idx[a] < field.dims[a]) break;
            idx[a] = 0;
        }
    }
    return PointSet(d, std::move(coords), std::move(amps), lo, hi);
}

PointSet delete_points(const PointSet& ps, std::span<const std::size_t> indices) {
    std::vector<char> drop(ps.size(), 0);
    for (std::size_t i : indices) {
        if (i >= ps.size()) {
            throw InvalidDataError("delete index " + std::to_string(i) + " out of range (size " +
                                   std::to_string(ps.size()) + ")");
        }
        drop[i] = 1;
    }
    const std::size_t d = ps.ndim();
    std::vector<double> coords;
    std::vector<double> amps;
    coords.reserve(ps.coords().size());
    amps.reserve(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (drop[i]) continue;
        auto c = ps.coord(i);
        coords.insert(coords.end(), c.begin(), c.end());
        amps.push_back(ps.amp(i));
    }
    return PointSet(d, std::move(coords), std::move(amps), ps.norm_min(), ps.norm_max());
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = a[i] - b[i];
        s += t * t;
    }
    return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

}  // namespace ics
