#pragma once

// NDGRID binary and 2D CSV readers/writers for AmplitudeField.
//
// NDGRID layout (all little-endian):
//   "NDG1" | u8 ndim | ndim x u32 dims | ndim x f64 spacing | prod(dims) x f64 values
// Values are row-major, last axis fastest.

#include "ics/field.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace ics {

void write_ndgrid(std::ostream& out, const AmplitudeField& field);
AmplitudeField read_ndgrid(std::istream& in);

void write_ndgrid_file(const std::filesystem::path& path, const AmplitudeField& field);
AmplitudeField read_ndgrid_file(const std::filesystem::path& path);

/// Rows are the first axis. Only 2D fields are accepted; spacing is not stored.
void write_csv(std::ostream& out, const AmplitudeField& field);
AmplitudeField read_csv(std::istream& in);

void write_csv_file(const std::filesystem::path& path, const AmplitudeField& field);
AmplitudeField read_csv_file(const std::filesystem::path& path);

/// Dispatches on extension: ".csv" reads CSV, anything else NDGRID.
AmplitudeField read_field_file(const std::filesystem::path& path);
void write_field_file(const std::filesystem::path& path, const AmplitudeField& field);

}  // namespace ics
