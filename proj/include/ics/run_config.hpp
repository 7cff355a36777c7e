#pragma once

// Flat `key = value` run configuration shared by the command-line tools.
// Blank lines and lines starting with '#' are ignored. Every key is
// optional; unknown keys and out-of-range values are rejected at load.
//
//   detector  k0 p alpha_cutoff beta_c epsilon bins significance
//             kmeans_max_iters kmeans_tol max_cycles seed span_reduce
//             remnant_check
//   noise     noise noise_amp noise_mu noise_sigma noise_wavelength
//   sweep     axis values repeats jobs r_match

#include "ics/driver.hpp"
#include "ics/eval.hpp"
#include "ics/synth.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ics {

struct RunConfig {
    IcsConfig detector;
    NoiseSpec noise;
    SweepAxis axis = SweepAxis::nc_ratio;
    std::vector<double> values = {1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0};
    std::size_t repeats = 10;
    std::size_t jobs = 1;
    std::optional<double> r_match;

    void validate() const;
};

/// Sets one key; throws InvalidDataError for unknown keys or bad values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

RunConfig parse_run_config(std::istream& in, const std::string& origin = "config");
/// Throws IoError when the file cannot be opened.
RunConfig load_run_config(const std::filesystem::path& path);

/// Strict number parsers; the whole string must be consumed.
double parse_double(std::string_view text, std::string_view what);
std::uint64_t parse_u64(std::string_view text, std::string_view what);
bool parse_bool(std::string_view text, std::string_view what);

/// "1,1.5,2" -> {1, 1.5, 2}
std::vector<double> parse_value_list(std::string_view text);

/// "128x128" or "64x64x64"
std::vector<std::size_t> parse_dims(std::string_view text);

/// "none", "uniform:amp=0.1", "gaussian:mu=0.1,sigma=0.2",
/// "sinusoidal:amp=1,wavelength=0.5"
NoiseSpec parse_noise_spec(std::string_view text);

}  // namespace ics
