#pragma once

// Synthetic benchmark fields: planted events plus background noise.
//
// Event profiles (r = distance to the source):
//   gaussian  A0 * exp(-r^2 / (2 sigma^2))
//   linear    A0 * max(0, 1 - r / (3 sigma))
// Noise, with Amax the largest event amplitude:
//   uniform     U[0, amp * Amax]
//   gaussian    N(mu * Amax, (sigma * Amax)^2), clamped at 0
//   sinusoidal  amp * Amax * (1 + sin(2 pi (x . u) / lambda)) / 2,
//               u = unit main diagonal, lambda = wavelength * diagonal length

#include "ics/field.hpp"
#include "ics/rng.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ics {

enum class Profile { gaussian, linear };
enum class NoiseKind { none, uniform, gaussian, sinusoidal };

Profile parse_profile(std::string_view name);
std::string_view to_string(Profile p);
NoiseKind parse_noise_kind(std::string_view name);
std::string_view to_string(NoiseKind k);

struct EventSpec {
    std::vector<double> source;
    double amplitude = 1.0;
    double sigma = 1.0;
    Profile profile = Profile::gaussian;

    double contribution(std::span<const double> x) const;
};

struct NoiseSpec {
    NoiseKind kind = NoiseKind::none;
    double amp = 0.0;         ///< fraction of Amax (uniform, sinusoidal)
    double mu = 0.0;          ///< fraction of Amax (gaussian)
    double sigma = 0.0;       ///< fraction of Amax (gaussian)
    double wavelength = 1.0;  ///< fraction of the domain diagonal (sinusoidal)

    void validate() const;
    /// Short label such as "gaussian-mu0.1-sigma0.2", used in corpus file names.
    std::string label() const;
    friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

struct GroundTruth {
    std::vector<EventSpec> events;
    NoiseSpec noise;
    std::uint64_t seed = 0;
};

struct SyntheticField {
    AmplitudeField field;
    GroundTruth truth;
};

/// Physical extent of each axis: (dims - 1) * spacing.
std::vector<double> axis_extents(std::span<const std::size_t> dims,
                                 std::span<const double> spacing);

SyntheticField generate(std::vector<std::size_t> dims, std::vector<double> spacing,
                        std::vector<EventSpec> events, const NoiseSpec& noise,
                        std::uint64_t rng_seed);

struct CorpusSpec {
    std::size_t n_base = 20;
    std::size_t min_events = 3;
    std::size_t max_events = 6;
    std::vector<std::size_t> dims = {128, 128};
    std::vector<double> spacing = {1.0, 1.0};
    double amp_min = 0.4;
    double amp_max = 1.0;
    double sigma_min = 3.0;
    double sigma_max = 8.0;
    Profile profile = Profile::gaussian;
    bool include_noisefree = true;
    std::vector<NoiseSpec> noise_variants = default_noise_variants();
    std::size_t max_placement_retries = 10000;

    /// The six noisy settings of the accuracy study.
    static std::vector<NoiseSpec> default_noise_variants();
    void validate() const;
};

struct CorpusItem {
    std::string name;
    std::size_t base_index = 0;
    std::string variant;  ///< "noisefree" or NoiseSpec::label()
    AmplitudeField field;
    GroundTruth truth;
};

/// Random non-overlapping events: pairwise source distance >= 3 (sigma_i + sigma_j),
/// each source at least one sigma inside the extents. Throws when placement fails.
std::vector<EventSpec> place_events(const CorpusSpec& spec, std::size_t n_events, Rng& rng);

/// Base images in order, each followed by its noise variants (noisefree first).
std::vector<CorpusItem> corpus(const CorpusSpec& spec, std::uint64_t seed);

}  // namespace ics
