#pragma once

#include "ics/driver.hpp"
#include "ics/synth.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ics {

struct MatchPair {
    std::size_t truth = 0;
    std::size_t detection = 0;
    double distance = 0.0;
};

struct ScoreResult {
    std::size_t matched = 0;
    std::size_t n_true = 0;
    std::size_t n_detected = 0;
    double accuracy = 0.0;
    std::size_t false_positives = 0;
    double r_match = 0.0;
    std::vector<MatchPair> pairs;
};

/// Greedy one-to-one matching: detections in acceptance order each claim the
/// nearest unclaimed true source within r_match (ties: lowest truth index).
/// r_match defaults to the largest truth sigma.
ScoreResult score(const std::vector<EventSpec>& truth,
                  const std::vector<std::vector<double>>& detections,
                  std::optional<double> r_match = std::nullopt);

ScoreResult score(const std::vector<EventSpec>& truth, const std::vector<DetectedEvent>& detections,
                  std::optional<double> r_match = std::nullopt);

enum class SweepAxis { nc_ratio, k0, p, alpha_cutoff, beta_c, epsilon };

SweepAxis parse_sweep_axis(std::string_view name);
std::string_view to_string(SweepAxis axis);

/// `config` with `axis` set to `value`; nc_ratio sets k0 = max(1, round(value * n_events)).
IcsConfig apply_axis(IcsConfig config, SweepAxis axis, double value, std::size_t n_events);

struct SweepInput {
    std::string name;
    AmplitudeField field;
    GroundTruth truth;
};

struct SweepRow {
    double value = 0.0;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
    std::size_t n_runs = 0;
    std::size_t n_errors = 0;
};

struct SweepResult {
    SweepAxis axis = SweepAxis::nc_ratio;
    std::uint64_t seed = 0;
    std::size_t repeats = 1;
    std::vector<SweepRow> rows;
};

struct SweepOptions {
    SweepAxis axis = SweepAxis::nc_ratio;
    std::vector<double> values;
    std::size_t repeats = 10;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    std::optional<double> r_match;
};

/// Seed of the detect run for (repeat, item); identical across axis values.
std::uint64_t sweep_run_seed(std::uint64_t seed, std::size_t repeat, std::size_t item);

/// For every axis value runs detect over items x repeats and averages accuracy.
/// Per-run failures are counted in n_errors and left out of the mean.
SweepResult sweep(const std::vector<SweepInput>& items, const IcsConfig& config_template,
                  const SweepOptions& options);

std::vector<SweepInput> to_sweep_inputs(const std::vector<CorpusItem>& items);

}  // namespace ics
