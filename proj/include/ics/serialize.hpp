#pragma once

// JSON/CSV forms of reports, truth sidecars, scores and sweep results.

#include "ics/driver.hpp"
#include "ics/eval.hpp"
#include "ics/synth.hpp"

#include <filesystem>
#include <iosfwd>
#include <json.hpp>
#include <string>

namespace ics {

using Json = nlohmann::ordered_json;

Json to_json(const IcsConfig& config);
IcsConfig config_from_json(const Json& j);

Json to_json(const DetectedEvent& ev);
Json to_json(const DetectionReport& report);
DetectionReport report_from_json(const Json& j);

Json to_json(const NoiseSpec& noise);
NoiseSpec noise_from_json(const Json& j);

/// {"events":[...], "noise":{...}, "seed":n} plus optional "field" file name.
Json to_json(const GroundTruth& truth, const std::string& field_file = {});
GroundTruth truth_from_json(const Json& j);

Json to_json(const ScoreResult& score);

Json to_json(const SweepResult& sweep);
/// Header: axis_value,mean_accuracy,std_accuracy,n_runs,seed
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);
SweepResult read_sweep_csv(std::istream& in);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ics
