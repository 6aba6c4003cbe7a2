#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "anares/corpus.hpp"
#include "anares/scorer.hpp"
#include "anares/span.hpp"

namespace anares {

// One scorable prediction: exactly one of the three forms, or none of
// them for an explicit abstention.
struct Prediction {
  std::string id;
  std::optional<std::string> answer;
  std::optional<std::string> tagged;
  std::optional<Span> span;
};

Prediction prediction_from_json(const json& j);
json prediction_to_json(const Prediction& p);
std::vector<Prediction> read_predictions(const std::filesystem::path& path);
void write_predictions(const std::filesystem::path& path,
                       const std::vector<Prediction>& predictions);

// Dispatches on the prediction form; malformed spans classify as
// format errors instead of aborting a batch.
ScoreResult score_prediction(const Prediction& prediction,
                             const Passage& passage);

// Scores every prediction against its passage. Unknown ids are errors.
std::vector<std::pair<std::string, ScoreResult>> score_predictions(
    const Dataset& dataset, const std::vector<Prediction>& predictions);

// Yes/No classification outcome against the expected label.
ScoreResult score_yesno_response(const std::string& raw, bool expected_yes,
                                 bool strict = false);

json score_result_to_json(const std::string& id, const ScoreResult& r);
std::pair<std::string, ScoreResult> score_result_from_json(const json& j);
void write_results(
    const std::filesystem::path& path,
    const std::vector<std::pair<std::string, ScoreResult>>& results);
std::vector<std::pair<std::string, ScoreResult>> read_results(
    const std::filesystem::path& path);

// FNV-1a over the file bytes; manifests record input hashes with it.
std::uint64_t fnv1a64_file(const std::filesystem::path& path);

// Reproducibility record written next to every command's outputs.
json make_manifest(const std::string& command, const json& config,
                   const std::vector<std::filesystem::path>& inputs);
void write_manifest(const std::filesystem::path& path, const json& manifest);

}  // namespace anares
