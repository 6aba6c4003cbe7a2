#include "anares/pipeline.hpp"

#include <chrono>
#include <fstream>

#include "anares/errors.hpp"
#include "anares/jsonl.hpp"
#include "anares/response_parser.hpp"
#include "anares/version.hpp"

namespace anares {

Prediction prediction_from_json(const json& j) {
  Prediction p;
  if (!j.contains("id"))
    throw Error(Errc::schema_error, "prediction without id");
  p.id = j.at("id").is_string() ? j.at("id").get<std::string>()
                                : j.at("id").dump();
  int forms = 0;
  if (j.contains("answer") && !j.at("answer").is_null()) {
    p.answer = j.at("answer").get<std::string>();
    ++forms;
  }
  if (j.contains("tagged") && !j.at("tagged").is_null()) {
    p.tagged = j.at("tagged").get<std::string>();
    ++forms;
  }
  if (j.contains("span") && !j.at("span").is_null()) {
    const json& s = j.at("span");
    p.span = Span{s.at("start").get<std::size_t>(),
                  s.at("end").get<std::size_t>()};
    ++forms;
  }
  if (forms > 1)
    throw Error(Errc::schema_error,
                "prediction " + p.id + " carries more than one form");
  return p;
}

json prediction_to_json(const Prediction& p) {
  json j = {{"id", p.id}};
  if (p.answer) j["answer"] = *p.answer;
  if (p.tagged) j["tagged"] = *p.tagged;
  if (p.span) j["span"] = {{"start", p.span->start}, {"end", p.span->end}};
  return j;
}

std::vector<Prediction> read_predictions(const std::filesystem::path& path) {
  std::vector<Prediction> out;
  for_each_jsonl(path, [&](std::size_t, const json& j) {
    out.push_back(prediction_from_json(j));
  });
  return out;
}

void write_predictions(const std::filesystem::path& path,
                       const std::vector<Prediction>& predictions) {
  std::vector<json> rows;
  rows.reserve(predictions.size());
  for (const Prediction& p : predictions) rows.push_back(prediction_to_json(p));
  write_jsonl(path, rows);
}

ScoreResult score_prediction(const Prediction& prediction,
                             const Passage& passage) {
  Tokenization tokens = Tokenization::of(passage.text);
  try {
    if (prediction.answer)
      return score_answer_string(*prediction.answer, passage, tokens);
    if (prediction.tagged)
      return score_tagged_sentence(*prediction.tagged, passage, tokens);
    if (prediction.span)
      return score_span(*prediction.span, passage.antecedent_root,
                        passage.antecedent_subtree, tokens);
  } catch (const Error&) {
    return ScoreResult::fail(Failure::format_error);
  }
  return ScoreResult::fail(Failure::no_prediction);
}

std::vector<std::pair<std::string, ScoreResult>> score_predictions(
    const Dataset& dataset, const std::vector<Prediction>& predictions) {
  std::vector<std::pair<std::string, ScoreResult>> results;
  results.reserve(predictions.size());
  for (const Prediction& p : predictions) {
    const Passage* passage = dataset.find(p.id);
    if (!passage)
      throw Error(Errc::unknown_id, "prediction id " + p.id);
    results.emplace_back(p.id, score_prediction(p, *passage));
  }
  return results;
}

ScoreResult score_yesno_response(const std::string& raw, bool expected_yes,
                                 bool strict) {
  ParsedResponse parsed = parse_yesno(raw, strict);
  if (parsed.kind == ParsedResponse::Kind::format_error)
    return ScoreResult::fail(raw.find_first_not_of(" \t\r\n") ==
                                     std::string::npos
                                 ? Failure::no_prediction
                                 : Failure::format_error);
  bool said_yes = parsed.kind == ParsedResponse::Kind::yes;
  if (said_yes == expected_yes) return ScoreResult::ok();
  return ScoreResult::fail(Failure::wrong_label);
}

json score_result_to_json(const std::string& id, const ScoreResult& r) {
  json j = {{"id", id},
            {"verdict", r.correct() ? "correct" : "incorrect"}};
  if (r.failure) j["failure"] = to_string(*r.failure);
  if (r.ambiguous) j["ambiguous"] = true;
  return j;
}

std::pair<std::string, ScoreResult> score_result_from_json(const json& j) {
  std::string id = j.at("id").is_string() ? j.at("id").get<std::string>()
                                          : j.at("id").dump();
  ScoreResult r;
  std::string verdict = j.at("verdict").get<std::string>();
  r.verdict = verdict == "correct" ? Verdict::correct : Verdict::incorrect;
  if (j.contains("failure")) {
    auto f = parse_failure(j.at("failure").get<std::string>());
    if (!f)
      throw Error(Errc::schema_error,
                  "unknown failure \"" + j.at("failure").dump() + "\"");
    r.failure = f;
  }
  if (r.correct() == r.failure.has_value())
    throw Error(Errc::schema_error,
                "result " + id + ": verdict and failure disagree");
  if (j.contains("ambiguous")) r.ambiguous = j.at("ambiguous").get<bool>();
  return {id, r};
}

void write_results(
    const std::filesystem::path& path,
    const std::vector<std::pair<std::string, ScoreResult>>& results) {
  std::vector<json> rows;
  rows.reserve(results.size());
  for (const auto& [id, r] : results) rows.push_back(score_result_to_json(id, r));
  write_jsonl(path, rows);
}

std::vector<std::pair<std::string, ScoreResult>> read_results(
    const std::filesystem::path& path) {
  std::vector<std::pair<std::string, ScoreResult>> out;
  for_each_jsonl(path, [&](std::size_t, const json& j) {
    out.push_back(score_result_from_json(j));
  });
  return out;
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::uint64_t h = 1469598103934665603ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ULL;
    }
    if (!in) break;
  }
  return h;
}

json make_manifest(const std::string& command, const json& config,
                   const std::vector<std::filesystem::path>& inputs) {
  json m;
  m["tool_version"] = kToolVersion;
  m["command"] = command;
  m["timestamp_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count();
  m["config"] = config;
  m["inputs"] = json::object();
  for (const auto& p : inputs) {
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a64_file(p)));
    m["inputs"][p.string()] = std::string("fnv1a64:") + hex;
  }
  return m;
}

void write_manifest(const std::filesystem::path& path, const json& manifest) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  out << manifest.dump(2) << "\n";
}

}  // namespace anares
