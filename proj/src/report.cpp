#include "anares/report.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "anares/errors.hpp"

namespace anares {

using json = nlohmann::json;

const char* to_string(DistanceBucket b) {
  switch (b) {
    case DistanceBucket::cataphora: return "cataphora";
    case DistanceBucket::anaphor_in_antecedent: return "anaphor_in_antecedent";
    case DistanceBucket::d0_5: return "0-5";
    case DistanceBucket::d6_10: return "6-10";
    case DistanceBucket::d11_20: return "11-20";
    case DistanceBucket::d21_30: return "21-30";
    case DistanceBucket::d31_plus: return "31+";
  }
  return "?";
}

DistanceBucket bucket_distance(const AnaphoraMetadata& meta) {
  if (meta.anaphor_in_antecedent) return DistanceBucket::anaphor_in_antecedent;
  if (meta.distance < 0) return DistanceBucket::cataphora;
  long d = meta.distance;
  if (d <= 5) return DistanceBucket::d0_5;
  if (d <= 10) return DistanceBucket::d6_10;
  if (d <= 20) return DistanceBucket::d11_20;
  if (d <= 30) return DistanceBucket::d21_30;
  return DistanceBucket::d31_plus;
}

double StratifiedReport::format_error_rate() const {
  if (overall.total == 0) return 0.0;
  auto it = failures.find(Failure::format_error);
  std::uint64_t n = it == failures.end() ? 0 : it->second;
  return static_cast<double>(n) / static_cast<double>(overall.total);
}

StratifiedReport aggregate(
    const std::vector<std::pair<std::string, ScoreResult>>& results,
    const Dataset& dataset) {
  StratifiedReport rep;
  std::set<std::string> seen;
  for (const auto& [id, result] : results) {
    const Passage* p = dataset.find(id);
    if (!p) throw Error(Errc::unknown_id, "result id " + id);
    if (!seen.insert(id).second)
      throw Error(Errc::duplicate_id, "result id " + id);

    const AnaphoraMetadata& m = p->metadata;
    std::uint64_t hit = result.correct() ? 1 : 0;
    auto bump = [hit](Cell& c) {
      c.correct += hit;
      c.total += 1;
    };
    bump(rep.overall);
    bump(rep.by_coref[m.coref_type]);
    bump(rep.by_pron_coref[{m.pronoun_category, m.coref_type}]);
    bump(rep.by_distance[bucket_distance(m)]);
    bump(rep.by_subcorpus[m.subcorpus]);
    if (result.failure) rep.failures[*result.failure] += 1;
    if (result.ambiguous) rep.ambiguous_matches += 1;
  }
  return rep;
}

namespace {

std::string round3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

json cell_json(const Cell& c) {
  return {{"correct", c.correct}, {"total", c.total},
          {"accuracy", c.accuracy()}};
}

constexpr DistanceBucket kBucketOrder[] = {
    DistanceBucket::cataphora, DistanceBucket::anaphor_in_antecedent,
    DistanceBucket::d0_5,      DistanceBucket::d6_10,
    DistanceBucket::d11_20,    DistanceBucket::d21_30,
    DistanceBucket::d31_plus,
};

constexpr PronounCategory kCategoryOrder[] = {
    PronounCategory::indef,
    PronounCategory::def_pers,
    PronounCategory::def_demon,
};

constexpr Subcorpus kSubcorpusOrder[] = {
    Subcorpus::pdt,
    Subcorpus::pcedt,
    Subcorpus::pdtsc,
};

}  // namespace

std::string emit_json(const StratifiedReport& rep) {
  json j;
  j["overall"] = cell_json(rep.overall);
  j["by_coref_type"] = json::object();
  for (const auto& [type, cell] : rep.by_coref)
    j["by_coref_type"][to_string(type)] = cell_json(cell);
  j["by_pronoun_category"] = json::object();
  for (const auto& [key, cell] : rep.by_pron_coref)
    j["by_pronoun_category"][to_string(key.first)][to_string(key.second)] =
        cell_json(cell);
  j["by_distance"] = json::object();
  for (const auto& [bucket, cell] : rep.by_distance)
    j["by_distance"][to_string(bucket)] = cell_json(cell);
  j["by_subcorpus"] = json::object();
  for (const auto& [sub, cell] : rep.by_subcorpus)
    j["by_subcorpus"][to_string(sub)] = cell_json(cell);
  j["failures"] = json::object();
  for (const auto& [f, n] : rep.failures) j["failures"][to_string(f)] = n;
  j["format_error_rate"] = rep.format_error_rate();
  j["ambiguous_matches"] = rep.ambiguous_matches;
  return j.dump(2) + "\n";
}

std::string emit_csv(const StratifiedReport& rep) {
  std::ostringstream out;
  out << "axis,key,correct,total,accuracy\n";
  auto row = [&out](const std::string& axis, const std::string& key,
                    const Cell& c) {
    out << axis << ",\"" << key << "\"," << c.correct << "," << c.total << ","
        << round3(c.accuracy()) << "\n";
  };
  row("overall", "all", rep.overall);
  for (const auto& [type, cell] : rep.by_coref)
    row("coref_type", to_string(type), cell);
  for (const auto& [key, cell] : rep.by_pron_coref)
    row("pronoun_category",
        std::string(to_string(key.first)) + "/" + to_string(key.second), cell);
  for (const auto& [bucket, cell] : rep.by_distance)
    row("distance", to_string(bucket), cell);
  for (const auto& [sub, cell] : rep.by_subcorpus)
    row("subcorpus", to_string(sub), cell);
  return out.str();
}

std::string emit_markdown(const StratifiedReport& rep) {
  std::ostringstream out;
  out << "# Accuracy report\n\n";
  if (rep.overall.total == 0) {
    out << "No scored passages (zero-count report).\n";
    return out.str();
  }

  out << "Overall accuracy: **" << round3(rep.overall.accuracy()) << "** ("
      << rep.overall.correct << "/" << rep.overall.total << ")\n\n";

  out << "## By anaphora type\n\n";
  out << "| Type | Accuracy | Correct | Total |\n";
  out << "|---|---|---|---|\n";
  for (const auto& [type, cell] : rep.by_coref)
    out << "| " << to_string(type) << " | " << round3(cell.accuracy()) << " | "
        << cell.correct << " | " << cell.total << " |\n";
  out << "\n";

  out << "## By pronoun category and anaphora type\n\n";
  out << "| | Grammatical | Textual | Average |\n";
  out << "|---|---|---|---|\n";
  for (PronounCategory cat : kCategoryOrder) {
    Cell merged;
    std::string cols;
    for (CorefType type : {CorefType::grammatical, CorefType::textual}) {
      auto it = rep.by_pron_coref.find({cat, type});
      if (it == rep.by_pron_coref.end()) {
        cols += " - |";
      } else {
        cols += " " + round3(it->second.accuracy()) + " |";
        merged.correct += it->second.correct;
        merged.total += it->second.total;
      }
    }
    if (merged.total == 0) continue;  // absent row
    out << "| " << to_string(cat) << " |" << cols << " "
        << round3(merged.accuracy()) << " |\n";
  }
  out << "\n";

  out << "## By antecedent distance\n\n";
  out << "| Distance | Accuracy | Correct | Total |\n";
  out << "|---|---|---|---|\n";
  for (DistanceBucket b : kBucketOrder) {
    auto it = rep.by_distance.find(b);
    if (it == rep.by_distance.end()) continue;
    out << "| " << to_string(b) << " | " << round3(it->second.accuracy())
        << " | " << it->second.correct << " | " << it->second.total << " |\n";
  }
  out << "\n";

  out << "## By subcorpus\n\n";
  out << "| Subcorpus | Accuracy | Correct | Total |\n";
  out << "|---|---|---|---|\n";
  for (Subcorpus s : kSubcorpusOrder) {
    auto it = rep.by_subcorpus.find(s);
    if (it == rep.by_subcorpus.end()) continue;
    out << "| " << to_string(s) << " | " << round3(it->second.accuracy())
        << " | " << it->second.correct << " | " << it->second.total << " |\n";
  }
  out << "\n";

  if (!rep.failures.empty()) {
    out << "## Failure breakdown\n\n";
    out << "| Failure | Count |\n";
    out << "|---|---|\n";
    for (const auto& [f, n] : rep.failures)
      out << "| " << to_string(f) << " | " << n << " |\n";
    out << "\n";
  }
  out << "Format-error rate: " << round3(rep.format_error_rate()) << "\n";
  if (rep.ambiguous_matches > 0)
    out << "\nAnswers matching at several places (any-occurrence credit): "
        << rep.ambiguous_matches << "\n";
  return out.str();
}

}  // namespace anares
