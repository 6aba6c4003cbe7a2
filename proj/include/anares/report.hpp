#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "anares/corpus.hpp"
#include "anares/scorer.hpp"

namespace anares {

enum class DistanceBucket {
  cataphora,
  anaphor_in_antecedent,
  d0_5,
  d6_10,
  d11_20,
  d21_30,
  d31_plus,
};

const char* to_string(DistanceBucket b);

// Total classification: the in-antecedent flag wins, then the distance
// sign (negative = antecedent after the anaphor), then absolute bins.
DistanceBucket bucket_distance(const AnaphoraMetadata& meta);

struct Cell {
  std::uint64_t correct = 0;
  std::uint64_t total = 0;

  double accuracy() const {
    return total == 0 ? 0.0
                      : static_cast<double>(correct) /
                            static_cast<double>(total);
  }
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Accuracy aggregates along the analysis axes. Maps hold only cells
// that were actually observed; an empty cell is absent, never 0.0.
struct StratifiedReport {
  Cell overall;
  std::map<CorefType, Cell> by_coref;
  std::map<std::pair<PronounCategory, CorefType>, Cell> by_pron_coref;
  std::map<DistanceBucket, Cell> by_distance;
  std::map<Subcorpus, Cell> by_subcorpus;
  std::map<Failure, std::uint64_t> failures;
  std::uint64_t ambiguous_matches = 0;

  double format_error_rate() const;
};

// Deterministic exact-count aggregation; accuracy is only rounded at
// emission time. Unknown and duplicate result ids are hard errors.
StratifiedReport aggregate(
    const std::vector<std::pair<std::string, ScoreResult>>& results,
    const Dataset& dataset);

std::string emit_json(const StratifiedReport& report);
std::string emit_csv(const StratifiedReport& report);
std::string emit_markdown(const StratifiedReport& report);

}  // namespace anares
