#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anares/corpus.hpp"

namespace anares {

enum class Strategy { yes_no, question_answering, tagging };

const char* to_string(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& s);

struct PromptInstance {
  Strategy strategy = Strategy::question_answering;
  int shots = 0;
  std::string rendered;
  std::string passage_id;
  std::optional<std::string> candidate;  // yes_no only
  std::optional<bool> expected_yes;      // yes_no only
};

// Renders one prompt. Few-shot exemplars are prepended as fully answered
// blocks; the query block ends right after "ANSWER: ". Yes/No requires a
// candidate and takes no exemplars.
PromptInstance render(Strategy strategy, const Passage& passage,
                      const std::vector<Passage>& exemplars,
                      std::optional<std::string> candidate = std::nullopt);

// Deterministic exemplar pick from the training split. Three-shot picks
// always mix both anaphora types.
std::vector<Passage> select_exemplars(const Dataset& dataset, int k,
                                      std::uint64_t seed);

struct YesNoPair {
  std::string passage_id;
  std::string candidate;
  bool expected_yes = true;
};

// One Yes/No item per passage of the split: positives quote the gold
// antecedent subtree, negatives a distractor phrase that fails the
// scoring criteria. Passages without a usable distractor stay positive.
std::vector<YesNoPair> make_yesno_pairs(const Dataset& dataset, Split split,
                                        double negative_ratio,
                                        std::uint64_t seed);

}  // namespace anares
