#include "oracle.hpp"

#include <set>

#include "anares/textnorm.hpp"
#include "anares/utf8.hpp"

namespace anares::testsupport {

OracleScorer::OracleScorer(std::string_view text_utf8) {
  std::u32string text = utf8::decode(text_utf8);
  token_of_cp_.assign(text.size(), -1);
  int current = -1;
  bool in_word = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char32_t cp = text[i];
    if (is_space_cp(cp)) {
      in_word = false;
      continue;
    }
    if (is_word_cp(cp)) {
      if (!in_word) ++current;
      in_word = true;
    } else {
      ++current;  // every punctuation codepoint is its own token
      in_word = false;
    }
    token_of_cp_[i] = current;
  }
  n_tokens_ = static_cast<std::size_t>(current + 1);
}

Span OracleScorer::token_span(std::size_t i) const {
  std::size_t first = 0, last = 0;
  bool seen = false;
  for (std::size_t cp = 0; cp < token_of_cp_.size(); ++cp) {
    if (token_of_cp_[cp] == static_cast<int>(i)) {
      if (!seen) first = cp;
      last = cp;
      seen = true;
    }
  }
  return Span{first, last + 1};
}

ScoreResult OracleScorer::score(Span predicted, Span gold_root,
                                Span gold_subtree) const {
  // criterion 1: every codepoint of the gold root lies in the prediction
  for (std::size_t cp = gold_root.start; cp < gold_root.end; ++cp)
    if (cp < predicted.start || cp >= predicted.end)
      return ScoreResult::fail(Failure::root_missing);

  // criterion 2: the token set touched by the prediction is a subset of
  // the token set touched by the gold subtree
  std::set<int> pred_tokens, gold_tokens;
  for (std::size_t cp = predicted.start; cp < predicted.end; ++cp)
    if (token_of_cp_[cp] >= 0) pred_tokens.insert(token_of_cp_[cp]);
  for (std::size_t cp = gold_subtree.start; cp < gold_subtree.end; ++cp)
    if (token_of_cp_[cp] >= 0) gold_tokens.insert(token_of_cp_[cp]);
  for (int t : pred_tokens)
    if (!gold_tokens.contains(t))
      return ScoreResult::fail(Failure::containment_violated);

  // criterion 3: a single Span is contiguous by construction
  return ScoreResult::ok();
}

}  // namespace anares::testsupport
