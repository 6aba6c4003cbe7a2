#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anares/corpus.hpp"
#include "anares/span.hpp"

namespace anares {

enum class Verdict { correct, incorrect };

enum class Failure {
  root_missing,
  containment_violated,
  discontinuous,
  format_error,
  no_prediction,
  wrong_label,  // Yes/No classification only
};

const char* to_string(Failure f);
std::optional<Failure> parse_failure(const std::string& s);

struct ScoreResult {
  Verdict verdict = Verdict::incorrect;
  std::optional<Failure> failure;
  // Set when the scored answer string occurred at several places in the
  // passage; the verdict then rests on any-occurrence semantics.
  bool ambiguous = false;

  bool correct() const { return verdict == Verdict::correct; }

  static ScoreResult ok() { return {Verdict::correct, std::nullopt, false}; }
  static ScoreResult fail(Failure f) {
    return {Verdict::incorrect, f, false};
  }
};

// Deterministic whitespace-plus-punctuation tokenization, applied
// identically to gold and prediction sides. The metric's containment
// criterion is defined over these token boundaries.
struct Tokenization {
  std::u32string text;           // decoded passage text
  std::vector<Span> token_spans;  // ordered, non-overlapping

  static Tokenization of(std::string_view text_utf8);

  // First/last token index overlapped by span, if any token is touched.
  std::optional<std::pair<std::size_t, std::size_t>> covered(Span s) const;
};

// The relaxed span-level verdict: correct iff the prediction contains
// the whole gold root, its token-snapped extent stays inside the
// token-snapped gold subtree, and it is one contiguous interval.
// Failure reporting follows that order.
ScoreResult score_span(Span predicted, Span gold_root, Span gold_subtree,
                       const Tokenization& tokens);

// Same verdict over a possibly discontinuous prediction (tag-derived
// inputs); adjacent/overlapping segments are merged before the
// contiguity check.
ScoreResult score_segments(std::vector<Span> segments, Span gold_root,
                           Span gold_subtree, const Tokenization& tokens);

// Scores a surface answer by locating its occurrences in the passage
// text (whitespace-insensitively). Any correct occurrence gives credit;
// an answer absent from the text is a format error; an empty answer is
// no prediction.
ScoreResult score_answer_string(const std::string& answer,
                                const Passage& passage,
                                const Tokenization& tokens);

// Scores a model-produced tagged sentence: it must reproduce the
// passage's anaphor-tagged sentence (up to whitespace runs) with one
// <ant> pair added; anything else is a format error.
ScoreResult score_tagged_sentence(const std::string& predicted_tagged,
                                  const Passage& passage,
                                  const Tokenization& tokens);

}  // namespace anares
