#include "anares/scorer.hpp"

#include <algorithm>

#include "anares/errors.hpp"
#include "anares/tagged_text.hpp"
#include "anares/textnorm.hpp"
#include "anares/utf8.hpp"

namespace anares {

const char* to_string(Failure f) {
  switch (f) {
    case Failure::root_missing: return "root_missing";
    case Failure::containment_violated: return "containment_violated";
    case Failure::discontinuous: return "discontinuous";
    case Failure::format_error: return "format_error";
    case Failure::no_prediction: return "no_prediction";
    case Failure::wrong_label: return "wrong_label";
  }
  return "?";
}

std::optional<Failure> parse_failure(const std::string& s) {
  if (s == "root_missing") return Failure::root_missing;
  if (s == "containment_violated") return Failure::containment_violated;
  if (s == "discontinuous") return Failure::discontinuous;
  if (s == "format_error") return Failure::format_error;
  if (s == "no_prediction") return Failure::no_prediction;
  if (s == "wrong_label") return Failure::wrong_label;
  return std::nullopt;
}

Tokenization Tokenization::of(std::string_view text_utf8) {
  Tokenization t;
  t.text = utf8::decode(text_utf8);
  t.token_spans = split_tokens(t.text);
  return t;
}

std::optional<std::pair<std::size_t, std::size_t>> Tokenization::covered(
    Span s) const {
  std::optional<std::size_t> first, last;
  for (std::size_t i = 0; i < token_spans.size(); ++i) {
    if (token_spans[i].overlaps(s)) {
      if (!first) first = i;
      last = i;
    } else if (first && token_spans[i].start >= s.end) {
      break;
    }
  }
  if (!first) return std::nullopt;
  return std::make_pair(*first, *last);
}

namespace {

void check_in_range(Span s, std::size_t len, const char* what) {
  if (s.start >= s.end || s.end > len)
    throw Error(Errc::span_out_of_range,
                std::string(what) + " span " + to_string(s) +
                    " out of range for text of length " + std::to_string(len));
}

std::vector<Span> merge_segments(std::vector<Span> segments) {
  std::sort(segments.begin(), segments.end());
  std::vector<Span> merged;
  for (Span s : segments) {
    if (!merged.empty() && s.start <= merged.back().end)
      merged.back().end = std::max(merged.back().end, s.end);
    else
      merged.push_back(s);
  }
  return merged;
}

}  // namespace

ScoreResult score_segments(std::vector<Span> segments, Span gold_root,
                           Span gold_subtree, const Tokenization& tokens) {
  const std::size_t len = tokens.text.size();
  check_in_range(gold_root, len, "gold root");
  check_in_range(gold_subtree, len, "gold subtree");
  if (segments.empty()) return ScoreResult::fail(Failure::no_prediction);
  for (const Span& s : segments) check_in_range(s, len, "predicted");

  std::vector<Span> merged = merge_segments(std::move(segments));

  // 1. The gold root must sit inside one predicted segment.
  bool root_covered = std::any_of(
      merged.begin(), merged.end(),
      [&](const Span& s) { return s.contains(gold_root); });
  if (!root_covered) return ScoreResult::fail(Failure::root_missing);

  // 2. Token-snapped prediction inside the token-snapped gold subtree.
  auto gold_cov = tokens.covered(gold_subtree);
  for (const Span& s : merged) {
    auto cov = tokens.covered(s);
    if (!cov) continue;  // whitespace-only segment covers no token
    if (!gold_cov || cov->first < gold_cov->first ||
        cov->second > gold_cov->second)
      return ScoreResult::fail(Failure::containment_violated);
  }

  // 3. One contiguous interval.
  if (merged.size() > 1) return ScoreResult::fail(Failure::discontinuous);

  return ScoreResult::ok();
}

ScoreResult score_span(Span predicted, Span gold_root, Span gold_subtree,
                       const Tokenization& tokens) {
  return score_segments({predicted}, gold_root, gold_subtree, tokens);
}

namespace {

// Occurrences of `answer` in `text`, treating a single space in the
// answer as matching any whitespace run in the text.
std::vector<Span> find_occurrences(const std::u32string& text,
                                   const std::u32string& answer) {
  std::vector<Span> out;
  if (answer.empty()) return out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != answer[0]) continue;
    std::size_t ti = i;
    bool match = true;
    for (char32_t ac : answer) {
      if (ac == U' ') {
        if (ti >= text.size() || !is_space_cp(text[ti])) {
          match = false;
          break;
        }
        while (ti < text.size() && is_space_cp(text[ti])) ++ti;
      } else {
        if (ti >= text.size() || text[ti] != ac) {
          match = false;
          break;
        }
        ++ti;
      }
    }
    if (match) out.push_back(Span{i, ti});
  }
  return out;
}

int failure_rank(Failure f) {
  // How far a candidate got before failing; used to report the most
  // informative failure across multiple occurrences.
  switch (f) {
    case Failure::root_missing: return 0;
    case Failure::containment_violated: return 1;
    case Failure::discontinuous: return 2;
    default: return -1;
  }
}

}  // namespace

ScoreResult score_answer_string(const std::string& answer,
                                const Passage& passage,
                                const Tokenization& tokens) {
  std::u32string norm = utf8::decode(collapse_ws(answer));
  if (norm.empty()) return ScoreResult::fail(Failure::no_prediction);

  std::vector<Span> occurrences = find_occurrences(tokens.text, norm);
  if (occurrences.empty()) return ScoreResult::fail(Failure::format_error);

  bool ambiguous = occurrences.size() > 1;
  std::optional<ScoreResult> best_failure;
  for (const Span& occ : occurrences) {
    ScoreResult r = score_span(occ, passage.antecedent_root,
                               passage.antecedent_subtree, tokens);
    if (r.correct()) {
      r.ambiguous = ambiguous;
      return r;
    }
    if (!best_failure ||
        failure_rank(*r.failure) > failure_rank(*best_failure->failure))
      best_failure = r;
  }
  best_failure->ambiguous = ambiguous;
  return *best_failure;
}

ScoreResult score_tagged_sentence(const std::string& predicted_tagged,
                                  const Passage& passage,
                                  const Tokenization& tokens) {
  TaggedParse parsed;
  try {
    parsed = parse_tagged_text(predicted_tagged);
  } catch (const Error&) {
    return ScoreResult::fail(Failure::format_error);
  }

  // The output minus its <ant> pair must reproduce the anaphor-tagged
  // sentence; otherwise the model altered the text.
  std::string predicted_ana_only;
  try {
    predicted_ana_only =
        render_tagged_text(parsed.plain, parsed.ana, std::nullopt);
  } catch (const Error&) {
    return ScoreResult::fail(Failure::format_error);
  }
  if (collapse_ws(predicted_ana_only) != collapse_ws(passage.sentence_ana()))
    return ScoreResult::fail(Failure::format_error);

  if (!parsed.ant) return ScoreResult::fail(Failure::no_prediction);

  // Map the <ant> span onto the passage's coordinates; the texts agree
  // on their non-whitespace content after the check above.
  std::u32string predicted_plain = utf8::decode(parsed.plain);
  Span mapped;
  if (!remap_span_by_nonspace(predicted_plain, tokens.text, *parsed.ant,
                              mapped))
    return ScoreResult::fail(Failure::no_prediction);

  return score_span(mapped, passage.antecedent_root,
                    passage.antecedent_subtree, tokens);
}

}  // namespace anares
