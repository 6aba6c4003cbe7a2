#include "anares/prompt.hpp"

#include <algorithm>
#include <random>

#include "anares/errors.hpp"
#include "anares/scorer.hpp"
#include "anares/textnorm.hpp"
#include "anares/utf8.hpp"

namespace anares {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::yes_no: return "yes_no";
    case Strategy::question_answering: return "question_answering";
    case Strategy::tagging: return "tagging";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(const std::string& s) {
  if (s == "yes_no" || s == "yesno" || s == "yes-no") return Strategy::yes_no;
  if (s == "question_answering" || s == "qa" || s == "question-answering")
    return Strategy::question_answering;
  if (s == "tagging" || s == "tag") return Strategy::tagging;
  return std::nullopt;
}

namespace {

constexpr const char* kYesNoTemplate =
    "You are an anaphora resolution system. In the following sentence: "
    "\"$sentence_ana$\" does \"$anaphora$\" refer to "
    "\"$antecedent_subtree$\" ? Respond only YES or NO. Do not include "
    "anything else in your response.";

constexpr const char* kQaInstructions =
    "INSTRUCTIONS: You are an anaphora resolution system. You are given a "
    "sentence in which a word is marked with <ana></ana> tags. Your task is "
    "to identify which passage of the sentence the mention marked in "
    "<ana></ana> refers to. Answer in format [X] where X is the passage of "
    "the sentence that the marked mention refers to. Do not change the "
    "grammatical form of this passage. Do not include anything else in your "
    "answer.";

constexpr const char* kTaggingInstructions =
    "INSTRUCTIONS: You are an anaphora resolution system. You are given a "
    "sentence in which a word is marked with <ana></ana> tags. Your task is "
    "to identify which passage of the sentence the mention marked in "
    "<ana></ana> refers to. Add <ant></ant> tags to the sentence around the "
    "part of the sentence that the mention marked in <ana></ana> refers to. "
    "Answer in format [X] where X is the original sentence with the "
    "<ant></ant> tags added. Do not include anything else in your answer.";

void substitute(std::string& text, const std::string& var,
                const std::string& value) {
  std::size_t pos = 0;
  while ((pos = text.find(var, pos)) != std::string::npos) {
    text.replace(pos, var.size(), value);
    pos += value.size();
  }
}

// SENTENCE/QUESTION/ANSWER block shared by the question-answering and
// tagging templates; `answer` empty renders the open query block.
std::string qa_block(const Passage& p, const std::string& answer) {
  std::string block = "SENTENCE: \"$sentence_ana$\"\n"
                      "QUESTION: Which passage of the sentence does "
                      "<ana>$anaphora$</ana> refer to? Answer in the format "
                      "as instructed\n"
                      "ANSWER: ";
  substitute(block, "$sentence_ana$", p.sentence_ana());
  substitute(block, "$anaphora$", p.anaphor_surface);
  if (!answer.empty()) block += "[" + answer + "]";
  return block;
}

}  // namespace

PromptInstance render(Strategy strategy, const Passage& passage,
                      const std::vector<Passage>& exemplars,
                      std::optional<std::string> candidate) {
  for (const Passage& ex : exemplars)
    if (ex.id == passage.id)
      throw Error(Errc::insufficient_exemplars,
                  "evaluation passage " + passage.id +
                      " appears among its own exemplars");

  PromptInstance out;
  out.strategy = strategy;
  out.shots = static_cast<int>(exemplars.size());
  out.passage_id = passage.id;

  if (strategy == Strategy::yes_no) {
    if (!candidate)
      throw Error(Errc::candidate_missing,
                  "Yes/No prompt needs a candidate antecedent");
    if (!exemplars.empty())
      throw Error(Errc::bad_shot_count, "Yes/No prompts are zero-shot only");
    std::string text = kYesNoTemplate;
    substitute(text, "$sentence_ana$", passage.sentence_ana());
    substitute(text, "$anaphora$", passage.anaphor_surface);
    substitute(text, "$antecedent_subtree$", *candidate);
    out.rendered = std::move(text);
    out.candidate = candidate;
    return out;
  }

  if (out.shots != 0 && out.shots != 1 && out.shots != 3)
    throw Error(Errc::bad_shot_count,
                std::to_string(out.shots) + "-shot prompts are not a "
                                            "supported setting");

  std::string text = strategy == Strategy::question_answering
                         ? kQaInstructions
                         : kTaggingInstructions;
  text += "\n";
  for (const Passage& ex : exemplars) {
    std::string gold = strategy == Strategy::question_answering
                           ? ex.antecedent_subtree_text()
                           : ex.sentence_ant_ana();
    text += qa_block(ex, gold);
    text += "\n";
  }
  text += qa_block(passage, "");
  out.rendered = std::move(text);
  return out;
}

std::vector<Passage> select_exemplars(const Dataset& dataset, int k,
                                      std::uint64_t seed) {
  if (k != 0 && k != 1 && k != 3)
    throw Error(Errc::bad_shot_count,
                "shot count must be 0, 1 or 3, got " + std::to_string(k));
  if (k == 0) return {};

  std::vector<const Passage*> train = dataset.split_view(Split::train);
  if (train.size() < static_cast<std::size_t>(k))
    throw Error(Errc::insufficient_exemplars,
                "training split holds " + std::to_string(train.size()) +
                    " passages, need " + std::to_string(k));

  std::mt19937_64 rng(seed);
  std::shuffle(train.begin(), train.end(), rng);

  std::vector<Passage> picked;
  for (int i = 0; i < k; ++i) picked.push_back(*train[i]);

  if (k == 3) {
    auto count_type = [&](CorefType t) {
      return std::count_if(picked.begin(), picked.end(), [&](const Passage& p) {
        return p.metadata.coref_type == t;
      });
    };
    for (CorefType t : {CorefType::grammatical, CorefType::textual}) {
      if (count_type(t) > 0) continue;
      auto repl = std::find_if(
          train.begin() + k, train.end(),
          [&](const Passage* p) { return p->metadata.coref_type == t; });
      if (repl == train.end())
        throw Error(Errc::insufficient_exemplars,
                    std::string("training split has no ") + to_string(t) +
                        " passage for a mixed three-shot pick");
      picked.back() = **repl;
    }
  }
  return picked;
}

std::vector<YesNoPair> make_yesno_pairs(const Dataset& dataset, Split split,
                                        double negative_ratio,
                                        std::uint64_t seed) {
  if (negative_ratio < 0.0 || negative_ratio > 1.0)
    throw Error(Errc::config_error, "negative_ratio must lie in [0,1]");

  std::vector<const Passage*> passages = dataset.split_view(split);
  const std::size_t n = passages.size();
  std::size_t want_negative =
      static_cast<std::size_t>(negative_ratio * static_cast<double>(n) + 0.5);

  // which passages get a negative candidate: deterministic shuffle
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> negative(n, false);
  for (std::size_t i = 0; i < want_negative && i < n; ++i)
    negative[order[i]] = true;

  std::vector<YesNoPair> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Passage& p = *passages[i];
    YesNoPair item;
    item.passage_id = p.id;
    if (negative[i]) {
      // token windows whose surface fails the metric at every occurrence
      // make honest distractors
      Tokenization tokens = Tokenization::of(p.text);
      std::vector<std::string> options;
      const auto& ts = tokens.token_spans;
      for (std::size_t a = 0; a < ts.size(); ++a) {
        if (!is_word_cp(tokens.text[ts[a].start])) continue;
        for (std::size_t len = 1; len <= 3 && a + len <= ts.size(); ++len) {
          if (!is_word_cp(tokens.text[ts[a + len - 1].start])) continue;
          Span window{ts[a].start, ts[a + len - 1].end};
          std::string surface = utf8::substr(p.text, window);
          if (!score_answer_string(surface, p, tokens).correct())
            options.push_back(std::move(surface));
        }
      }
      if (!options.empty()) {
        std::mt19937_64 prng(seed ^ std::hash<std::string>{}(p.id));
        item.candidate = options[prng() % options.size()];
        item.expected_yes = false;
        pairs.push_back(std::move(item));
        continue;
      }
      // NoDistractorAvailable: fall through to a positive item
    }
    item.candidate = p.antecedent_subtree_text();
    item.expected_yes = true;
    pairs.push_back(std::move(item));
  }
  return pairs;
}

}  // namespace anares
