#include "anares/baseline.hpp"

#include <algorithm>

namespace anares {

std::optional<FallbackMode> parse_fallback_mode(const std::string& s) {
  if (s == "nearest") return FallbackMode::nearest;
  if (s == "abstain") return FallbackMode::abstain;
  return std::nullopt;
}

const char* to_string(FallbackMode m) {
  return m == FallbackMode::nearest ? "nearest" : "abstain";
}

std::vector<NpCandidate> extract_np_candidates(const ParsedPassage& parsed,
                                               const Passage& passage) {
  const std::size_t n = parsed.tokens.size();

  // children lists per flat index (heads are sentence-local)
  std::vector<std::vector<std::size_t>> children(n);
  for (std::size_t i = 0; i < n; ++i)
    if (auto parent = parsed.parent_of(i)) children[*parent].push_back(i);

  auto precedes_anaphor = [&](std::size_t i) {
    return parsed.tokens[i].char_span.end <= passage.anaphor.start;
  };

  std::vector<NpCandidate> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    const ParsedToken& t = parsed.tokens[i];
    if (t.upos != "NOUN" && t.upos != "PROPN") continue;
    if (!precedes_anaphor(i)) continue;

    // subtree projection restricted to tokens preceding the anaphor
    Span span = t.char_span;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      for (std::size_t c : children[cur]) {
        if (!precedes_anaphor(c)) continue;
        span.start = std::min(span.start, parsed.tokens[c].char_span.start);
        span.end = std::max(span.end, parsed.tokens[c].char_span.end);
        stack.push_back(c);
      }
    }
    candidates.push_back(NpCandidate{i, span});
  }

  // nearest head first, in token distance from the anaphor
  std::sort(candidates.begin(), candidates.end(),
            [&](const NpCandidate& a, const NpCandidate& b) {
              return a.head_token > b.head_token;
            });
  return candidates;
}

bool agreement_match(const FeatureMap& pronoun_feats,
                     const FeatureMap& candidate_feats) {
  for (const char* key : {"Gender", "Number"}) {
    auto p = pronoun_feats.find(key);
    auto c = candidate_feats.find(key);
    if (p == pronoun_feats.end() || c == candidate_feats.end()) continue;
    if (p->second.empty() || c->second.empty()) continue;
    bool intersects = std::any_of(
        p->second.begin(), p->second.end(), [&](const std::string& v) {
          return std::find(c->second.begin(), c->second.end(), v) !=
                 c->second.end();
        });
    if (!intersects) return false;
  }
  return true;
}

std::optional<Span> resolve(const ParsedPassage& parsed,
                            const Passage& passage, FallbackMode mode) {
  std::vector<NpCandidate> candidates =
      extract_np_candidates(parsed, passage);
  if (candidates.empty()) return std::nullopt;

  const FeatureMap& pron = parsed.tokens[parsed.anaphor_token].feats;
  for (const NpCandidate& c : candidates)
    if (agreement_match(pron, parsed.tokens[c.head_token].feats))
      return c.span;

  if (mode == FallbackMode::nearest) return candidates.front().span;
  return std::nullopt;
}

}  // namespace anares
