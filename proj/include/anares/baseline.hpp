#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anares/conllu.hpp"
#include "anares/corpus.hpp"
#include "anares/span.hpp"

namespace anares {

// A noun-phrase candidate: a nominal head together with the contiguous
// span of its dependency subtree, truncated at the anaphor.
struct NpCandidate {
  std::size_t head_token = 0;  // flat token index
  Span span;                   // codepoint span in passage text
};

// All nominal-headed phrases ending before the anaphor, nearest head
// first (distance measured in tokens).
std::vector<NpCandidate> extract_np_candidates(const ParsedPassage& parsed,
                                               const Passage& passage);

using FeatureMap = std::map<std::string, std::vector<std::string>>;

// Gender and number compatibility with wildcard semantics: a feature
// missing on either side matches anything; multi-valued features match
// on non-empty intersection.
bool agreement_match(const FeatureMap& pronoun_feats,
                     const FeatureMap& candidate_feats);

enum class FallbackMode { nearest, abstain };
std::optional<FallbackMode> parse_fallback_mode(const std::string& s);
const char* to_string(FallbackMode m);

// Closest preceding agreeing NP; with no agreeing candidate the nearest
// one is used (or the resolver abstains, per mode). Empty candidate list
// always abstains.
std::optional<Span> resolve(const ParsedPassage& parsed,
                            const Passage& passage, FallbackMode mode);

}  // namespace anares
