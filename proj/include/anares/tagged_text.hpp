#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "anares/span.hpp"

namespace anares {

// Result of stripping the annotation tags out of a sentence.
// Spans address the tag-free text in codepoint offsets.
struct TaggedParse {
  std::string plain;
  std::optional<Span> ana;
  std::optional<Span> ant;

  friend bool operator==(const TaggedParse&, const TaggedParse&) = default;
};

// Parses text carrying at most one <ana>...</ana> pair and at most one
// <ant>...</ant> pair. The pairs may be disjoint or fully nested (the
// corpus contains anaphors inside their antecedent); partial overlap is
// malformed. Throws Error with one of: UnbalancedTags, DuplicateTag,
// CrossingTags, EmptyTagContent.
TaggedParse parse_tagged_text(std::string_view tagged);

// Inverse of parse_tagged_text. Throws InvalidSpan / CrossingTags.
// When the two spans coincide, <ant> is rendered as the outer pair.
std::string render_tagged_text(std::string_view plain,
                               std::optional<Span> ana,
                               std::optional<Span> ant);

}  // namespace anares
