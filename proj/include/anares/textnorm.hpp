#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "anares/span.hpp"

namespace anares {

// Codepoint classes used by the tokenizer and the whitespace-insensitive
// comparisons. Word characters are ASCII alphanumerics plus non-ASCII
// codepoints that are not in the common punctuation/space blocks; this
// keeps Czech letters (á, č, ř, ...) inside tokens without dragging in a
// full Unicode character database.
bool is_space_cp(char32_t cp);
bool is_word_cp(char32_t cp);

// Trim plus collapse of internal whitespace runs to single U+0020.
// No case folding: Czech morphology is case-meaningful.
std::string collapse_ws(std::string_view s);

// Whitespace-plus-punctuation token split: maximal runs of word
// codepoints form one token, every other non-space codepoint is a token
// of its own. Spans are codepoint offsets; every non-whitespace
// codepoint lands in exactly one token.
std::vector<Span> split_tokens(std::u32string_view text);

// Positions (codepoint offsets) of the non-whitespace codepoints of text,
// in order. Backbone for mapping spans across whitespace differences.
std::vector<std::size_t> nonspace_positions(std::u32string_view text);

// Remaps a span from `from` coordinates to `to` coordinates assuming both
// texts have the identical sequence of non-whitespace codepoints. The
// result covers the same non-whitespace content; pure-whitespace spans
// have no image and return false.
bool remap_span_by_nonspace(std::u32string_view from, std::u32string_view to,
                            Span span, Span& out);

}  // namespace anares
