#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "anares/span.hpp"

namespace anares::utf8 {

// Strict UTF-8 decoding; overlong forms, surrogates and truncated
// sequences raise Error(invalid_utf8). All offsets in this toolkit are
// codepoint offsets, never byte offsets: Czech diacritics make the two
// diverge on nearly every sentence.

std::u32string decode(std::string_view s);
std::string encode(std::u32string_view s);
std::string encode(char32_t cp);

// Number of codepoints in s.
std::size_t cp_length(std::string_view s);

// Byte offset of the cp_index-th codepoint (cp_index may equal cp_length).
std::size_t byte_offset(std::string_view s, std::size_t cp_index);

// Codepoint-addressed substring.
std::string substr(std::string_view s, Span span);

}  // namespace anares::utf8
