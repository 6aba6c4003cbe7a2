#pragma once

#include <optional>
#include <string>

namespace anares {

// Normalized shape of one raw model completion. Parsers are total:
// arbitrary input maps to some ParsedResponse, never an exception.
struct ParsedResponse {
  enum class Kind { yes, no, answer_string, tagged_sentence, format_error };
  Kind kind = Kind::format_error;
  std::optional<std::string> payload;

  friend bool operator==(const ParsedResponse&,
                         const ParsedResponse&) = default;
};

const char* to_string(ParsedResponse::Kind k);

// Strict mode drops the leniencies that paper over instruction-tuned
// decoration (case folding, trailing punctuation, bracket-free
// fallbacks); useful for ablating how much of a model's score rests on
// output repair.

// First word, case-insensitive, punctuation-tolerant YES/NO.
// Strict: the trimmed response must be exactly "YES" or "NO".
ParsedResponse parse_yesno(const std::string& raw, bool strict = false);

// Content of the first balanced [ ... ] pair; a bracket-free response
// falls back to the whole trimmed text. Strict: brackets required and
// nothing but whitespace may surround them.
ParsedResponse parse_bracketed(const std::string& raw, bool strict = false);

// Strips one enclosing [ ... ] pair if present, then requires exactly
// one <ant>...</ant> pair in the remainder. Strict: the brackets must
// be present.
ParsedResponse parse_tagged_response(const std::string& raw,
                                     bool strict = false);

}  // namespace anares
