#pragma once

#include <cstddef>
#include <string>

namespace anares {

// Half-open interval of Unicode codepoint offsets into some owning text.
// Spans are non-empty by construction: start < end.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }

  bool contains(const Span& other) const {
    return other.start >= start && other.end <= end;
  }

  bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

inline std::string to_string(const Span& s) {
  return "[" + std::to_string(s.start) + "," + std::to_string(s.end) + ")";
}

}  // namespace anares
