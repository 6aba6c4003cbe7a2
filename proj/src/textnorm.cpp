#include "anares/textnorm.hpp"

#include "anares/utf8.hpp"

namespace anares {

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case U' ':  // no-break space, frequent in newspaper text
    case U' ':
    case U' ':
    case U' ':
    case U' ':
      return true;
    default:
      return false;
  }
}

bool is_word_cp(char32_t cp) {
  if (is_space_cp(cp)) return false;
  if (cp < 0x80) {
    return (cp >= U'0' && cp <= U'9') || (cp >= U'A' && cp <= U'Z') ||
           (cp >= U'a' && cp <= U'z');
  }
  // Common non-ASCII punctuation seen in the treebank text.
  switch (cp) {
    case U'«':  // «
    case U'»':  // »
    case U'‐':  // hyphens and dashes
    case U'‑':
    case U'‒':
    case U'–':
    case U'—':
    case U'―':
    case U'‘':  // single quotes
    case U'’':
    case U'‚':
    case U'‛':
    case U'“':  // double quotes, incl. Czech low-9 „
    case U'”':
    case U'„':
    case U'‟':
    case U'…':  // …
    case U'‹':
    case U'›':
    case U'§':  // §
    case U'°':  // °
    case U'×':  // ×
      return false;
    default:
      return true;
  }
}

std::string collapse_ws(std::string_view s) {
  std::u32string in = utf8::decode(s);
  std::u32string out;
  out.reserve(in.size());
  bool pending_space = false;
  for (char32_t cp : in) {
    if (is_space_cp(cp)) {
      if (!out.empty()) pending_space = true;
    } else {
      if (pending_space) out.push_back(U' ');
      pending_space = false;
      out.push_back(cp);
    }
  }
  return utf8::encode(out);
}

std::vector<Span> split_tokens(std::u32string_view text) {
  std::vector<Span> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (is_space_cp(text[i])) {
      ++i;
    } else if (is_word_cp(text[i])) {
      std::size_t j = i + 1;
      while (j < n && is_word_cp(text[j])) ++j;
      tokens.push_back(Span{i, j});
      i = j;
    } else {
      tokens.push_back(Span{i, i + 1});
      ++i;
    }
  }
  return tokens;
}

std::vector<std::size_t> nonspace_positions(std::u32string_view text) {
  std::vector<std::size_t> pos;
  pos.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i)
    if (!is_space_cp(text[i])) pos.push_back(i);
  return pos;
}

bool remap_span_by_nonspace(std::u32string_view from, std::u32string_view to,
                            Span span, Span& out) {
  // Count non-whitespace codepoints strictly before span.start and before
  // span.end in `from`; those ordinals address the same characters in `to`.
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < from.size() && i < span.end; ++i) {
    if (is_space_cp(from[i])) continue;
    if (i < span.start) ++lo;
    ++hi;
  }
  if (lo >= hi) return false;  // span covered no non-whitespace content

  std::vector<std::size_t> to_pos = nonspace_positions(to);
  if (hi > to_pos.size()) return false;
  out = Span{to_pos[lo], to_pos[hi - 1] + 1};
  return true;
}

}  // namespace anares
