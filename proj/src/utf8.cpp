#include "anares/utf8.hpp"

#include "anares/errors.hpp"

namespace anares::utf8 {

namespace {

// Decodes one codepoint starting at byte i; advances i past it.
char32_t decode_one(std::string_view s, std::size_t& i) {
  const auto fail = [&] {
    throw Error(Errc::invalid_utf8,
                "bad byte sequence at offset " + std::to_string(i));
  };
  unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    fail();
    return 0;
  }
  if (i + len > s.size()) fail();
  for (int k = 1; k < len; ++k) {
    unsigned char b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) fail();
    cp = (cp << 6) | (b & 0x3F);
  }
  // overlong / out-of-range / surrogate checks
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail();
  i += len;
  return cp;
}

}  // namespace

std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) out.push_back(decode_one(s, i));
  return out;
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) out += encode(cp);
  return out;
}

std::size_t cp_length(std::string_view s) {
  std::size_t n = 0, i = 0;
  while (i < s.size()) {
    decode_one(s, i);
    ++n;
  }
  return n;
}

std::size_t byte_offset(std::string_view s, std::size_t cp_index) {
  std::size_t n = 0, i = 0;
  while (n < cp_index) {
    if (i >= s.size())
      throw Error(Errc::invalid_span,
                  "codepoint offset " + std::to_string(cp_index) +
                      " past end of text");
    decode_one(s, i);
    ++n;
  }
  return i;
}

std::string substr(std::string_view s, Span span) {
  std::size_t b0 = byte_offset(s, span.start);
  std::size_t b1 = byte_offset(s, span.end);
  return std::string(s.substr(b0, b1 - b0));
}

}  // namespace anares::utf8
