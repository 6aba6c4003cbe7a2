#include <doctest.h>

#include "anares/errors.hpp"
#include "anares/textnorm.hpp"
#include "anares/utf8.hpp"

using namespace anares;

TEST_CASE("utf8 codepoint accounting for Czech text") {
  std::string s = "loňském";  // ň and é are two bytes each
  CHECK(utf8::cp_length(s) == 7);
  CHECK(s.size() == 9);
  CHECK(utf8::substr(s, Span{2, 3}) == "ň");
  CHECK(utf8::byte_offset(s, 3) == 4);
  CHECK(utf8::encode(utf8::decode(s)) == s);
}

TEST_CASE("utf8 rejects malformed input") {
  CHECK_THROWS_AS(utf8::decode(std::string("\xC3")), Error);       // truncated
  CHECK_THROWS_AS(utf8::decode(std::string("\xC0\xAF")), Error);   // overlong
  CHECK_THROWS_AS(utf8::decode(std::string("\xED\xA0\x80")), Error);  // surrogate
  CHECK_THROWS_AS(utf8::decode(std::string("\xFF")), Error);
}

TEST_CASE("collapse_ws trims and collapses runs only") {
  CHECK(collapse_ws("  a  b\t c  ") == "a b c");
  CHECK(collapse_ws("") == "");
  CHECK(collapse_ws(" \t ") == "");
  CHECK(collapse_ws("a,b") == "a,b");
  CHECK(collapse_ws("A  Z") == "A Z");
}

TEST_CASE("token split keeps punctuation separate and words whole") {
  std::u32string text = utf8::decode("Budova, která byla dokončena.");
  auto tokens = split_tokens(text);
  REQUIRE(tokens.size() == 6);
  auto tok = [&](std::size_t i) {
    return utf8::encode(
        std::u32string(text.substr(tokens[i].start, tokens[i].length())));
  };
  CHECK(tok(0) == "Budova");
  CHECK(tok(1) == ",");
  CHECK(tok(2) == "která");
  CHECK(tok(3) == "byla");
  CHECK(tok(4) == "dokončena");
  CHECK(tok(5) == ".");
}

TEST_CASE("every non-space codepoint belongs to exactly one token") {
  std::u32string text = utf8::decode("Včera — řekl: „ano“, 3,5 km?!");
  auto tokens = split_tokens(text);
  std::vector<int> owner(text.size(), 0);
  for (const Span& t : tokens)
    for (std::size_t i = t.start; i < t.end; ++i) owner[i]++;
  for (std::size_t i = 0; i < text.size(); ++i)
    CHECK(owner[i] == (is_space_cp(text[i]) ? 0 : 1));
  // ordered and non-overlapping
  for (std::size_t i = 1; i < tokens.size(); ++i)
    CHECK(tokens[i - 1].end <= tokens[i].start);
}

TEST_CASE("remap_span_by_nonspace crosses whitespace differences") {
  std::u32string from = utf8::decode("a  bc   d");
  std::u32string to = utf8::decode("a bc d");
  Span out;
  REQUIRE(remap_span_by_nonspace(from, to, Span{3, 5}, out));  // "bc"
  CHECK(out == Span{2, 4});
  REQUIRE(remap_span_by_nonspace(from, to, Span{2, 6}, out));  // " bc "
  CHECK(out == Span{2, 4});  // trimmed to content
  CHECK(!remap_span_by_nonspace(from, to, Span{1, 3}, out));   // whitespace only
}
