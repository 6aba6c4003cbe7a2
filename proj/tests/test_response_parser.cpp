#include <doctest.h>

#include <random>

#include "anares/response_parser.hpp"

using namespace anares;
using Kind = ParsedResponse::Kind;

TEST_CASE("yes/no parsing is lenient about decoration") {
  CHECK(parse_yesno("YES").kind == Kind::yes);
  CHECK(parse_yesno(" no.").kind == Kind::no);
  CHECK(parse_yesno("Yes, certainly").kind == Kind::yes);
  CHECK(parse_yesno("NO!").kind == Kind::no);
  CHECK(parse_yesno("no;").kind == Kind::no);
  CHECK(parse_yesno("It refers to the building").kind == Kind::format_error);
  CHECK(parse_yesno("").kind == Kind::format_error);
  CHECK(parse_yesno("YESNO").kind == Kind::format_error);
}

TEST_CASE("bracketed answers take the first balanced pair") {
  auto r = parse_bracketed("[Budova]");
  CHECK(r.kind == Kind::answer_string);
  CHECK(r.payload == "Budova");

  r = parse_bracketed("[a] and [b]");
  CHECK(r.payload == "a");

  CHECK(parse_bracketed("[]").kind == Kind::format_error);
  CHECK(parse_bracketed("  ").kind == Kind::format_error);
  CHECK(parse_bracketed("[unclosed").kind == Kind::format_error);

  // bracket-free output falls back to the whole trimmed response
  r = parse_bracketed("  šťastný strom \n");
  CHECK(r.kind == Kind::answer_string);
  CHECK(r.payload == "šťastný strom");
}

TEST_CASE("tagged responses need exactly one ant pair") {
  auto r = parse_tagged_response(
      "[Budova, <ana>která</ana> byla, <ant>Budova</ant> ne.]");
  CHECK(r.kind == Kind::tagged_sentence);
  CHECK(r.payload ==
        "Budova, <ana>která</ana> byla, <ant>Budova</ant> ne.");

  CHECK(parse_tagged_response("no tags at all").kind == Kind::format_error);
  CHECK(parse_tagged_response("<ant>a</ant> and <ant>b</ant>").kind ==
        Kind::format_error);
  CHECK(parse_tagged_response("</ant>reversed<ant>").kind ==
        Kind::format_error);
  CHECK(parse_tagged_response("").kind == Kind::format_error);
}

TEST_CASE("strict mode drops the leniencies") {
  CHECK(parse_yesno("YES", true).kind == Kind::yes);
  CHECK(parse_yesno(" no.", true).kind == Kind::format_error);
  CHECK(parse_yesno("Yes, certainly", true).kind == Kind::format_error);
  CHECK(parse_yesno("  NO  ", true).kind == Kind::no);  // trim still applies

  CHECK(parse_bracketed("[Budova]", true).payload == "Budova");
  CHECK(parse_bracketed("Budova", true).kind == Kind::format_error);
  CHECK(parse_bracketed("answer: [a]", true).kind == Kind::format_error);

  CHECK(parse_tagged_response("[x <ant>y</ant>]", true).kind ==
        Kind::tagged_sentence);
  CHECK(parse_tagged_response("x <ant>y</ant>", true).kind ==
        Kind::format_error);
}

TEST_CASE("parsers are total and idempotent on realistic payloads") {
  std::mt19937_64 rng(99);
  const std::string chunks[] = {"YES", "no", "Budova", "[x]", "<ant>", "</ant>",
                                " ",   "\n", "ěščř",   "]",   "["};
  for (int iter = 0; iter < 2000; ++iter) {
    std::string raw;
    for (int k = static_cast<int>(rng() % 6); k-- > 0;)
      raw += chunks[rng() % (sizeof(chunks) / sizeof(chunks[0]))];
    // totality: none of these may throw
    ParsedResponse a = parse_yesno(raw);
    ParsedResponse b = parse_bracketed(raw);
    ParsedResponse c = parse_tagged_response(raw);
    (void)a;
    // idempotence on successful extractions without stray brackets
    if (b.kind == Kind::answer_string &&
        b.payload->find('[') == std::string::npos &&
        b.payload->find(']') == std::string::npos)
      CHECK(parse_bracketed(*b.payload).payload == b.payload);
    if (c.kind == Kind::tagged_sentence)
      CHECK(parse_tagged_response(*c.payload).payload == c.payload);
  }
}
