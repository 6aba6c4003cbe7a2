#include "anares/response_parser.hpp"

#include <algorithm>
#include <cctype>

#include "anares/textnorm.hpp"

namespace anares {

const char* to_string(ParsedResponse::Kind k) {
  using K = ParsedResponse::Kind;
  switch (k) {
    case K::yes: return "yes";
    case K::no: return "no";
    case K::answer_string: return "answer_string";
    case K::tagged_sentence: return "tagged_sentence";
    case K::format_error: return "format_error";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n\f\v");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(b, e - b + 1);
}

}  // namespace

ParsedResponse parse_yesno(const std::string& raw, bool strict) {
  std::string s = trim(raw);
  if (strict) {
    if (s == "YES") return {ParsedResponse::Kind::yes, std::nullopt};
    if (s == "NO") return {ParsedResponse::Kind::no, std::nullopt};
    return {ParsedResponse::Kind::format_error, std::nullopt};
  }
  // first word, with trailing punctuation shaved off
  std::size_t end = 0;
  while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end])))
    ++end;
  std::string word = s.substr(0, end);
  while (!word.empty() &&
         (word.back() == '.' || word.back() == ',' || word.back() == '!' ||
          word.back() == ';' || word.back() == ':'))
    word.pop_back();
  std::transform(word.begin(), word.end(), word.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (word == "YES") return {ParsedResponse::Kind::yes, std::nullopt};
  if (word == "NO") return {ParsedResponse::Kind::no, std::nullopt};
  return {ParsedResponse::Kind::format_error, std::nullopt};
}

ParsedResponse parse_bracketed(const std::string& raw, bool strict) {
  std::string s = trim(raw);
  std::string extracted;
  std::size_t open = s.find('[');
  if (strict && (s.empty() || s.front() != '[' || s.back() != ']'))
    return {ParsedResponse::Kind::format_error, std::nullopt};
  if (open != std::string::npos) {
    // first balanced pair; nested brackets stay part of the content
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = open; i < s.size(); ++i) {
      if (s[i] == '[') ++depth;
      if (s[i] == ']' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos)
      return {ParsedResponse::Kind::format_error, std::nullopt};
    extracted = s.substr(open + 1, close - open - 1);
  } else {
    extracted = s;
  }
  extracted = trim(extracted);
  if (extracted.empty())
    return {ParsedResponse::Kind::format_error, std::nullopt};
  return {ParsedResponse::Kind::answer_string, extracted};
}

ParsedResponse parse_tagged_response(const std::string& raw, bool strict) {
  std::string s = trim(raw);
  bool bracketed = !s.empty() && s.front() == '[' && s.back() == ']';
  if (strict && !bracketed)
    return {ParsedResponse::Kind::format_error, std::nullopt};
  if (bracketed) s = trim(s.substr(1, s.size() - 2));
  auto count = [&s](const char* needle) {
    std::size_t n = 0, pos = 0;
    std::string pat(needle);
    while ((pos = s.find(pat, pos)) != std::string::npos) {
      ++n;
      pos += pat.size();
    }
    return n;
  };
  if (count("<ant>") != 1 || count("</ant>") != 1 || s.empty())
    return {ParsedResponse::Kind::format_error, std::nullopt};
  if (s.find("<ant>") > s.find("</ant>"))
    return {ParsedResponse::Kind::format_error, std::nullopt};
  return {ParsedResponse::Kind::tagged_sentence, s};
}

}  // namespace anares
