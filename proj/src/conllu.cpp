#include "anares/conllu.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "anares/errors.hpp"
#include "anares/textnorm.hpp"
#include "anares/utf8.hpp"

namespace anares {

std::optional<std::size_t> ParsedPassage::parent_of(std::size_t flat) const {
  const ParsedToken& t = tokens[flat];
  if (t.head == 0) return std::nullopt;
  return sentence_begin[t.sentence] + static_cast<std::size_t>(t.head) - 1;
}

namespace {

std::map<std::string, std::vector<std::string>> parse_feats(
    const std::string& raw) {
  std::map<std::string, std::vector<std::string>> feats;
  if (raw == "_" || raw.empty()) return feats;
  std::istringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, '|')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    std::string values = item.substr(eq + 1);
    std::istringstream vs(values);
    std::string v;
    while (std::getline(vs, v, ','))
      if (!v.empty()) feats[key].push_back(v);
  }
  return feats;
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoi(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

}  // namespace

std::vector<ConlluSentence> read_conllu(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());

  std::vector<ConlluSentence> sentences;
  ConlluSentence current;
  std::string line;
  std::size_t line_no = 0;

  auto flush = [&] {
    if (!current.words.empty() || !current.comments.empty()) {
      if (!current.words.empty()) sentences.push_back(current);
      current = ConlluSentence{};
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      std::string body = line.substr(1);
      auto eq = body.find('=');
      if (eq != std::string::npos) {
        auto trim = [](std::string s) {
          std::size_t b = s.find_first_not_of(' ');
          std::size_t e = s.find_last_not_of(' ');
          return b == std::string::npos ? std::string()
                                        : s.substr(b, e - b + 1);
        };
        current.comments[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
      }
      continue;
    }

    std::vector<std::string> cols;
    {
      std::istringstream ss(line);
      std::string c;
      while (std::getline(ss, c, '\t')) cols.push_back(c);
    }
    if (cols.size() != 10)
      throw Error(Errc::malformed_conllu,
                  path.filename().string() + " line " +
                      std::to_string(line_no) + ": expected 10 columns, got " +
                      std::to_string(cols.size()));

    const std::string& id = cols[0];
    if (id.find('.') != std::string::npos) continue;  // empty node
    auto dash = id.find('-');
    if (dash != std::string::npos) {
      ConlluMwt mwt;
      if (!parse_int(id.substr(0, dash), mwt.first) ||
          !parse_int(id.substr(dash + 1), mwt.last) || mwt.first > mwt.last)
        throw Error(Errc::malformed_conllu,
                    "line " + std::to_string(line_no) + ": bad token range " +
                        id);
      mwt.form = cols[1];
      current.mwts.push_back(mwt);
      continue;
    }

    ConlluWord w;
    if (!parse_int(id, w.id))
      throw Error(Errc::malformed_conllu,
                  "line " + std::to_string(line_no) + ": bad token id " + id);
    w.form = cols[1];
    w.lemma = cols[2];
    w.upos = cols[3];
    w.xpos = cols[4];
    w.feats = cols[5];
    if (!parse_int(cols[6], w.head))
      throw Error(Errc::malformed_conllu,
                  "line " + std::to_string(line_no) + ": non-integer head \"" +
                      cols[6] + "\"");
    w.deprel = cols[7];
    w.deps = cols[8];
    w.misc = cols[9];
    current.words.push_back(w);
  }
  flush();

  // structural validation
  for (const ConlluSentence& s : sentences) {
    int expect = 1;
    for (const ConlluWord& w : s.words) {
      if (w.id != expect++)
        throw Error(Errc::malformed_conllu, "non-sequential token ids");
      if (w.head < 0 || w.head > static_cast<int>(s.words.size()))
        throw Error(Errc::malformed_conllu,
                    "head " + std::to_string(w.head) + " out of range");
    }
    for (const ConlluMwt& m : s.mwts)
      if (m.first < 1 || m.last > static_cast<int>(s.words.size()))
        throw Error(Errc::malformed_conllu, "token range outside sentence");
  }
  return sentences;
}

namespace {

// Matches `form` in text starting at or after `pos` (skipping leading
// whitespace only); returns the covered span and advances pos.
bool match_form(const std::u32string& text, std::size_t& pos,
                const std::u32string& form, Span& out) {
  while (pos < text.size() && is_space_cp(text[pos])) ++pos;
  std::size_t start = pos;
  std::size_t t = pos;
  for (char32_t fc : form) {
    if (is_space_cp(fc)) {
      // forms with internal spaces tolerate any whitespace run
      if (t >= text.size() || !is_space_cp(text[t])) return false;
      while (t < text.size() && is_space_cp(text[t])) ++t;
    } else {
      if (t >= text.size() || text[t] != fc) return false;
      ++t;
    }
  }
  out = Span{start, t};
  pos = t;
  return true;
}

struct AlignedSentence {
  std::vector<ParsedToken> tokens;
};

// Aligns one parsed sentence against passage text starting at pos;
// multiword surface tokens consume their surface form once and share
// its span across the covered syntactic words.
bool align_sentence(const ConlluSentence& sent, const std::u32string& text,
                    std::size_t& pos, AlignedSentence& out,
                    std::string& why_not) {
  out.tokens.clear();
  std::map<int, const ConlluMwt*> mwt_at;
  for (const ConlluMwt& m : sent.mwts) mwt_at[m.first] = &m;

  std::size_t i = 0;
  while (i < sent.words.size()) {
    const ConlluWord& w = sent.words[i];
    auto mwt_it = mwt_at.find(w.id);
    Span span;
    std::size_t covered = 1;
    if (mwt_it != mwt_at.end()) {
      const ConlluMwt& m = *mwt_it->second;
      if (!match_form(text, pos, utf8::decode(m.form), span)) {
        why_not = "surface token \"" + m.form + "\" not found in passage text";
        return false;
      }
      covered = static_cast<std::size_t>(m.last - m.first + 1);
    } else {
      if (!match_form(text, pos, utf8::decode(w.form), span)) {
        why_not = "token \"" + w.form + "\" not found in passage text";
        return false;
      }
    }
    for (std::size_t k = 0; k < covered; ++k) {
      const ConlluWord& word = sent.words[i + k];
      ParsedToken t;
      t.form = word.form;
      t.lemma = word.lemma;
      t.upos = word.upos;
      t.feats = parse_feats(word.feats);
      t.head = word.head;
      t.deprel = word.deprel;
      t.char_span = span;
      t.inside_mwt = covered > 1;
      out.tokens.push_back(std::move(t));
    }
    i += covered;
  }
  return true;
}

bool text_exhausted(const std::u32string& text, std::size_t pos) {
  while (pos < text.size() && is_space_cp(text[pos])) ++pos;
  return pos == text.size();
}

// Builds a ParsedPassage from consecutive aligned sentences; fails when
// the concatenated tokens do not cover the passage text or the anaphor
// aligns to no token.
std::optional<ParsedPassage> assemble(
    const Passage& passage, const std::vector<const ConlluSentence*>& sents,
    std::string& why_not) {
  std::u32string text = utf8::decode(passage.text);
  ParsedPassage pp;
  pp.passage_id = passage.id;
  std::size_t pos = 0;
  for (std::size_t si = 0; si < sents.size(); ++si) {
    AlignedSentence aligned;
    if (!align_sentence(*sents[si], text, pos, aligned, why_not))
      return std::nullopt;
    pp.sentence_begin.push_back(pp.tokens.size());
    for (ParsedToken& t : aligned.tokens) {
      t.sentence = si;
      pp.tokens.push_back(std::move(t));
    }
  }
  if (!text_exhausted(text, pos)) {
    why_not = "parse covers only a prefix of the passage text";
    return std::nullopt;
  }

  // anaphor token = first token overlapping the anaphor span
  bool found = false;
  for (std::size_t i = 0; i < pp.tokens.size(); ++i) {
    if (pp.tokens[i].char_span.overlaps(passage.anaphor)) {
      pp.anaphor_token = i;
      found = true;
      break;
    }
  }
  if (!found) {
    why_not = "no token overlaps the anaphor span";
    return std::nullopt;
  }
  return pp;
}

}  // namespace

IngestReport ingest_conllu(const std::filesystem::path& path,
                           const Dataset& dataset,
                           const IngestOptions& options) {
  std::vector<ConlluSentence> sentences = read_conllu(path);
  IngestReport report;
  if (sentences.empty()) return report;  // nothing parsed, nothing aligned

  bool has_ids = std::any_of(
      sentences.begin(), sentences.end(), [](const ConlluSentence& s) {
        return s.comments.contains("passage_id");
      });

  if (has_ids) {
    // group consecutive sentences by their passage_id comment
    std::size_t i = 0;
    while (i < sentences.size()) {
      auto id_it = sentences[i].comments.find("passage_id");
      if (id_it == sentences[i].comments.end()) {
        report.skipped.emplace_back(
            "?", "sentence without passage_id comment was dropped");
        ++i;
        continue;
      }
      const std::string id = id_it->second;
      std::vector<const ConlluSentence*> group{&sentences[i]};
      std::size_t j = i + 1;
      while (j < sentences.size() &&
             !sentences[j].comments.contains("passage_id")) {
        group.push_back(&sentences[j]);
        ++j;
      }
      i = j;

      const Passage* p = dataset.find(id);
      if (!p) {
        report.skipped.emplace_back(id, "id not present in dataset");
        continue;
      }
      std::string why;
      if (auto pp = assemble(*p, group, why))
        report.passages.push_back(std::move(*pp));
      else
        report.skipped.emplace_back(id, why);
    }
    return report;
  }

  if (options.order_ids.empty())
    throw Error(Errc::alignment_error,
                "no passage_id comments and no id order given");

  // Greedy grouping: consume sentences while they extend the current
  // passage's text; a misparse skips that passage and resyncs.
  std::size_t cursor = 0;
  for (const std::string& id : options.order_ids) {
    const Passage* p = dataset.find(id);
    if (!p) {
      report.skipped.emplace_back(id, "id not present in dataset");
      continue;
    }
    bool done = false;
    for (std::size_t shift = 0; shift < 4 && !done; ++shift) {
      std::size_t start = cursor + shift;
      std::vector<const ConlluSentence*> group;
      for (std::size_t j = start; j < sentences.size(); ++j) {
        group.push_back(&sentences[j]);
        std::string why;
        if (auto pp = assemble(*p, group, why)) {
          report.passages.push_back(std::move(*pp));
          cursor = j + 1;
          done = true;
          break;
        }
        // keep extending while the prefix still matches; a token
        // mismatch inside the first sentence means this start is wrong
        if (group.size() == 1 && why.find("not found") != std::string::npos)
          break;
        if (group.size() >= 8) break;  // passages are a few sentences
      }
    }
    if (!done) report.skipped.emplace_back(id, "could not align parse");
  }
  return report;
}

}  // namespace anares
