#include "anares/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "anares/errors.hpp"
#include "anares/jsonl.hpp"
#include "anares/tagged_text.hpp"
#include "anares/textnorm.hpp"
#include "anares/utf8.hpp"

namespace anares {

const char* to_string(CorefType t) {
  return t == CorefType::grammatical ? "grammatical" : "textual";
}

const char* to_string(PronounCategory c) {
  switch (c) {
    case PronounCategory::indef: return "n.pron.indef";
    case PronounCategory::def_pers: return "n.pron.def.pers";
    case PronounCategory::def_demon: return "n.pron.def.demon";
  }
  return "?";
}

const char* to_string(Subcorpus s) {
  switch (s) {
    case Subcorpus::pdt: return "PDT 3.5";
    case Subcorpus::pcedt: return "PCEDT 2.0";
    case Subcorpus::pdtsc: return "PDTSC 2.0";
  }
  return "?";
}

const char* to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::validation: return "validation";
    case Split::test: return "test";
  }
  return "?";
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::optional<CorefType> parse_coref_type(const std::string& s) {
  std::string v = lower(s);
  if (v == "grammatical" || v == "gram" || v == "g")
    return CorefType::grammatical;
  if (v == "textual" || v == "text" || v == "t") return CorefType::textual;
  return std::nullopt;
}

std::optional<PronounCategory> parse_pronoun_category(const std::string& s) {
  std::string v = lower(s);
  if (v == "n.pron.indef" || v == "indef") return PronounCategory::indef;
  if (v == "n.pron.def.pers" || v == "def.pers" || v == "pers")
    return PronounCategory::def_pers;
  if (v == "n.pron.def.demon" || v == "def.demon" || v == "demon")
    return PronounCategory::def_demon;
  return std::nullopt;
}

std::optional<Subcorpus> parse_subcorpus(const std::string& s) {
  std::string v = lower(s);
  if (v.starts_with("pdtsc")) return Subcorpus::pdtsc;
  if (v.starts_with("pcedt")) return Subcorpus::pcedt;
  if (v.starts_with("pdt")) return Subcorpus::pdt;
  return std::nullopt;
}

std::optional<Split> parse_split(const std::string& s) {
  std::string v = lower(s);
  if (v == "train" || v == "training") return Split::train;
  if (v == "validation" || v == "dev" || v == "val") return Split::validation;
  if (v == "test") return Split::test;
  return std::nullopt;
}

std::string Passage::sentence_ana() const {
  return render_tagged_text(text, anaphor, std::nullopt);
}

std::string Passage::sentence_ant_ana() const {
  return render_tagged_text(text, anaphor, antecedent_subtree);
}

std::string Passage::antecedent_subtree_text() const {
  return utf8::substr(text, antecedent_subtree);
}

std::string Passage::antecedent_root_text() const {
  return utf8::substr(text, antecedent_root);
}

std::uint64_t DatasetCounts::total_passages() const {
  std::uint64_t n = 0;
  for (const auto& row : cells)
    for (const auto& c : row) n += c.passages;
  return n;
}

const Passage* Dataset::find(const std::string& id) const {
  if (index_.size() != passages.size()) {
    index_.clear();
    for (std::size_t i = 0; i < passages.size(); ++i)
      index_.emplace(passages[i].id, i);
  }
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &passages[it->second];
}

std::vector<const Passage*> Dataset::split_view(Split s) const {
  std::vector<const Passage*> out;
  for (const Passage& p : passages)
    if (p.metadata.split == s) out.push_back(&p);
  return out;
}

namespace {

// Sentence boundaries approximated by terminator runs; one sentence
// minimum for non-empty text.
std::uint64_t count_sentences(const std::u32string& text) {
  std::uint64_t runs = 0;
  bool in_run = false;
  bool any_content = false;
  for (char32_t cp : text) {
    bool term = cp == U'.' || cp == U'!' || cp == U'?' || cp == U'…';
    if (term && !in_run) ++runs;
    in_run = term;
    if (!is_space_cp(cp)) any_content = true;
  }
  if (runs == 0 && any_content) runs = 1;
  return runs;
}

std::uint64_t count_words(const std::u32string& text) {
  std::uint64_t n = 0;
  for (const Span& t : split_tokens(text))
    if (is_word_cp(text[t.start])) ++n;
  return n;
}

}  // namespace

void Dataset::recount() {
  counts = DatasetCounts{};
  for (const Passage& p : passages) {
    CellCounts& cell = counts.at(p.metadata.split, p.metadata.coref_type);
    std::u32string text = utf8::decode(p.text);
    cell.passages += 1;
    cell.sentences += count_sentences(text);
    cell.words += count_words(text);
  }
  // build the id index now; datasets are shared read-only afterwards
  index_.clear();
  for (std::size_t i = 0; i < passages.size(); ++i)
    index_.emplace(passages[i].id, i);
}

// ---------------------------------------------------------------------
// Field aliases

FieldAliases FieldAliases::defaults() {
  FieldAliases a;
  a.names_ = {
      {"id", {"id", "example_id", "idx", "uid"}},
      {"sentence_ant_ana",
       {"sentence_ant_ana", "tagged", "sentence_tagged", "text_tagged"}},
      {"sentence_ana", {"sentence_ana", "text_ana"}},
      {"text", {"text", "sentence", "plain"}},
      {"anaphora", {"anaphora", "anaphor", "anaphor_surface"}},
      {"antecedent_subtree", {"antecedent_subtree", "antecedent", "subtree"}},
      {"antecedent_root", {"antecedent_root", "root"}},
      {"anaphor_span", {"anaphor_span", "ana_span"}},
      {"antecedent_subtree_span", {"antecedent_subtree_span", "ant_span"}},
      {"antecedent_root_span", {"antecedent_root_span", "root_span"}},
      {"coref_type",
       {"coref_type", "type", "anaphora_type", "coreference_type"}},
      {"pronoun_category", {"pronoun_category", "category", "pron_category"}},
      {"distance", {"distance", "dist", "token_distance"}},
      {"anaphor_in_antecedent", {"anaphor_in_antecedent", "ana_in_ant"}},
      {"subcorpus", {"subcorpus", "source", "corpus"}},
      {"split", {"split", "subset", "partition"}},
  };
  return a;
}

void FieldAliases::extend(const json& config) {
  if (!config.contains("field_aliases")) return;
  const json& fa = config.at("field_aliases");
  if (!fa.is_object())
    throw Error(Errc::config_error, "field_aliases must be an object");
  for (auto it = fa.begin(); it != fa.end(); ++it) {
    auto& list = names_[it.key()];
    for (const json& alias : it.value()) {
      std::string name = alias.get<std::string>();
      if (std::find(list.begin(), list.end(), name) == list.end())
        list.insert(list.begin(), name);  // config aliases take priority
    }
  }
}

const json* FieldAliases::find(const json& record,
                               const std::string& canonical) const {
  auto it = names_.find(canonical);
  if (it == names_.end()) return nullptr;
  for (const std::string& name : it->second) {
    auto f = record.find(name);
    if (f != record.end() && !f->is_null()) return &*f;
  }
  return nullptr;
}

std::optional<std::string> FieldAliases::find_column(
    const std::vector<std::string>& header,
    const std::string& canonical) const {
  auto it = names_.find(canonical);
  if (it == names_.end()) return std::nullopt;
  for (const std::string& name : it->second)
    if (std::find(header.begin(), header.end(), name) != header.end())
      return name;
  return std::nullopt;
}

// ---------------------------------------------------------------------
// Record assembly

namespace {

Span span_from_json(const json& j) {
  if (!j.is_object() || !j.contains("start") || !j.contains("end"))
    throw Error(Errc::schema_error, "span must be {\"start\",\"end\"}");
  return Span{j.at("start").get<std::size_t>(),
              j.at("end").get<std::size_t>()};
}

// Finds the root string inside the subtree span; prefers matches sitting
// on word boundaries (the root is a token of the subtree).
std::optional<Span> locate_root(const std::u32string& text, Span subtree,
                                const std::u32string& root) {
  if (root.empty()) return std::nullopt;
  std::optional<Span> loose;
  for (std::size_t pos = subtree.start;
       pos + root.size() <= subtree.end;) {
    auto found = text.find(root, pos);
    if (found == std::u32string::npos || found + root.size() > subtree.end)
      break;
    Span s{found, found + root.size()};
    bool left_ok = s.start == 0 || !is_word_cp(text[s.start - 1]);
    bool right_ok = s.end == text.size() || !is_word_cp(text[s.end]);
    if (left_ok && right_ok) return s;
    if (!loose) loose = s;
    pos = found + 1;
  }
  return loose;
}

struct RawRecord {
  std::string id;
  json fields;  // canonical name -> value
};

Passage assemble_passage(const RawRecord& raw, const LoadOptions& options) {
  const json& f = raw.fields;
  Passage p;
  p.id = raw.id;

  // Text and spans: a sentence with both tag pairs is self-contained;
  // otherwise explicit text + span fields are required.
  if (f.contains("sentence_ant_ana")) {
    TaggedParse parsed =
        parse_tagged_text(f.at("sentence_ant_ana").get<std::string>());
    if (!parsed.ana)
      throw Error(Errc::schema_error, "tagged sentence lacks <ana> pair");
    if (!parsed.ant)
      throw Error(Errc::schema_error, "tagged sentence lacks <ant> pair");
    p.text = parsed.plain;
    p.anaphor = *parsed.ana;
    p.antecedent_subtree = *parsed.ant;
  } else if (f.contains("text") && f.contains("anaphor_span") &&
             f.contains("antecedent_subtree_span")) {
    p.text = f.at("text").get<std::string>();
    p.anaphor = span_from_json(f.at("anaphor_span"));
    p.antecedent_subtree = span_from_json(f.at("antecedent_subtree_span"));
  } else {
    throw Error(Errc::schema_error,
                "record carries neither a both-tags sentence nor "
                "text + explicit spans");
  }

  std::u32string text32 = utf8::decode(p.text);
  auto check_span = [&](Span s, const char* what) {
    if (s.start >= s.end || s.end > text32.size())
      throw Error(Errc::invariant_violation,
                  std::string(what) + " span " + to_string(s) +
                      " invalid for passage text");
  };
  check_span(p.anaphor, "anaphor");
  check_span(p.antecedent_subtree, "antecedent_subtree");

  // Anaphor surface: taken from the record when present, must match the
  // span content exactly.
  p.anaphor_surface = utf8::substr(p.text, p.anaphor);
  if (f.contains("anaphora")) {
    std::string given = f.at("anaphora").get<std::string>();
    if (given != p.anaphor_surface)
      throw Error(Errc::invariant_violation,
                  "anaphor surface \"" + given +
                      "\" does not match tagged span \"" + p.anaphor_surface +
                      "\"");
  }
  if (f.contains("antecedent_subtree")) {
    std::string given = f.at("antecedent_subtree").get<std::string>();
    if (given != p.antecedent_subtree_text())
      throw Error(Errc::invariant_violation,
                  "antecedent_subtree string does not match tagged span");
  }

  // Root: span form wins; string form is located inside the subtree.
  if (f.contains("antecedent_root_span")) {
    p.antecedent_root = span_from_json(f.at("antecedent_root_span"));
  } else if (f.contains("antecedent_root")) {
    const json& rv = f.at("antecedent_root");
    if (rv.is_object()) {
      p.antecedent_root = span_from_json(rv);
    } else {
      std::u32string root32 = utf8::decode(rv.get<std::string>());
      auto s = locate_root(text32, p.antecedent_subtree, root32);
      if (!s)
        throw Error(Errc::invariant_violation,
                    "antecedent_root string not found inside the "
                    "antecedent subtree");
      p.antecedent_root = *s;
    }
  } else {
    throw Error(Errc::schema_error, "missing antecedent_root");
  }
  check_span(p.antecedent_root, "antecedent_root");
  if (!p.antecedent_subtree.contains(p.antecedent_root))
    throw Error(Errc::invariant_violation,
                "antecedent_root lies outside antecedent_subtree");

  // Metadata.
  auto req_enum = [&](const char* field, auto parser, auto fallback,
                      bool required) {
    using T = decltype(fallback);
    if (!f.contains(field)) {
      if (required)
        throw Error(Errc::schema_error, std::string("missing ") + field);
      return fallback;
    }
    std::string v = f.at(field).is_string()
                        ? f.at(field).get<std::string>()
                        : f.at(field).dump();
    auto parsed = parser(v);
    if (!parsed)
      throw Error(Errc::schema_error,
                  std::string("unrecognized ") + field + " \"" + v + "\"");
    return static_cast<T>(*parsed);
  };

  p.metadata.coref_type = req_enum("coref_type", parse_coref_type,
                                   CorefType::grammatical, true);
  p.metadata.pronoun_category =
      req_enum("pronoun_category", parse_pronoun_category,
               PronounCategory::def_pers, true);
  p.metadata.subcorpus =
      req_enum("subcorpus", parse_subcorpus, Subcorpus::pdt, true);
  if (f.contains("split")) {
    p.metadata.split = req_enum("split", parse_split, Split::train, true);
  } else if (options.default_split) {
    p.metadata.split = *options.default_split;
  } else {
    throw Error(Errc::schema_error,
                "record has no split and no default split was given");
  }

  if (f.contains("distance")) {
    const json& d = f.at("distance");
    if (d.is_number_integer())
      p.metadata.distance = d.get<long>();
    else if (d.is_string())
      p.metadata.distance = std::stol(d.get<std::string>());
    else
      throw Error(Errc::schema_error, "distance must be an integer");
  } else {
    throw Error(Errc::schema_error, "missing distance");
  }

  if (f.contains("anaphor_in_antecedent")) {
    const json& b = f.at("anaphor_in_antecedent");
    if (b.is_boolean())
      p.metadata.anaphor_in_antecedent = b.get<bool>();
    else if (b.is_number_integer())
      p.metadata.anaphor_in_antecedent = b.get<int>() != 0;
    else {
      std::string v = lower(b.get<std::string>());
      p.metadata.anaphor_in_antecedent = v == "true" || v == "1" || v == "yes";
    }
  } else {
    p.metadata.anaphor_in_antecedent =
        p.antecedent_subtree.contains(p.anaphor);
  }

  // Cross-field invariants.
  if (p.metadata.pronoun_category == PronounCategory::def_demon &&
      p.metadata.coref_type != CorefType::textual)
    throw Error(Errc::invariant_violation,
                "demonstrative pronoun marked as grammatical anaphora");
  if (p.metadata.anaphor_in_antecedent &&
      !p.antecedent_subtree.contains(p.anaphor))
    throw Error(Errc::invariant_violation,
                "anaphor_in_antecedent set but the anaphor span is not "
                "inside the antecedent subtree");

  // Optional consistency fields.
  if (f.contains("sentence_ana")) {
    if (f.at("sentence_ana").get<std::string>() != p.sentence_ana())
      throw Error(Errc::invariant_violation,
                  "sentence_ana does not reproduce from text + anaphor span");
  }
  return p;
}

// Canonicalizes one input record through the alias table.
RawRecord canonicalize(const json& record, std::size_t line_no,
                       const FieldAliases& aliases) {
  static const char* kFields[] = {"sentence_ant_ana",
                                  "sentence_ana",
                                  "text",
                                  "anaphora",
                                  "antecedent_subtree",
                                  "antecedent_root",
                                  "anaphor_span",
                                  "antecedent_subtree_span",
                                  "antecedent_root_span",
                                  "coref_type",
                                  "pronoun_category",
                                  "distance",
                                  "anaphor_in_antecedent",
                                  "subcorpus",
                                  "split"};
  RawRecord raw;
  if (const json* id = aliases.find(record, "id"); id) {
    raw.id = id->is_string() ? id->get<std::string>() : id->dump();
  } else {
    raw.id = "line-" + std::to_string(line_no);
  }
  raw.fields = json::object();
  for (const char* f : kFields) {
    if (const json* v = aliases.find(record, f); v) raw.fields[f] = *v;
  }
  return raw;
}

std::vector<std::string> split_tsv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, '\t')) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    out.push_back(field);
  }
  return out;
}

}  // namespace

LoadReport load_dataset(const std::filesystem::path& path,
                        const LoadOptions& options) {
  LoadReport report;

  auto consume = [&](std::size_t line_no, const json& record) {
    RawRecord raw = canonicalize(record, line_no, options.aliases);
    try {
      report.dataset.passages.push_back(assemble_passage(raw, options));
    } catch (const Error& e) {
      report.rejections.push_back({line_no, raw.id, e.what()});
    }
  };

  if (options.format == DatasetFormat::json_lines) {
    for_each_jsonl(path, consume,
                   [&](std::size_t line_no, const std::string&) {
                     report.rejections.push_back(
                         {line_no, "line-" + std::to_string(line_no),
                          "SchemaError: not valid JSON"});
                   });
  } else {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line))
      return report;  // empty file: zero passages, all counts zero
    std::vector<std::string> header = split_tsv_line(line);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      std::vector<std::string> cells = split_tsv_line(line);
      json record = json::object();
      for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i)
        record[header[i]] = cells[i];
      consume(line_no, record);
    }
  }

  report.dataset.recount();
  if (options.strict && !report.rejections.empty()) {
    std::string msg = std::to_string(report.rejections.size()) +
                      " record(s) rejected; first: line " +
                      std::to_string(report.rejections.front().line_no) +
                      " (" + report.rejections.front().reason + ")";
    throw Error(Errc::invariant_violation, msg);
  }
  return report;
}

std::vector<std::pair<std::string, std::string>> export_finetune_pairs(
    const Dataset& dataset, Split split) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Passage& p : dataset.passages) {
    if (p.metadata.split != split) continue;
    pairs.emplace_back(p.sentence_ana(), p.sentence_ant_ana());
  }
  return pairs;
}

}  // namespace anares
