#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "anares/span.hpp"

namespace anares {

using json = nlohmann::json;

enum class CorefType { grammatical, textual };
enum class PronounCategory { indef, def_pers, def_demon };
enum class Subcorpus { pdt, pcedt, pdtsc };
enum class Split { train, validation, test };

const char* to_string(CorefType t);
const char* to_string(PronounCategory c);
const char* to_string(Subcorpus s);
const char* to_string(Split s);

std::optional<CorefType> parse_coref_type(const std::string& s);
std::optional<PronounCategory> parse_pronoun_category(const std::string& s);
std::optional<Subcorpus> parse_subcorpus(const std::string& s);
std::optional<Split> parse_split(const std::string& s);

struct AnaphoraMetadata {
  CorefType coref_type = CorefType::grammatical;
  PronounCategory pronoun_category = PronounCategory::def_pers;
  // Token-level offset from anaphor to antecedent root, as annotated in
  // the source treebank; negative means the antecedent follows the
  // anaphor (cataphora). Stored, never recomputed.
  long distance = 0;
  bool anaphor_in_antecedent = false;
  Subcorpus subcorpus = Subcorpus::pdt;
  Split split = Split::train;
};

// One dataset record: a short passage with exactly one anaphor and one
// gold antecedent (subtree span plus its syntactic root).
struct Passage {
  std::string id;
  std::string text;  // tag-free, at most a few sentences
  Span anaphor;
  std::string anaphor_surface;
  Span antecedent_subtree;
  Span antecedent_root;
  AnaphoraMetadata metadata;

  std::string sentence_ana() const;      // text with <ana> tags only
  std::string sentence_ant_ana() const;  // text with both tag pairs
  std::string antecedent_subtree_text() const;
  std::string antecedent_root_text() const;
};

struct CellCounts {
  std::uint64_t passages = 0;
  std::uint64_t sentences = 0;
  std::uint64_t words = 0;
};

// Per-split, per-coreference-type tallies. Sentence and word counts are
// recomputed from the passage text with the toolkit's own heuristics.
struct DatasetCounts {
  std::array<std::array<CellCounts, 2>, 3> cells{};  // [split][coref_type]

  CellCounts& at(Split s, CorefType t) {
    return cells[static_cast<int>(s)][static_cast<int>(t)];
  }
  const CellCounts& at(Split s, CorefType t) const {
    return cells[static_cast<int>(s)][static_cast<int>(t)];
  }
  std::uint64_t total_passages() const;
};

struct Dataset {
  std::vector<Passage> passages;
  DatasetCounts counts;

  const Passage* find(const std::string& id) const;
  std::vector<const Passage*> split_view(Split s) const;
  void recount();

 private:
  mutable std::unordered_map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------
// Loading

enum class DatasetFormat { json_lines, tabular };

// Maps the toolkit's canonical field names onto the column names found
// in the input file; extendable from a config file so third-party
// revisions of the corpus load without code changes.
class FieldAliases {
 public:
  static FieldAliases defaults();
  // config shape: {"field_aliases": {"canonical": ["alias", ...]}}
  void extend(const json& config);
  const json* find(const json& record, const std::string& canonical) const;
  std::optional<std::string> find_column(
      const std::vector<std::string>& header,
      const std::string& canonical) const;

 private:
  std::map<std::string, std::vector<std::string>> names_;
};

struct LoadOptions {
  DatasetFormat format = DatasetFormat::json_lines;
  bool strict = false;  // lenient by default: skip + report bad records
  std::optional<Split> default_split;  // for files without a split column
  FieldAliases aliases = FieldAliases::defaults();
};

struct RecordRejection {
  std::size_t line_no = 0;
  std::string id;
  std::string reason;
};

struct LoadReport {
  Dataset dataset;
  std::vector<RecordRejection> rejections;
};

// Throws IoError / SchemaError for file-level problems. Per-record
// invariant violations land in the rejection list; with strict set, any
// rejection raises InvariantViolation instead.
LoadReport load_dataset(const std::filesystem::path& path,
                        const LoadOptions& options = {});

// Sequence-to-sequence pairs: the input carries the anaphor tags, the
// target additionally wraps the antecedent. Order follows the dataset.
std::vector<std::pair<std::string, std::string>> export_finetune_pairs(
    const Dataset& dataset, Split split);

// Published per-split passage statistics of the corpus this toolkit
// targets, keyed [split][coref_type]; used by `validate` for comparison.
constexpr std::array<std::array<std::uint64_t, 2>, 3> kPublishedPassageCounts{{
    {{25951, 19009}},  // train
    {{3244, 2376}},    // validation
    {{3247, 2380}},    // test
}};

}  // namespace anares
