#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anares/corpus.hpp"
#include "anares/span.hpp"

namespace anares {

// One syntactic word from a dependency parse. Feature values are sets:
// Czech tagsets emit disjunctions like Gender=Fem,Masc.
struct ParsedToken {
  std::string form;
  std::string lemma;
  std::string upos;
  std::map<std::string, std::vector<std::string>> feats;
  int head = 0;  // 1-based index within the sentence, 0 = root
  std::string deprel;
  Span char_span;           // codepoint span in the passage text
  std::size_t sentence = 0;  // sentence index within the passage
  bool inside_mwt = false;   // word belongs to a multiword surface token
};

// A dataset passage aligned with its external dependency parse. Tokens
// are flattened across the passage's sentences; heads stay sentence-local.
struct ParsedPassage {
  std::string passage_id;
  std::vector<ParsedToken> tokens;
  std::vector<std::size_t> sentence_begin;  // flat index of each sentence
  std::size_t anaphor_token = 0;            // flat index

  // Flat index of a token's head, or nullopt for sentence roots.
  std::optional<std::size_t> parent_of(std::size_t flat) const;
};

// ---------------------------------------------------------------------
// Raw CoNLL-U reading (before alignment with the dataset)

struct ConlluWord {
  int id = 0;
  std::string form, lemma, upos, xpos, feats, deprel, deps, misc;
  int head = 0;
};

struct ConlluMwt {
  int first = 0, last = 0;  // covered word ids
  std::string form;
};

struct ConlluSentence {
  std::map<std::string, std::string> comments;  // "# key = value" lines
  std::vector<ConlluWord> words;
  std::vector<ConlluMwt> mwts;
};

// Strict 10-column reader; bad column counts and non-integer heads raise
// MalformedConllu. Empty nodes (decimal ids) are skipped.
std::vector<ConlluSentence> read_conllu(const std::filesystem::path& path);

struct IngestOptions {
  // When passage_id comments are absent, sentences are grouped against
  // this id order by greedy text alignment (the order `prep` emitted).
  std::vector<std::string> order_ids;
};

struct IngestReport {
  std::vector<ParsedPassage> passages;
  std::vector<std::pair<std::string, std::string>> skipped;  // id, reason
};

// Aligns parsed sentences to dataset passages by character offsets.
// Passages whose tokens cannot be aligned to the text (or whose anaphor
// matches no token) are reported and skipped, never fatal.
IngestReport ingest_conllu(const std::filesystem::path& path,
                           const Dataset& dataset,
                           const IngestOptions& options = {});

}  // namespace anares
