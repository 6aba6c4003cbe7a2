#pragma once

#include <string>
#include <string_view>

#include "anares/corpus.hpp"
#include "anares/span.hpp"
#include "anares/utf8.hpp"

namespace anares::testsupport {

// Codepoint span of the first occurrence of `needle` in `text`.
inline Span span_of(std::string_view text, std::string_view needle) {
  std::u32string t = utf8::decode(text);
  std::u32string n = utf8::decode(needle);
  auto pos = t.find(n);
  if (pos == std::u32string::npos)
    throw std::runtime_error("fixture substring not found: " +
                             std::string(needle));
  return Span{pos, pos + n.size()};
}

// The relative-clause example sentence used across the docs and prompts.
inline Passage building_passage() {
  Passage p;
  p.id = "fx-building";
  p.text =
      "Budova, která byla dokončena v loňském roce, stále nebyla otevřena.";
  p.anaphor = span_of(p.text, "která");
  p.anaphor_surface = "která";
  p.antecedent_subtree = span_of(p.text, "Budova");
  p.antecedent_root = p.antecedent_subtree;
  p.metadata.coref_type = CorefType::grammatical;
  p.metadata.pronoun_category = PronounCategory::indef;
  p.metadata.distance = 2;
  p.metadata.anaphor_in_antecedent = false;
  p.metadata.subcorpus = Subcorpus::pdt;
  p.metadata.split = Split::test;
  return p;
}

// Cross-clause personal pronoun; the antecedent is a multi-token phrase.
inline Passage tree_passage() {
  Passage p;
  p.id = "fx-tree";
  p.text = "Šťastný strom rostoucí v lese potěšil každého, kdo na něj pohlédl.";
  p.anaphor = span_of(p.text, "něj");
  p.anaphor_surface = "něj";
  p.antecedent_subtree = span_of(p.text, "Šťastný strom rostoucí v lese");
  p.antecedent_root = span_of(p.text, "strom");
  p.metadata.coref_type = CorefType::textual;
  p.metadata.pronoun_category = PronounCategory::def_pers;
  p.metadata.distance = 8;
  p.metadata.anaphor_in_antecedent = false;
  p.metadata.subcorpus = Subcorpus::pcedt;
  p.metadata.split = Split::test;
  return p;
}

}  // namespace anares::testsupport
