#include "anares/tagged_text.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "anares/errors.hpp"
#include "anares/utf8.hpp"

namespace anares {

namespace {

struct TagPair {
  bool present = false;
  std::size_t open_pos = 0;   // offset of '<'
  std::size_t open_end = 0;   // offset past '>'
  std::size_t close_pos = 0;  // offset of '<' of the closing tag
  std::size_t close_end = 0;  // offset past '>'
};

std::vector<std::size_t> find_all(const std::u32string& hay,
                                  std::u32string_view needle) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while ((pos = hay.find(needle, pos)) != std::u32string::npos) {
    out.push_back(pos);
    pos += 1;
  }
  return out;
}

TagPair locate_pair(const std::u32string& text, std::u32string_view open,
                    std::u32string_view close, const char* tag_name) {
  auto opens = find_all(text, open);
  auto closes = find_all(text, close);
  if (opens.size() > 1 || closes.size() > 1)
    throw Error(Errc::duplicate_tag,
                std::string("more than one <") + tag_name + "> pair");
  if (opens.size() != closes.size())
    throw Error(Errc::unbalanced_tags,
                std::string("<") + tag_name + "> without matching tag");
  TagPair p;
  if (opens.empty()) return p;
  if (closes[0] < opens[0])
    throw Error(Errc::unbalanced_tags,
                std::string("</") + tag_name + "> precedes <" + tag_name + ">");
  p.present = true;
  p.open_pos = opens[0];
  p.open_end = opens[0] + open.size();
  p.close_pos = closes[0];
  p.close_end = closes[0] + close.size();
  if (p.open_end == p.close_pos)
    throw Error(Errc::empty_tag_content,
                std::string("<") + tag_name + "> encloses no text");
  return p;
}

// Disjoint, or one tagged region strictly inside the other's content.
void check_nesting(const TagPair& a, const TagPair& b) {
  if (!a.present || !b.present) return;
  if (a.close_end <= b.open_pos || b.close_end <= a.open_pos) return;
  bool a_in_b = a.open_pos >= b.open_end && a.close_end <= b.close_pos;
  bool b_in_a = b.open_pos >= a.open_end && b.close_end <= a.close_pos;
  if (!a_in_b && !b_in_a)
    throw Error(Errc::crossing_tags, "tag pairs overlap without containment");
}

}  // namespace

TaggedParse parse_tagged_text(std::string_view tagged) {
  std::u32string text = utf8::decode(tagged);
  TagPair ana = locate_pair(text, U"<ana>", U"</ana>", "ana");
  TagPair ant = locate_pair(text, U"<ant>", U"</ant>", "ant");
  check_nesting(ana, ant);

  // Walk the text dropping tag codepoints; record where each tag's
  // content starts/ends in the stripped output.
  struct Cut {
    std::size_t begin, end;
  };
  std::vector<Cut> cuts;
  if (ana.present) {
    cuts.push_back({ana.open_pos, ana.open_end});
    cuts.push_back({ana.close_pos, ana.close_end});
  }
  if (ant.present) {
    cuts.push_back({ant.open_pos, ant.open_end});
    cuts.push_back({ant.close_pos, ant.close_end});
  }
  std::sort(cuts.begin(), cuts.end(),
            [](const Cut& x, const Cut& y) { return x.begin < y.begin; });

  // removed(i) = tag codepoints occurring before original offset i
  auto removed_before = [&cuts](std::size_t i) {
    std::size_t r = 0;
    for (const Cut& c : cuts)
      if (c.end <= i) r += c.end - c.begin;
    return r;
  };

  std::u32string plain;
  plain.reserve(text.size());
  std::size_t i = 0;
  std::size_t cut_idx = 0;
  while (i < text.size()) {
    if (cut_idx < cuts.size() && i == cuts[cut_idx].begin) {
      i = cuts[cut_idx].end;
      ++cut_idx;
      continue;
    }
    plain.push_back(text[i]);
    ++i;
  }

  TaggedParse out;
  out.plain = utf8::encode(plain);
  if (ana.present)
    out.ana = Span{ana.open_end - removed_before(ana.open_end),
                   ana.close_pos - removed_before(ana.close_pos)};
  if (ant.present)
    out.ant = Span{ant.open_end - removed_before(ant.open_end),
                   ant.close_pos - removed_before(ant.close_pos)};
  return out;
}

std::string render_tagged_text(std::string_view plain, std::optional<Span> ana,
                               std::optional<Span> ant) {
  std::u32string text = utf8::decode(plain);
  auto validate = [&](const std::optional<Span>& s, const char* what) {
    if (!s) return;
    if (s->start >= s->end || s->end > text.size())
      throw Error(Errc::invalid_span,
                  std::string(what) + " span " + to_string(*s) +
                      " invalid for text of length " +
                      std::to_string(text.size()));
  };
  validate(ana, "ana");
  validate(ant, "ant");
  if (ana && ant && ana->overlaps(*ant) && !ant->contains(*ana) &&
      !ana->contains(*ant))
    throw Error(Errc::crossing_tags, "spans overlap without containment");

  // Insertions at each offset. At equal offsets: closes before opens
  // (adjacent spans), inner closes first, outer opens first; identical
  // spans nest <ant> as the outer pair.
  struct Ins {
    std::size_t pos;
    bool open;
    std::size_t other;  // the span's other endpoint
    bool is_ant;
    std::u32string_view tag;
  };
  std::vector<Ins> ins;
  if (ana) {
    ins.push_back({ana->start, true, ana->end, false, U"<ana>"});
    ins.push_back({ana->end, false, ana->start, false, U"</ana>"});
  }
  if (ant) {
    ins.push_back({ant->start, true, ant->end, true, U"<ant>"});
    ins.push_back({ant->end, false, ant->start, true, U"</ant>"});
  }
  std::sort(ins.begin(), ins.end(), [](const Ins& x, const Ins& y) {
    if (x.pos != y.pos) return x.pos < y.pos;
    if (x.open != y.open) return !x.open;   // close before open
    if (x.other != y.other) return x.other > y.other;
    return x.open ? x.is_ant > y.is_ant : x.is_ant < y.is_ant;
  });

  std::u32string out;
  out.reserve(text.size() + 22);
  std::size_t next = 0;
  for (const Ins& e : ins) {
    out.append(text, next, e.pos - next);
    out.append(e.tag);
    next = e.pos;
  }
  out.append(text, next, text.size() - next);
  return utf8::encode(out);
}

}  // namespace anares
