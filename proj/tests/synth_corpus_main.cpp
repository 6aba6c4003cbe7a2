// Writes the deterministic stand-in corpus (dataset JSON-lines plus
// CoNLL-U parses for the test split) so the CLI can be exercised
// without the published data.
//
//   synth_corpus <dataset.jsonl> <test.conllu> [scale] [seed]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "support/synth.hpp"

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr,
                 "usage: synth_corpus <dataset.jsonl> <test.conllu> "
                 "[scale] [seed]\n");
    return 2;
  }
  double scale = argc > 3 ? std::atof(argv[3]) : 1.0;
  std::uint64_t seed = argc > 4 ? std::strtoull(argv[4], nullptr, 10) : 42;

  anares::testsupport::SynthOptions opts =
      anares::testsupport::scaled_options(scale, seed);
  auto stats = anares::testsupport::write_synth_corpus(argv[1], argv[2], opts);
  std::printf("wrote %llu passages, %llu parsed sentences\n",
              static_cast<unsigned long long>(stats.passages),
              static_cast<unsigned long long>(stats.conllu_sentences));
  return 0;
}
