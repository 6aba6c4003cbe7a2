// Acceptance suite: runs every acceptance criterion end to end against a
// deterministic full-scale stand-in corpus and prints one line per
// criterion. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "anares/baseline.hpp"
#include "anares/conllu.hpp"
#include "anares/corpus.hpp"
#include "anares/jsonl.hpp"
#include "anares/llm_client.hpp"
#include "anares/mock_endpoint.hpp"
#include "anares/pipeline.hpp"
#include "anares/prompt.hpp"
#include "anares/report.hpp"
#include "anares/response_parser.hpp"
#include "anares/scorer.hpp"
#include "anares/tagged_text.hpp"
#include "anares/textnorm.hpp"
#include "anares/utf8.hpp"
#include "support/oracle.hpp"
#include "support/synth.hpp"

namespace fs = std::filesystem;
using namespace anares;
using namespace anares::testsupport;

namespace {

int g_failures = 0;

void report_line(int num, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", num,
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

// ------------------------------------------------------------------ 1

void criterion_1_dataset_counts(const Dataset& dataset) {
  bool ok = true;
  std::ostringstream detail;
  for (int si = 0; si < 3; ++si) {
    for (int ti = 0; ti < 2; ++ti) {
      std::uint64_t got =
          dataset.counts.cells[si][ti].passages;
      std::uint64_t want = kPublishedPassageCounts[si][ti];
      if (got != want) ok = false;
    }
  }
  const DatasetCounts& c = dataset.counts;
  detail << "dataset validation - test "
         << c.at(Split::test, CorefType::grammatical).passages << "/"
         << c.at(Split::test, CorefType::textual).passages << ", train "
         << c.at(Split::train, CorefType::grammatical).passages << "/"
         << c.at(Split::train, CorefType::textual).passages << ", validation "
         << c.at(Split::validation, CorefType::grammatical).passages << "/"
         << c.at(Split::validation, CorefType::textual).passages
         << (ok ? " match the published statistics exactly"
                : " MISMATCH published statistics");
  report_line(1, ok, detail.str());
}

// ------------------------------------------------------------------ 2

double run_baseline(const Dataset& dataset,
                    const std::vector<ParsedPassage>& parsed,
                    FallbackMode mode) {
  std::vector<std::pair<std::string, ScoreResult>> results;
  for (const ParsedPassage& pp : parsed) {
    const Passage* p = dataset.find(pp.passage_id);
    Tokenization tokens = Tokenization::of(p->text);
    auto span = resolve(pp, *p, mode);
    results.emplace_back(
        pp.passage_id,
        span ? score_span(*span, p->antecedent_root, p->antecedent_subtree,
                          tokens)
             : ScoreResult::fail(Failure::no_prediction));
  }
  return aggregate(results, dataset).overall.accuracy();
}

void criterion_2_baseline(const Dataset& dataset, const fs::path& conllu) {
  IngestReport parsed = ingest_conllu(conllu, dataset);
  double nearest = run_baseline(dataset, parsed.passages,
                                FallbackMode::nearest);
  double abstain = run_baseline(dataset, parsed.passages,
                                FallbackMode::abstain);
  const double target = 0.310, tol = 0.05;
  bool ok = std::fabs(nearest - target) <= tol &&
            std::fabs(abstain - target) <= tol && parsed.skipped.empty();
  const char* closer =
      std::fabs(nearest - target) <= std::fabs(abstain - target) ? "nearest"
                                                                 : "abstain";
  report_line(2, ok,
              "rule-based baseline - nearest " + fmt(nearest) + ", abstain " +
                  fmt(abstain) + ", target 0.310 +/- 0.050 (closer mode: " +
                  closer + ", " + std::to_string(parsed.passages.size()) +
                  " parsed passages)");
}

// ------------------------------------------------------------------ 3

void criterion_3_oracle_equivalence(const Dataset& dataset) {
  std::size_t passages_used = 0, spans_checked = 0, disagreements = 0;
  for (const Passage& p : dataset.passages) {
    if (p.metadata.split != Split::test) continue;
    OracleScorer oracle(p.text);
    if (oracle.token_count() > 12) continue;
    Tokenization tokens = Tokenization::of(p.text);
    for (std::size_t a = 0; a < oracle.token_count(); ++a) {
      for (std::size_t b = a; b < oracle.token_count(); ++b) {
        Span cand{oracle.token_span(a).start, oracle.token_span(b).end};
        ScoreResult ours =
            score_span(cand, p.antecedent_root, p.antecedent_subtree, tokens);
        ScoreResult ref =
            oracle.score(cand, p.antecedent_root, p.antecedent_subtree);
        if (ours.correct() != ref.correct() ||
            (!ours.correct() && ours.failure != ref.failure))
          ++disagreements;
        ++spans_checked;
      }
    }
    if (++passages_used >= 200) break;
  }
  bool ok = passages_used >= 50 && disagreements == 0;
  report_line(3, ok,
              "scorer oracle equivalence - " + std::to_string(passages_used) +
                  " passages, " + std::to_string(spans_checked) +
                  " token subspans, " + std::to_string(disagreements) +
                  " disagreement(s)");
}

// ------------------------------------------------------------------ 4

void criterion_4_metric_properties(const Dataset& dataset) {
  std::mt19937_64 rng(4242);
  std::vector<const Passage*> test = dataset.split_view(Split::test);
  std::size_t cases = 0, violations = 0;

  // gold replay: the gold tagged sentence always scores correct
  std::size_t gold_correct = 0, gold_total = 0;
  for (std::size_t i = 0; i < 400; ++i) {
    const Passage& p = *test[rng() % test.size()];
    Tokenization tokens = Tokenization::of(p.text);
    if (score_tagged_sentence(p.sentence_ant_ana(), p, tokens).correct())
      ++gold_correct;
    ++gold_total;
    ++cases;
  }
  if (gold_correct != gold_total) ++violations;

  // monotonicity: any token-snapped span between root and subtree is correct
  for (std::size_t i = 0; i < 300; ++i) {
    const Passage& p = *test[rng() % test.size()];
    Tokenization tokens = Tokenization::of(p.text);
    auto root_cov = tokens.covered(p.antecedent_root);
    auto gold_cov = tokens.covered(p.antecedent_subtree);
    if (!root_cov || !gold_cov) continue;
    std::size_t a =
        gold_cov->first + rng() % (root_cov->first - gold_cov->first + 1);
    std::size_t b = root_cov->second +
                    rng() % (gold_cov->second - root_cov->second + 1);
    Span cand{tokens.token_spans[a].start, tokens.token_spans[b].end};
    if (!score_span(cand, p.antecedent_root, p.antecedent_subtree, tokens)
             .correct())
      ++violations;
    ++cases;
  }

  // empty or absent predictions never score correct
  for (std::size_t i = 0; i < 200; ++i) {
    const Passage& p = *test[rng() % test.size()];
    Tokenization tokens = Tokenization::of(p.text);
    const char* empties[] = {"", " ", "\t", "\n \t"};
    if (score_answer_string(empties[i % 4], p, tokens).correct()) ++violations;
    Prediction none;
    none.id = p.id;
    if (score_prediction(none, p).correct()) ++violations;
    ++cases;
  }

  // whitespace perturbations never flip a verdict
  for (std::size_t i = 0; i < 300; ++i) {
    const Passage& p = *test[rng() % test.size()];
    Tokenization tokens = Tokenization::of(p.text);
    std::u32string text32 = tokens.text;
    auto cov = tokens.covered(p.antecedent_subtree);
    std::size_t t0 = rng() % tokens.token_spans.size();
    std::size_t t1 = std::min(t0 + rng() % 4, tokens.token_spans.size() - 1);
    (void)cov;
    std::string base = utf8::encode(std::u32string(
        text32.substr(tokens.token_spans[t0].start,
                      tokens.token_spans[t1].end -
                          tokens.token_spans[t0].start)));
    ScoreResult expect = score_answer_string(base, p, tokens);

    std::string noisy;
    for (int k = static_cast<int>(rng() % 3); k-- > 0;) noisy += ' ';
    for (char c : base) {
      noisy += c;
      if (c == ' ' && rng() % 2) noisy += "  ";
    }
    for (int k = static_cast<int>(rng() % 3); k-- > 0;)
      noisy += " \t"[rng() % 2];
    ScoreResult got = score_answer_string(noisy, p, tokens);
    if (got.correct() != expect.correct() || got.failure != expect.failure)
      ++violations;
    ++cases;
  }

  bool ok = cases >= 1000 && violations == 0;
  report_line(4, ok,
              "metric property suite - " + std::to_string(cases) +
                  " generated cases (gold replay " +
                  std::to_string(gold_correct) + "/" +
                  std::to_string(gold_total) +
                  ", monotonicity, empty/absent, whitespace), " +
                  std::to_string(violations) + " violation(s)");
}

// ------------------------------------------------------------------ 5

void criterion_5_round_trip(const Dataset& dataset) {
  std::size_t checked = 0, failures = 0;
  for (const Passage& p : dataset.passages) {
    std::string rendered =
        render_tagged_text(p.text, p.anaphor, p.antecedent_subtree);
    TaggedParse back = parse_tagged_text(rendered);
    if (back.plain != p.text || back.ana != std::optional<Span>(p.anaphor) ||
        back.ant != std::optional<Span>(p.antecedent_subtree))
      ++failures;
    ++checked;
  }
  report_line(5, failures == 0,
              "tag round-trip - parse(render(.)) identity on " +
                  std::to_string(checked) + " records across all splits, " +
                  std::to_string(failures) + " failure(s)");
}

// ------------------------------------------------------------------ 6

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(ANARES_GOLDEN_DIR) + "/" + name,
                   std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_6_prompt_goldens(const Dataset& dataset) {
  TaggedParse example = parse_tagged_text(
      "<ant>Budova</ant>, <ana>která</ana> byla dokončena v loňském roce, "
      "stále nebyla otevřena.");
  Passage p;
  p.id = "example";
  p.text = example.plain;
  p.anaphor = *example.ana;
  p.anaphor_surface = "která";
  p.antecedent_subtree = *example.ant;
  p.antecedent_root = *example.ant;

  bool golden_ok =
      render(Strategy::yes_no, p, {}, p.antecedent_subtree_text()).rendered ==
          read_golden("prompt_yes_no_0shot.txt") &&
      render(Strategy::question_answering, p, {}).rendered ==
          read_golden("prompt_question_answering_0shot.txt") &&
      render(Strategy::tagging, p, {}).rendered ==
          read_golden("prompt_tagging_0shot.txt");

  // monotone structure for k in {1,3}
  bool monotone_ok = true;
  std::vector<Passage> three = select_exemplars(dataset, 3, 7);
  std::vector<Passage> one(three.begin(), three.begin() + 1);
  for (Strategy s : {Strategy::question_answering, Strategy::tagging}) {
    std::string zero = render(s, p, {}).rendered;
    std::string one_shot = render(s, p, one).rendered;
    std::string three_shot = render(s, p, three).rendered;
    auto qpos = [&](const std::string& t) {
      return t.rfind("SENTENCE: \"" + p.sentence_ana());
    };
    monotone_ok = monotone_ok &&
                  one_shot.substr(0, qpos(one_shot))
                      .starts_with(zero.substr(0, qpos(zero))) &&
                  three_shot.substr(0, qpos(three_shot))
                      .starts_with(one_shot.substr(0, qpos(one_shot))) &&
                  zero.substr(qpos(zero)) == one_shot.substr(qpos(one_shot)) &&
                  one_shot.substr(qpos(one_shot)) ==
                      three_shot.substr(qpos(three_shot));
  }
  report_line(6, golden_ok && monotone_ok,
              std::string("prompt golden files - zero-shot renders ") +
                  (golden_ok ? "byte-identical to transcriptions"
                             : "DIFFER from transcriptions") +
                  ", few-shot structure " +
                  (monotone_ok ? "monotone for k in {1,3}" : "NOT monotone"));
}

// ------------------------------------------------------------------ 7

struct MockRunOutcome {
  double accuracy = -1.0;
  std::size_t total = 0;
  std::uint64_t classified_failures = 0;
  std::uint64_t yes_answers = 0;
  int high_water = 0;
  int requests_first = 0;
  int requests_second = 0;
  StratifiedReport report;
};

MockRunOutcome mock_run(const Dataset& dataset, Strategy strategy,
                        MockEndpoint::Mode mode, int shots,
                        std::size_t limit, const fs::path& run_dir) {
  std::vector<PromptInstance> prompts;
  if (strategy == Strategy::yes_no) {
    auto pairs = make_yesno_pairs(dataset, Split::test, 0.0, 42);
    std::size_t step = std::max<std::size_t>(1, pairs.size() / limit);
    for (std::size_t i = 0; i < pairs.size() && prompts.size() < limit;
         i += step) {
      const Passage* p = dataset.find(pairs[i].passage_id);
      PromptInstance pi = render(strategy, *p, {}, pairs[i].candidate);
      pi.expected_yes = pairs[i].expected_yes;
      prompts.push_back(std::move(pi));
    }
  } else {
    std::vector<Passage> exemplars =
        shots > 0 ? select_exemplars(dataset, shots, 42)
                  : std::vector<Passage>{};
    std::vector<const Passage*> pool = dataset.split_view(Split::test);
    std::size_t step = std::max<std::size_t>(1, pool.size() / limit);
    for (std::size_t i = 0; i < pool.size() && prompts.size() < limit;
         i += step)
      prompts.push_back(render(strategy, *pool[i], exemplars));
  }

  MockEndpoint mock;
  mock.set_mode(mode);
  if (mode == MockEndpoint::Mode::echo_gold) {
    std::unordered_map<std::string, std::string> answers;
    for (const PromptInstance& pi : prompts) {
      const Passage* p = dataset.find(pi.passage_id);
      if (strategy == Strategy::yes_no)
        answers[pi.passage_id] = *pi.expected_yes ? "YES" : "NO";
      else if (strategy == Strategy::question_answering)
        answers[pi.passage_id] = "[" + p->antecedent_subtree_text() + "]";
      else
        answers[pi.passage_id] = "[" + p->sentence_ant_ana() + "]";
    }
    mock.set_answers(std::move(answers));
  }

  EndpointConfig cfg;
  cfg.base_url = mock.base_url();
  cfg.model_id = "mock";
  cfg.max_in_flight = 4;
  cfg.retry_backoff_ms = 1;

  std::vector<BatchItem> items;
  for (const PromptInstance& pi : prompts)
    items.push_back({pi.passage_id, pi.rendered});

  fs::remove_all(run_dir);
  RunStore store(run_dir);
  std::vector<BatchResult> raw = run_batch(items, cfg, &store);

  MockRunOutcome out;
  out.requests_first = mock.request_count();
  out.high_water = mock.high_water_mark();

  // resumption must hit the store only
  mock.reset_counters();
  run_batch(items, cfg, &store);
  out.requests_second = mock.request_count();

  std::vector<std::pair<std::string, ScoreResult>> results;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Passage* p = dataset.find(raw[i].id);
    std::string text = raw[i].raw.value_or("");
    ScoreResult r;
    if (strategy == Strategy::yes_no) {
      ParsedResponse pr = parse_yesno(text);
      if (pr.kind == ParsedResponse::Kind::yes) ++out.yes_answers;
      r = score_yesno_response(text, *prompts[i].expected_yes);
    } else if (strategy == Strategy::question_answering) {
      ParsedResponse pr = parse_bracketed(text);
      Tokenization tokens = Tokenization::of(p->text);
      r = pr.kind == ParsedResponse::Kind::answer_string
              ? score_answer_string(*pr.payload, *p, tokens)
              : ScoreResult::fail(Failure::format_error);
    } else {
      ParsedResponse pr = parse_tagged_response(text);
      Tokenization tokens = Tokenization::of(p->text);
      r = pr.kind == ParsedResponse::Kind::tagged_sentence
              ? score_tagged_sentence(*pr.payload, *p, tokens)
              : ScoreResult::fail(Failure::format_error);
    }
    if (!r.correct() && r.failure) ++out.classified_failures;
    results.emplace_back(raw[i].id, r);
  }
  out.report = aggregate(results, dataset);
  out.accuracy = out.report.overall.accuracy();
  out.total = results.size();
  return out;
}

void criterion_7_mock_end_to_end(const Dataset& dataset,
                                 const fs::path& work) {
  const std::size_t n = 250;
  auto qa = mock_run(dataset, Strategy::question_answering,
                     MockEndpoint::Mode::echo_gold, 0, n, work / "m_qa");
  auto tg = mock_run(dataset, Strategy::tagging, MockEndpoint::Mode::echo_gold,
                     0, n, work / "m_tag");
  auto yn = mock_run(dataset, Strategy::yes_no, MockEndpoint::Mode::echo_gold,
                     0, n, work / "m_yn");
  auto empty = mock_run(dataset, Strategy::question_answering,
                        MockEndpoint::Mode::empty, 0, n, work / "m_empty");

  bool gold_ok = qa.accuracy == 1.0 && tg.accuracy == 1.0 &&
                 yn.yes_answers == yn.total && yn.accuracy == 1.0;
  bool empty_ok = empty.accuracy == 0.0 &&
                  empty.classified_failures == empty.total;
  bool hwm_ok = qa.high_water <= 4 && tg.high_water <= 4 &&
                yn.high_water <= 4 && empty.high_water <= 4;
  bool resume_ok = qa.requests_second == 0 && tg.requests_second == 0 &&
                   yn.requests_second == 0 && empty.requests_second == 0;

  std::ostringstream detail;
  detail << "mock end-to-end - echo-gold: qa " << fmt(qa.accuracy) << ", tag "
         << fmt(tg.accuracy) << ", yes/no " << yn.yes_answers << "/"
         << yn.total << " YES; empty: " << fmt(empty.accuracy) << " with "
         << empty.classified_failures << "/" << empty.total
         << " classified failures; in-flight high-water "
         << std::max({qa.high_water, tg.high_water, yn.high_water}) << " <= 4"
         << (resume_ok ? "; resumed runs made 0 requests"
                       : "; RESUME MADE REQUESTS");
  report_line(7, gold_ok && empty_ok && hwm_ok && resume_ok, detail.str());
}

// ------------------------------------------------------------------ 8

void criterion_8_desk_scale(const Dataset& dataset, const fs::path& work) {
  std::printf(
      "[INFO] criterion 8: the published model accuracies (prompted "
      "27B-123B models and fine-tuned seq2seq results) require GPU-scale "
      "inference and training and are NOT reproducible at desk scale; per "
      "the acceptance terms, criteria 3-7 plus a live-endpoint-shaped "
      "resumable run substitute for them.\n");

  // A full evaluation-shaped run against the mock endpoint must complete
  // resumably and emit reports with the expected stratification axes.
  auto outcome = mock_run(dataset, Strategy::question_answering,
                          MockEndpoint::Mode::echo_gold, 3, 400,
                          work / "m_full");
  std::string md = emit_markdown(outcome.report);
  bool shape_ok = md.find("## By pronoun category and anaphora type") !=
                      std::string::npos &&
                  md.find("## By antecedent distance") != std::string::npos &&
                  md.find("## By subcorpus") != std::string::npos &&
                  md.find("cataphora") != std::string::npos &&
                  md.find("PDTSC 2.0") != std::string::npos;
  bool ok = shape_ok && outcome.requests_second == 0 &&
            outcome.total == 400;
  report_line(8, ok,
              "endpoint-shaped three-shot run - " +
                  std::to_string(outcome.total) +
                  " passages completed resumably, reports carry the pronoun "
                  "category x type, distance and subcorpus tables");
}

// ------------------------------------------------------------------ 9

void criterion_9_report_fixture(const Dataset& dataset) {
  // hand-counted synthetic outcomes per stratum
  std::vector<const Passage*> test = dataset.split_view(Split::test);
  auto pick = [&](CorefType type, PronounCategory cat, std::size_t k) {
    std::vector<const Passage*> out;
    for (const Passage* p : test) {
      if (p->metadata.coref_type != type ||
          p->metadata.pronoun_category != cat)
        continue;
      out.push_back(p);
      if (out.size() == k) break;
    }
    return out;
  };

  auto g_ind = pick(CorefType::grammatical, PronounCategory::indef, 4);
  auto g_per = pick(CorefType::grammatical, PronounCategory::def_pers, 2);
  auto t_per = pick(CorefType::textual, PronounCategory::def_pers, 5);
  auto t_dem = pick(CorefType::textual, PronounCategory::def_demon, 3);
  bool have_all = g_ind.size() == 4 && g_per.size() == 2 &&
                  t_per.size() == 5 && t_dem.size() == 3;

  std::vector<std::pair<std::string, ScoreResult>> results;
  // grammatical indef: 3/4 correct; grammatical pers: 1/2;
  // textual pers: 2/5 (one format error, one no_prediction);
  // textual demon: 1/3
  auto add = [&results](const std::vector<const Passage*>& ps,
                        std::vector<ScoreResult> rs) {
    for (std::size_t i = 0; i < ps.size(); ++i)
      results.emplace_back(ps[i]->id, rs[i]);
  };
  add(g_ind, {ScoreResult::ok(), ScoreResult::ok(), ScoreResult::ok(),
              ScoreResult::fail(Failure::root_missing)});
  add(g_per, {ScoreResult::ok(),
              ScoreResult::fail(Failure::containment_violated)});
  add(t_per, {ScoreResult::ok(), ScoreResult::ok(),
              ScoreResult::fail(Failure::format_error),
              ScoreResult::fail(Failure::no_prediction),
              ScoreResult::fail(Failure::root_missing)});
  add(t_dem, {ScoreResult::ok(), ScoreResult::fail(Failure::root_missing),
              ScoreResult::fail(Failure::format_error)});

  StratifiedReport rep = aggregate(results, dataset);
  auto cell = [&rep](PronounCategory cat, CorefType type) {
    auto it = rep.by_pron_coref.find({cat, type});
    return it == rep.by_pron_coref.end() ? Cell{0, 0} : it->second;
  };

  bool ok = have_all && rep.overall == Cell{7, 14} &&
            cell(PronounCategory::indef, CorefType::grammatical) ==
                Cell{3, 4} &&
            cell(PronounCategory::def_pers, CorefType::grammatical) ==
                Cell{1, 2} &&
            cell(PronounCategory::def_pers, CorefType::textual) ==
                Cell{2, 5} &&
            cell(PronounCategory::def_demon, CorefType::textual) ==
                Cell{1, 3} &&
            !rep.by_pron_coref.contains(
                {PronounCategory::def_demon, CorefType::grammatical}) &&
            rep.failures.at(Failure::format_error) == 2;

  // the markdown table must show the demonstrative row with no
  // grammatical cell
  std::string md = emit_markdown(rep);
  ok = ok && md.find("| n.pron.def.demon | - | 0.333 | 0.333 |") !=
                 std::string::npos;

  report_line(9, ok,
              "report fixture - hand-counted strata reproduced exactly; "
              "grammatical x demonstrative cell structurally absent");
}

}  // namespace

int main() {
  fs::path work = fs::temp_directory_path() / "anares-acceptance";
  fs::create_directories(work);
  fs::path dataset_path = work / "dataset.jsonl";
  fs::path conllu_path = work / "test.conllu";

  std::printf("generating the full-scale stand-in corpus...\n");
  SynthStats stats = write_synth_corpus(dataset_path, conllu_path, {});
  std::printf("  %llu passages, %llu parsed sentences\n",
              static_cast<unsigned long long>(stats.passages),
              static_cast<unsigned long long>(stats.conllu_sentences));

  LoadReport loaded = load_dataset(dataset_path);
  if (!loaded.rejections.empty()) {
    std::printf("[FAIL] setup: %zu records rejected at load\n",
                loaded.rejections.size());
    return 1;
  }
  const Dataset& dataset = loaded.dataset;

  auto guard = [](int num, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      report_line(num, false, std::string("exception: ") + e.what());
    }
  };

  guard(1, [&] { criterion_1_dataset_counts(dataset); });
  guard(2, [&] { criterion_2_baseline(dataset, conllu_path); });
  guard(3, [&] { criterion_3_oracle_equivalence(dataset); });
  guard(4, [&] { criterion_4_metric_properties(dataset); });
  guard(5, [&] { criterion_5_round_trip(dataset); });
  guard(6, [&] { criterion_6_prompt_goldens(dataset); });
  guard(7, [&] { criterion_7_mock_end_to_end(dataset, work); });
  guard(8, [&] { criterion_8_desk_scale(dataset, work); });
  guard(9, [&] { criterion_9_report_fixture(dataset); });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) FAILED\n", g_failures);
  return 1;
}
