// Command-line entry point: validate/export datasets, run the rule-based
// baseline over external parses, render prompts, drive a completion
// endpoint (or the built-in mock), parse and score responses, and emit
// stratified accuracy reports. Stages communicate through files only, so
// expensive endpoint runs stay auditable and re-scorable.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anares/baseline.hpp"
#include "anares/conllu.hpp"
#include "anares/corpus.hpp"
#include "anares/errors.hpp"
#include "anares/jsonl.hpp"
#include "anares/llm_client.hpp"
#include "anares/mock_endpoint.hpp"
#include "anares/pipeline.hpp"
#include "anares/prompt.hpp"
#include "anares/report.hpp"
#include "anares/response_parser.hpp"
#include "anares/scorer.hpp"
#include "anares/tagged_text.hpp"
#include "anares/version.hpp"

namespace fs = std::filesystem;
using namespace anares;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // validation / scoring failure
constexpr int kExitConfig = 2;    // configuration error
constexpr int kExitEndpoint = 3;  // endpoint failure

json load_config_file(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw Error(Errc::config_error, "cannot open config " + path);
  json cfg = json::parse(in, nullptr, false);
  if (cfg.is_discarded())
    throw Error(Errc::config_error, path + " is not valid JSON");
  return cfg;
}

// flags win over config values; config wins over built-in defaults
template <typename T>
void merge(const CLI::App* cmd, const std::string& flag, const json& cfg,
           const char* key, T& value) {
  const CLI::Option* opt = cmd->get_option(flag);
  if (opt && opt->count() > 0) return;
  if (cfg.contains(key)) value = cfg.at(key).get<T>();
}

struct DatasetArgs {
  std::string path;
  std::string format = "jsonl";
  std::string default_split;
  bool strict = false;

  void attach(CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--dataset", path, "dataset file (JSON-lines)");
    if (required) o->required();
    cmd->add_option("--format", format, "dataset format: jsonl or tsv");
    cmd->add_option("--default-split", default_split,
                    "split for records without one");
    cmd->add_flag("--strict", strict, "fail on any rejected record");
  }

  LoadOptions options(const json& cfg) const {
    LoadOptions opts;
    if (format == "jsonl" || format == "json-lines")
      opts.format = DatasetFormat::json_lines;
    else if (format == "tsv" || format == "tabular")
      opts.format = DatasetFormat::tabular;
    else
      throw Error(Errc::config_error, "unknown format " + format);
    opts.strict = strict;
    if (!default_split.empty()) {
      auto s = parse_split(default_split);
      if (!s)
        throw Error(Errc::config_error, "unknown split " + default_split);
      opts.default_split = s;
    }
    opts.aliases.extend(cfg);
    return opts;
  }
};

Split split_or_die(const std::string& name) {
  auto s = parse_split(name);
  if (!s) throw Error(Errc::config_error, "unknown split " + name);
  return *s;
}

Strategy strategy_or_die(const std::string& name) {
  auto s = parse_strategy(name);
  if (!s) throw Error(Errc::config_error, "unknown strategy " + name);
  return *s;
}

void print_rejections(const std::vector<RecordRejection>& rejections) {
  std::size_t shown = 0;
  for (const RecordRejection& r : rejections) {
    if (++shown > 20) {
      std::cerr << "  ... " << (rejections.size() - 20) << " more\n";
      break;
    }
    std::cerr << "  line " << r.line_no << " (" << r.id << "): " << r.reason
              << "\n";
  }
}

void write_report_files(const fs::path& dir, const StratifiedReport& report) {
  fs::create_directories(dir);
  std::ofstream(dir / "report.json") << emit_json(report);
  std::ofstream(dir / "report.csv") << emit_csv(report);
  std::ofstream(dir / "report.md") << emit_markdown(report);
}

void finish_manifest(const fs::path& dir, const std::string& command,
                     const json& config,
                     const std::vector<fs::path>& inputs) {
  fs::path target = dir.empty() ? fs::path(".") : dir;
  fs::create_directories(target);
  write_manifest(target / "manifest.json",
                 make_manifest(command, config, inputs));
}

// The documentation example sentence; `prompt goldens` renders the
// template transcriptions from it.
Passage example_passage() {
  Passage p;
  p.id = "example";
  TaggedParse parsed = parse_tagged_text(
      "<ant>Budova</ant>, <ana>která</ana> byla dokončena v loňském roce, "
      "stále nebyla otevřena.");
  p.text = parsed.plain;
  p.anaphor = *parsed.ana;
  p.anaphor_surface = "která";
  p.antecedent_subtree = *parsed.ant;
  p.antecedent_root = *parsed.ant;
  p.metadata.coref_type = CorefType::grammatical;
  p.metadata.pronoun_category = PronounCategory::indef;
  p.metadata.distance = 2;
  p.metadata.split = Split::test;
  return p;
}

// ------------------------------------------------------------ validate

int cmd_validate(const DatasetArgs& dargs, const json& cfg) {
  LoadReport rep;
  try {
    rep = load_dataset(dargs.path, dargs.options(cfg));
  } catch (const Error& e) {
    if (e.code() == Errc::invariant_violation) {
      std::cerr << "validation failed: " << e.what() << "\n";
      return kExitFailure;
    }
    throw;
  }

  const DatasetCounts& c = rep.dataset.counts;
  std::cout << "split        grammatical/textual   sentences      words\n";
  for (int si = 0; si < 3; ++si) {
    Split split = static_cast<Split>(si);
    const CellCounts& g = c.at(split, CorefType::grammatical);
    const CellCounts& t = c.at(split, CorefType::textual);
    std::printf("%-12s %7llu/%-7llu  %6llu/%-6llu  %7llu/%-7llu\n",
                to_string(split), (unsigned long long)g.passages,
                (unsigned long long)t.passages, (unsigned long long)g.sentences,
                (unsigned long long)t.sentences, (unsigned long long)g.words,
                (unsigned long long)t.words);
  }

  bool matches = true;
  for (int si = 0; si < 3; ++si)
    for (int ti = 0; ti < 2; ++ti)
      matches = matches && c.cells[si][ti].passages ==
                               kPublishedPassageCounts[si][ti];
  std::cout << (matches
                    ? "passage counts match the published corpus statistics\n"
                    : "passage counts differ from the published corpus "
                      "statistics\n");

  if (rep.dataset.passages.empty())
    std::cerr << "warning: dataset holds no passages\n";
  if (!rep.rejections.empty()) {
    std::cerr << rep.rejections.size() << " record(s) rejected:\n";
    print_rejections(rep.rejections);
    return kExitFailure;
  }
  return kExitOk;
}

// -------------------------------------------------------------- export

int cmd_export(const DatasetArgs& dargs, const json& cfg,
               const std::string& split_name, const std::string& out) {
  LoadReport rep = load_dataset(dargs.path, dargs.options(cfg));
  auto pairs = export_finetune_pairs(rep.dataset, split_or_die(split_name));
  std::vector<json> rows;
  rows.reserve(pairs.size());
  for (auto& [input, target] : pairs)
    rows.push_back({{"input", input}, {"target", target}});
  write_jsonl(out, rows);
  std::cout << "wrote " << rows.size() << " pairs to " << out << "\n";
  finish_manifest(fs::path(out).parent_path(), "export",
                  {{"dataset", dargs.path}, {"split", split_name},
                   {"out", out}},
                  {dargs.path});
  return kExitOk;
}

// ---------------------------------------------------------------- prep

int cmd_prep(const DatasetArgs& dargs, const json& cfg,
             const std::string& split_name, const std::string& out) {
  LoadReport rep = load_dataset(dargs.path, dargs.options(cfg));
  std::ofstream text_out(out);
  std::ofstream id_out(out + ".ids");
  if (!text_out || !id_out)
    throw Error(Errc::io_error, "cannot write " + out);
  std::size_t n = 0;
  for (const Passage* p : rep.dataset.split_view(split_or_die(split_name))) {
    text_out << p->text << "\n";
    id_out << p->id << "\n";
    ++n;
  }
  std::cout << "wrote " << n << " passages to " << out << " (+ .ids)\n"
            << "parse them with any UD parser, keep sentence order, then\n"
            << "run `baseline --order-ids " << out << ".ids`\n";
  return kExitOk;
}

// ------------------------------------------------------------ baseline

int cmd_baseline(const DatasetArgs& dargs, const json& cfg,
                 const std::string& conllu_path,
                 const std::string& split_name, const std::string& fallback,
                 const std::string& order_ids_path, const std::string& out) {
  LoadReport rep = load_dataset(dargs.path, dargs.options(cfg));
  Split split = split_or_die(split_name);

  auto mode = parse_fallback_mode(fallback);
  if (!mode)
    throw Error(Errc::config_error, "unknown fallback mode " + fallback);

  IngestOptions iopts;
  if (!order_ids_path.empty()) {
    std::ifstream ids(order_ids_path);
    if (!ids)
      throw Error(Errc::io_error, "cannot open " + order_ids_path);
    std::string line;
    while (std::getline(ids, line))
      if (!line.empty()) iopts.order_ids.push_back(line);
  }
  IngestReport parsed = ingest_conllu(conllu_path, rep.dataset, iopts);
  if (!parsed.skipped.empty()) {
    std::cerr << parsed.skipped.size() << " passage(s) skipped:\n";
    std::size_t shown = 0;
    for (const auto& [id, why] : parsed.skipped) {
      if (++shown > 10) break;
      std::cerr << "  " << id << ": " << why << "\n";
    }
  }

  std::vector<Prediction> predictions;
  std::unordered_set<std::string> parsed_ids;
  for (const ParsedPassage& pp : parsed.passages) {
    const Passage* p = rep.dataset.find(pp.passage_id);
    if (!p || p->metadata.split != split) continue;
    parsed_ids.insert(pp.passage_id);
    Prediction pred;
    pred.id = pp.passage_id;
    pred.span = resolve(pp, *p, *mode);
    predictions.push_back(std::move(pred));
  }
  // passages with no usable parse still count as abstentions
  for (const Passage* p : rep.dataset.split_view(split))
    if (!parsed_ids.contains(p->id)) predictions.push_back({p->id, {}, {}, {}});

  fs::create_directories(out);
  write_predictions(fs::path(out) / "predictions.jsonl", predictions);
  auto results = score_predictions(rep.dataset, predictions);
  write_results(fs::path(out) / "results.jsonl", results);
  StratifiedReport report = aggregate(results, rep.dataset);
  write_report_files(out, report);
  finish_manifest(out, "baseline",
                  {{"dataset", dargs.path},
                   {"conllu", conllu_path},
                   {"split", split_name},
                   {"fallback", fallback}},
                  {dargs.path, conllu_path});

  std::printf("baseline (%s fallback): accuracy %.3f (%llu/%llu)\n",
              fallback.c_str(), report.overall.accuracy(),
              (unsigned long long)report.overall.correct,
              (unsigned long long)report.overall.total);
  return kExitOk;
}

// ------------------------------------------------------------- prompts

json prompt_to_json(const PromptInstance& pi) {
  json j = {{"id", pi.passage_id},
            {"strategy", to_string(pi.strategy)},
            {"shots", pi.shots},
            {"prompt", pi.rendered}};
  if (pi.candidate) j["candidate"] = *pi.candidate;
  if (pi.expected_yes) j["expected"] = *pi.expected_yes ? "YES" : "NO";
  return j;
}

// exemplar pool with per-passage collision replacement
struct ExemplarPool {
  std::vector<Passage> main;
  std::vector<Passage> spare;

  std::vector<Passage> for_passage(const Passage& p) const {
    std::vector<Passage> out;
    std::size_t spare_next = 0;
    for (const Passage& ex : main) {
      const Passage* pick = &ex;
      while (pick->id == p.id) {
        if (spare_next >= spare.size())
          throw Error(Errc::insufficient_exemplars,
                      "no replacement exemplar for " + p.id);
        pick = &spare[spare_next++];
      }
      out.push_back(*pick);
    }
    return out;
  }
};

ExemplarPool build_exemplars(const Dataset& dataset, int shots,
                             std::uint64_t seed) {
  ExemplarPool pool;
  if (shots > 0) {
    pool.main = select_exemplars(dataset, shots, seed);
    pool.spare = select_exemplars(dataset, shots, seed ^ 0x517cc1b727220a95ULL);
  }
  return pool;
}

std::vector<PromptInstance> render_all(const Dataset& dataset, Split split,
                                       Strategy strategy, int shots,
                                       std::uint64_t seed,
                                       double negative_ratio,
                                       std::size_t limit) {
  std::vector<PromptInstance> prompts;
  if (strategy == Strategy::yes_no) {
    if (shots != 0)
      throw Error(Errc::bad_shot_count, "Yes/No prompts are zero-shot only");
    auto pairs = make_yesno_pairs(dataset, split, negative_ratio, seed);
    for (const YesNoPair& pair : pairs) {
      if (limit && prompts.size() >= limit) break;
      const Passage* p = dataset.find(pair.passage_id);
      PromptInstance pi = render(strategy, *p, {}, pair.candidate);
      pi.expected_yes = pair.expected_yes;
      prompts.push_back(std::move(pi));
    }
    return prompts;
  }

  ExemplarPool pool = build_exemplars(dataset, shots, seed);
  for (const Passage* p : dataset.split_view(split)) {
    if (limit && prompts.size() >= limit) break;
    prompts.push_back(render(strategy, *p, pool.for_passage(*p)));
  }
  return prompts;
}

int cmd_prompt_render(const DatasetArgs& dargs, const json& cfg,
                      const std::string& split_name,
                      const std::string& strategy_name, int shots,
                      std::uint64_t seed, double negative_ratio,
                      std::size_t limit, const std::string& out) {
  LoadReport rep = load_dataset(dargs.path, dargs.options(cfg));
  auto prompts =
      render_all(rep.dataset, split_or_die(split_name),
                 strategy_or_die(strategy_name), shots, seed, negative_ratio,
                 limit);
  std::vector<json> rows;
  rows.reserve(prompts.size());
  for (const PromptInstance& pi : prompts) rows.push_back(prompt_to_json(pi));
  write_jsonl(out, rows);
  std::cout << "wrote " << rows.size() << " prompts to " << out << "\n";
  return kExitOk;
}

int cmd_prompt_goldens(const std::string& out_dir) {
  fs::create_directories(out_dir);
  Passage p = example_passage();
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream out(fs::path(out_dir) / name, std::ios::binary);
    out << content;
  };
  write("prompt_yes_no_0shot.txt",
        render(Strategy::yes_no, p, {}, p.antecedent_subtree_text()).rendered);
  write("prompt_question_answering_0shot.txt",
        render(Strategy::question_answering, p, {}).rendered);
  write("prompt_tagging_0shot.txt", render(Strategy::tagging, p, {}).rendered);
  std::cout << "wrote 3 golden templates to " << out_dir << "\n";
  return kExitOk;
}

// ----------------------------------------------------------- run/score

std::vector<std::pair<std::string, ScoreResult>> score_responses(
    Strategy strategy, const Dataset& dataset,
    const std::vector<PromptInstance>& prompts,
    const std::vector<BatchResult>& raw, bool strict_parse,
    std::vector<Prediction>* predictions_out) {
  std::vector<std::pair<std::string, ScoreResult>> results;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const BatchResult& r = raw[i];
    if (r.error) {
      results.emplace_back(r.id, ScoreResult::fail(Failure::no_prediction));
      continue;
    }
    const Passage* p = dataset.find(r.id);
    if (!p) throw Error(Errc::unknown_id, "response id " + r.id);

    if (strategy == Strategy::yes_no) {
      results.emplace_back(r.id, score_yesno_response(
                                     *r.raw, *prompts[i].expected_yes,
                                     strict_parse));
      continue;
    }

    Prediction pred;
    pred.id = r.id;
    ScoreResult scored;
    if (strategy == Strategy::question_answering) {
      ParsedResponse parsed = parse_bracketed(*r.raw, strict_parse);
      if (parsed.kind == ParsedResponse::Kind::answer_string) {
        pred.answer = parsed.payload;
        scored = score_prediction(pred, *p);
      } else {
        scored = ScoreResult::fail(Failure::format_error);
      }
    } else {
      ParsedResponse parsed = parse_tagged_response(*r.raw, strict_parse);
      if (parsed.kind == ParsedResponse::Kind::tagged_sentence) {
        pred.tagged = parsed.payload;
        scored = score_prediction(pred, *p);
      } else {
        scored = ScoreResult::fail(Failure::format_error);
      }
    }
    if (predictions_out) predictions_out->push_back(pred);
    results.emplace_back(r.id, scored);
  }
  return results;
}

int cmd_run(const DatasetArgs& dargs, const json& cfg, CLI::App* cmd,
            std::string split_name, std::string strategy_name, int shots,
            std::uint64_t seed, double negative_ratio, std::size_t limit,
            std::string run_dir, EndpointConfig endpoint,
            const std::string& mock_mode, bool strict_parse) {
  merge(cmd, "--base-url", cfg, "base_url", endpoint.base_url);
  merge(cmd, "--model", cfg, "model", endpoint.model_id);
  merge(cmd, "--temperature", cfg, "temperature", endpoint.temperature);
  merge(cmd, "--max-output-tokens", cfg, "max_output_tokens",
        endpoint.max_output_tokens);
  merge(cmd, "--timeout", cfg, "timeout_s", endpoint.request_timeout_s);
  merge(cmd, "--max-retries", cfg, "max_retries", endpoint.max_retries);
  merge(cmd, "--max-in-flight", cfg, "max_in_flight", endpoint.max_in_flight);
  endpoint.validate();

  LoadReport rep = load_dataset(dargs.path, dargs.options(cfg));
  Strategy strategy = strategy_or_die(strategy_name);
  auto prompts = render_all(rep.dataset, split_or_die(split_name), strategy,
                            shots, seed, negative_ratio, limit);

  fs::path dir = fs::path(run_dir) / (strategy_name + "_" +
                                      std::to_string(shots) + "shot") /
                 endpoint.model_id;
  fs::create_directories(dir);

  std::vector<json> prompt_rows;
  for (const PromptInstance& pi : prompts)
    prompt_rows.push_back(prompt_to_json(pi));
  write_jsonl(dir / "prompts.jsonl", prompt_rows);

  // the mock endpoint serves gold (or empty) completions over real HTTP
  std::unique_ptr<MockEndpoint> mock;
  if (!mock_mode.empty()) {
    mock = std::make_unique<MockEndpoint>();
    if (mock_mode == "echo-gold") {
      std::unordered_map<std::string, std::string> answers;
      for (const PromptInstance& pi : prompts) {
        const Passage* p = rep.dataset.find(pi.passage_id);
        if (strategy == Strategy::yes_no)
          answers[pi.passage_id] = *pi.expected_yes ? "YES" : "NO";
        else if (strategy == Strategy::question_answering)
          answers[pi.passage_id] = "[" + p->antecedent_subtree_text() + "]";
        else
          answers[pi.passage_id] = "[" + p->sentence_ant_ana() + "]";
      }
      mock->set_answers(std::move(answers));
    } else if (mock_mode == "empty") {
      mock->set_mode(MockEndpoint::Mode::empty);
    } else {
      throw Error(Errc::config_error, "unknown mock mode " + mock_mode);
    }
    endpoint.base_url = mock->base_url();
  }

  std::vector<BatchItem> items;
  items.reserve(prompts.size());
  for (const PromptInstance& pi : prompts)
    items.push_back({pi.passage_id, pi.rendered});

  RunStore store(dir);
  std::vector<BatchResult> raw = run_batch(items, endpoint, &store);

  std::size_t ok = 0, failed = 0, endpoint_down = 0;
  for (const BatchResult& r : raw) {
    if (r.raw) ++ok;
    if (r.error) {
      ++failed;
      if (r.error->find("EndpointUnreachable") != std::string::npos ||
          r.error->find("RetriesExhausted") != std::string::npos)
        ++endpoint_down;
    }
  }
  if (ok == 0 && endpoint_down > 0) {
    std::cerr << "endpoint failure: no item completed\n";
    return kExitEndpoint;
  }

  std::vector<Prediction> predictions;
  auto results = score_responses(strategy, rep.dataset, prompts, raw,
                                 strict_parse, &predictions);
  if (!predictions.empty())
    write_predictions(dir / "predictions.jsonl", predictions);
  write_results(dir / "results.jsonl", results);
  StratifiedReport report = aggregate(results, rep.dataset);
  write_report_files(dir, report);
  finish_manifest(dir, "run",
                  {{"dataset", dargs.path},
                   {"split", split_name},
                   {"strategy", strategy_name},
                   {"shots", shots},
                   {"seed", seed},
                   {"negative_ratio", negative_ratio},
                   {"model", endpoint.model_id},
                   {"base_url", endpoint.base_url},
                   {"temperature", endpoint.temperature},
                   {"max_output_tokens", endpoint.max_output_tokens},
                   {"max_in_flight", endpoint.max_in_flight},
                   {"mock", mock_mode}},
                  {dargs.path});

  std::printf("%s %d-shot: accuracy %.3f (%llu/%llu), format errors %.3f, "
              "%zu item error(s)\n",
              strategy_name.c_str(), shots, report.overall.accuracy(),
              (unsigned long long)report.overall.correct,
              (unsigned long long)report.overall.total,
              report.format_error_rate(), failed);
  std::cout << "run directory: " << dir.string() << "\n";
  return kExitOk;
}

int cmd_parse(const std::string& strategy_name, const std::string& raw_path,
              const std::string& out, bool strict_parse) {
  Strategy strategy = strategy_or_die(strategy_name);
  std::vector<json> rows;
  for_each_jsonl(raw_path, [&](std::size_t, const json& j) {
    std::string id = j.at("id").get<std::string>();
    std::string raw = j.contains("raw") ? j.at("raw").get<std::string>() : "";
    json row = {{"id", id}};
    if (strategy == Strategy::yes_no) {
      ParsedResponse p = parse_yesno(raw, strict_parse);
      row["label"] = to_string(p.kind);
    } else if (strategy == Strategy::question_answering) {
      ParsedResponse p = parse_bracketed(raw, strict_parse);
      if (p.kind == ParsedResponse::Kind::answer_string)
        row["answer"] = *p.payload;
      else
        row["error"] = "format_error";
    } else {
      ParsedResponse p = parse_tagged_response(raw, strict_parse);
      if (p.kind == ParsedResponse::Kind::tagged_sentence)
        row["tagged"] = *p.payload;
      else
        row["error"] = "format_error";
    }
    rows.push_back(std::move(row));
  });
  write_jsonl(out, rows);
  std::cout << "parsed " << rows.size() << " responses to " << out << "\n";
  return kExitOk;
}

int cmd_score(const DatasetArgs& dargs, const json& cfg,
              const std::string& predictions_path, const std::string& out) {
  LoadReport rep = load_dataset(dargs.path, dargs.options(cfg));
  auto predictions = read_predictions(predictions_path);
  auto results = score_predictions(rep.dataset, predictions);
  fs::create_directories(out);
  write_results(fs::path(out) / "results.jsonl", results);
  StratifiedReport report = aggregate(results, rep.dataset);
  write_report_files(out, report);
  finish_manifest(out, "score",
                  {{"dataset", dargs.path}, {"predictions", predictions_path}},
                  {dargs.path, predictions_path});
  std::printf("accuracy %.3f (%llu/%llu)\n", report.overall.accuracy(),
              (unsigned long long)report.overall.correct,
              (unsigned long long)report.overall.total);
  return kExitOk;
}

int cmd_report(const DatasetArgs& dargs, const json& cfg,
               const std::string& results_path, const std::string& out) {
  LoadReport rep = load_dataset(dargs.path, dargs.options(cfg));
  auto results = read_results(results_path);
  StratifiedReport report = aggregate(results, rep.dataset);
  fs::create_directories(out);
  write_report_files(out, report);
  std::cout << emit_markdown(report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Czech pronominal anaphora resolution toolkit"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config file merged with flags");

  // validate
  auto* validate = app.add_subcommand("validate", "check a dataset file");
  DatasetArgs vd;
  vd.attach(validate);

  // export
  auto* exp = app.add_subcommand("export", "write fine-tuning pairs");
  DatasetArgs ed;
  ed.attach(exp);
  std::string exp_split = "train", exp_out = "pairs.jsonl";
  exp->add_option("--split", exp_split, "split to export");
  exp->add_option("-o,--out", exp_out, "output JSON-lines file");

  // prep
  auto* prep = app.add_subcommand(
      "prep", "emit plain passages for an external UD parser");
  DatasetArgs pd;
  pd.attach(prep);
  std::string prep_split = "test", prep_out = "passages.txt";
  prep->add_option("--split", prep_split, "split to emit");
  prep->add_option("-o,--out", prep_out, "output text file");

  // baseline
  auto* baseline = app.add_subcommand(
      "baseline", "rule-based resolver over external parses");
  DatasetArgs bd;
  bd.attach(baseline);
  std::string b_conllu, b_split = "test", b_fallback = "nearest",
              b_order_ids, b_out = "baseline_out";
  baseline->add_option("--conllu", b_conllu, "CoNLL-U parses")->required();
  baseline->add_option("--split", b_split, "split to resolve");
  baseline->add_option("--fallback", b_fallback,
                       "no-agreement behavior: nearest or abstain");
  baseline->add_option("--order-ids", b_order_ids,
                       "id list for parses without passage_id comments");
  baseline->add_option("-o,--out", b_out, "output directory");

  // prompt render/goldens
  auto* prompt = app.add_subcommand("prompt", "prompt utilities");
  prompt->require_subcommand(1);
  auto* prender = prompt->add_subcommand("render", "render prompts");
  DatasetArgs prd;
  prd.attach(prender);
  std::string pr_split = "test", pr_strategy = "question_answering",
              pr_out = "prompts.jsonl";
  int pr_shots = 0;
  std::uint64_t pr_seed = 42;
  double pr_negative = 0.0;
  std::size_t pr_limit = 0;
  prender->add_option("--split", pr_split, "split to render");
  prender->add_option("--strategy", pr_strategy,
                      "yes_no, question_answering or tagging");
  prender->add_option("--shots", pr_shots, "exemplars per prompt (0, 1, 3)");
  prender->add_option("--seed", pr_seed, "exemplar/sampling seed");
  prender->add_option("--negative-ratio", pr_negative,
                      "fraction of Yes/No items with distractor candidates");
  prender->add_option("--limit", pr_limit, "render at most N prompts");
  prender->add_option("-o,--out", pr_out, "output JSON-lines file");

  auto* pgoldens =
      prompt->add_subcommand("goldens", "regenerate golden template files");
  std::string pg_out = "goldens";
  pgoldens->add_option("-o,--out", pg_out, "output directory");

  // run
  auto* run = app.add_subcommand("run", "render, query endpoint, score");
  DatasetArgs rd;
  rd.attach(run);
  std::string r_split = "test", r_strategy = "question_answering",
              r_run_dir = "runs", r_mock;
  int r_shots = 0;
  std::uint64_t r_seed = 42;
  double r_negative = 0.0;
  std::size_t r_limit = 0;
  EndpointConfig r_endpoint;
  run->add_option("--split", r_split, "split to evaluate");
  run->add_option("--strategy", r_strategy,
                  "yes_no, question_answering or tagging");
  run->add_option("--shots", r_shots, "exemplars per prompt (0, 1, 3)");
  run->add_option("--seed", r_seed, "exemplar/sampling seed");
  run->add_option("--negative-ratio", r_negative,
                  "fraction of Yes/No items with distractor candidates");
  run->add_option("--limit", r_limit, "evaluate at most N passages");
  run->add_option("--run-dir", r_run_dir, "root directory for run artifacts");
  run->add_option("--base-url", r_endpoint.base_url,
                  "endpoint base URL (OpenAI-compatible)");
  run->add_option("--model", r_endpoint.model_id, "model identifier");
  run->add_option("--temperature", r_endpoint.temperature, "sampling temperature");
  run->add_option("--max-output-tokens", r_endpoint.max_output_tokens,
                  "completion token cap");
  run->add_option("--timeout", r_endpoint.request_timeout_s,
                  "per-request timeout in seconds");
  run->add_option("--max-retries", r_endpoint.max_retries,
                  "retries for transient failures");
  run->add_option("--max-in-flight", r_endpoint.max_in_flight,
                  "bounded request concurrency");
  run->add_option("--mock", r_mock,
                  "serve completions in-process: echo-gold or empty");
  bool r_strict_parse = false;
  run->add_flag("--strict-parse", r_strict_parse,
                "disable lenient response normalization");

  // parse
  auto* parse = app.add_subcommand("parse", "parse raw response dumps");
  std::string pa_strategy = "question_answering", pa_raw, pa_out =
      "predictions.jsonl";
  parse->add_option("--strategy", pa_strategy, "response format to expect");
  parse->add_option("--raw", pa_raw, "JSON-lines of {id, raw}")->required();
  parse->add_option("-o,--out", pa_out, "output predictions file");
  bool pa_strict_parse = false;
  parse->add_flag("--strict-parse", pa_strict_parse,
                  "disable lenient response normalization");

  // score
  auto* score = app.add_subcommand("score", "score a predictions file");
  DatasetArgs sd;
  sd.attach(score);
  std::string s_predictions, s_out = "score_out";
  score->add_option("--predictions", s_predictions, "predictions JSON-lines")
      ->required();
  score->add_option("-o,--out", s_out, "output directory");

  // report
  auto* report = app.add_subcommand("report", "re-emit reports from results");
  DatasetArgs rpd;
  rpd.attach(report);
  std::string rp_results, rp_out = "report_out";
  report->add_option("--results", rp_results, "results JSON-lines")->required();
  report->add_option("-o,--out", rp_out, "output directory");

  // parent options (--config) may appear after a subcommand
  for (CLI::App* sub :
       app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
    for (CLI::App* nested :
         sub->get_subcommands([](const CLI::App*) { return true; }))
      nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    json cfg = load_config_file(config_path);
    if (validate->parsed()) return cmd_validate(vd, cfg);
    if (exp->parsed()) return cmd_export(ed, cfg, exp_split, exp_out);
    if (prep->parsed()) return cmd_prep(pd, cfg, prep_split, prep_out);
    if (baseline->parsed())
      return cmd_baseline(bd, cfg, b_conllu, b_split, b_fallback, b_order_ids,
                          b_out);
    if (prompt->parsed()) {
      if (prender->parsed())
        return cmd_prompt_render(prd, cfg, pr_split, pr_strategy, pr_shots,
                                 pr_seed, pr_negative, pr_limit, pr_out);
      return cmd_prompt_goldens(pg_out);
    }
    if (run->parsed())
      return cmd_run(rd, cfg, run, r_split, r_strategy, r_shots, r_seed,
                     r_negative, r_limit, r_run_dir, r_endpoint, r_mock,
                     r_strict_parse);
    if (parse->parsed())
      return cmd_parse(pa_strategy, pa_raw, pa_out, pa_strict_parse);
    if (score->parsed()) return cmd_score(sd, cfg, s_predictions, s_out);
    if (report->parsed()) return cmd_report(rpd, cfg, rp_results, rp_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::config_error:
        return kExitConfig;
      case Errc::endpoint_unreachable:
      case Errc::retries_exhausted:
        return kExitEndpoint;
      default:
        return kExitFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
