/*
 * Copyright 2026 The lsacluster Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// lsacluster: LSA summarization + document clustering experiments.
//
//   lsacluster ingest-stats <root>
//   lsacluster summarize <file> --k N --stemmer MODE
//   lsacluster run --config cfg.json [overrides]
//
// Exit codes: 0 success, 1 config error, 2 corpus error, 3 partial-grid failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lsacluster.hpp"

namespace {

namespace fs = std::filesystem;
using namespace lsacluster;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitCorpus = 2;
constexpr int kExitPartial = 3;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::MissingRoot:
    case ErrorKind::UnreadableFile:
    case ErrorKind::EmptyCorpus:
    case ErrorKind::EmptyDocument:
    case ErrorKind::TooFewDocuments:
    case ErrorKind::ZeroVocabulary:
      return kExitCorpus;
    default:
      return kExitConfig;
  }
}

void print_warnings(const IngestResult& ingested) {
  for (const auto& w : ingested.warnings) std::cerr << "warning: " << w << '\n';
}

int cmd_ingest_stats(const std::string& root) {
  const IngestResult ingested = ingest(root);
  print_warnings(ingested);
  const auto table = stats(ingested.documents);
  std::printf("%-24s %10s %12s\n", "category", "documents", "terms");
  std::size_t docs = 0, terms = 0;
  for (const auto& row : table) {
    std::printf("%-24s %10zu %12zu\n", row.category.c_str(), row.documents, row.terms);
    docs += row.documents;
    terms += row.terms;
  }
  std::printf("%-24s %10zu %12zu\n", "total", docs, terms);
  return kExitOk;
}

struct SummarizeOptions {
  std::string file;
  std::string k = "default";
  std::string stemmer = "none";
  std::string stoplist;
  std::string markers;
  std::size_t min_sentence_tokens = 4;
  bool indices = false;
};

int cmd_summarize(const SummarizeOptions& opt) {
  ExperimentConfig cfg;
  cfg.stoplist = opt.stoplist;
  cfg.markers = opt.markers;
  cfg.min_sentence_tokens = opt.min_sentence_tokens;
  const Resources res = Resources::from_config(cfg);
  const SummaryLength length = SummaryLength::parse(opt.k);
  const StemmerMode mode = parse_stemmer_mode(opt.stemmer);

  std::ifstream in(opt.file, std::ios::binary);
  if (!in) throw Error(ErrorKind::UnreadableFile, "cannot open " + opt.file);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  if (!utf8::is_valid(text)) throw Error(ErrorKind::UnreadableFile, opt.file + " is not valid UTF-8");

  const DocumentSummary result = summarize_document({opt.file, "", text}, res, mode, length);
  if (result.sentences.empty()) throw Error(ErrorKind::EmptyDocument, opt.file + " has no Arabic tokens");
  if (opt.indices) {
    std::cerr << "sentences: " << result.sentences.size() << ", selected (topic order):";
    for (std::size_t i : result.summary.selected) std::cerr << ' ' << i;
    if (result.summary.degenerate) std::cerr << " [degenerate: leading sentences]";
    std::cerr << '\n';
  }
  std::cout << result.text << '\n';
  return kExitOk;
}

struct RunOverrides {
  std::string config;
  std::optional<std::string> corpus;
  std::optional<std::string> output;
  std::optional<std::size_t> k;
  std::optional<std::size_t> runs;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_iters;
  std::optional<std::string> summary_k;
  std::optional<std::size_t> min_sentence_tokens;
  std::optional<std::string> stoplist;
  std::optional<std::string> markers;
  std::vector<std::string> measures;
  std::vector<std::string> stemmers;
  std::vector<std::string> representations;
  bool write_summaries = false;
  bool dump_vectors = false;
};

ExperimentConfig resolve_config(const RunOverrides& o) {
  ExperimentConfig cfg = o.config.empty() ? ExperimentConfig{} : load_config(o.config);
  if (o.corpus) cfg.corpus = *o.corpus;
  if (o.output) cfg.output = *o.output;
  if (o.k) cfg.cluster.k = *o.k;
  if (o.runs) cfg.cluster.runs = *o.runs;
  if (o.seed) cfg.cluster.seed = *o.seed;
  if (o.max_iters) cfg.cluster.max_iters = *o.max_iters;
  if (o.summary_k) cfg.summary_k = SummaryLength::parse(*o.summary_k);
  if (o.min_sentence_tokens) cfg.min_sentence_tokens = *o.min_sentence_tokens;
  if (o.stoplist) cfg.stoplist = *o.stoplist;
  if (o.markers) cfg.markers = *o.markers;
  if (!o.measures.empty()) {
    cfg.measures.clear();
    for (const auto& m : o.measures) cfg.measures.push_back(parse_measure(m));
  }
  if (!o.stemmers.empty()) {
    cfg.stemmers.clear();
    for (const auto& s : o.stemmers) cfg.stemmers.push_back(parse_stemmer_mode(s));
  }
  if (!o.representations.empty()) {
    cfg.representations.clear();
    for (const auto& r : o.representations) cfg.representations.push_back(parse_representation(r));
  }
  if (o.write_summaries) cfg.write_summaries = true;
  if (cfg.corpus.empty()) throw Error(ErrorKind::ConfigError, "no corpus given (config \"corpus\" or --corpus)");
  if (cfg.cluster.runs == 0 || cfg.cluster.max_iters == 0) {
    throw Error(ErrorKind::ConfigError, "runs and max-iters must be >= 1");
  }
  return cfg;
}

int cmd_run(const RunOverrides& overrides) {
  const ExperimentConfig cfg = resolve_config(overrides);
  const Resources res = Resources::from_config(cfg);

  const IngestResult ingested = ingest(cfg.corpus);
  print_warnings(ingested);
  if (ingested.categories.size() < 2) {
    throw Error(ErrorKind::EmptyCorpus, "clustering needs at least 2 non-empty categories, found " +
                                            std::to_string(ingested.categories.size()));
  }

  const GridOutcome grid = run_grid(cfg, ingested.documents, res, &std::cerr);
  write_outputs(cfg, ingested, grid, res);

  if (overrides.dump_vectors) {
    const fs::path dir = fs::path(cfg.output) / "vectors";
    fs::create_directories(dir);
    for (Representation rep : cfg.representations)
      for (StemmerMode mode : cfg.stemmers) {
        const PreparedCorpus prepared = prepare_corpus(ingested.documents, rep, mode, res, cfg.summary_k);
        std::ofstream out(dir / (std::string(to_string(rep)) + "_" + std::string(to_string(mode)) + ".tsv"));
        write_vectors(out, prepared.vectors);
      }
  }

  write_table(std::cout, grid.rows);
  std::cout << "wrote " << (fs::path(cfg.output) / "results.csv").string() << " (" << grid.rows.size()
            << " rows, " << grid.failed_cells << " failed cells)\n";
  return grid.failed_cells == 0 ? kExitOk : kExitPartial;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LSA-based extractive summarization and document clustering experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string stats_root;
  auto* stats_cmd = app.add_subcommand("ingest-stats", "Per-category document and term counts of a corpus");
  stats_cmd->add_option("root", stats_root, "Corpus root (one subdirectory per category)")->required();

  SummarizeOptions sum;
  auto* sum_cmd = app.add_subcommand("summarize", "Print the extractive summary of one document");
  sum_cmd->add_option("file", sum.file, "UTF-8 text file")->required();
  sum_cmd->add_option("--k,--summary-sentences", sum.k, "Summary length: N, P% or default");
  sum_cmd->add_option("--stemmer", sum.stemmer, "none | light | root");
  sum_cmd->add_option("--stoplist", sum.stoplist, "Stop list file (default: built-in)");
  sum_cmd->add_option("--markers", sum.markers, "Sentence marker file (default: built-in)");
  sum_cmd->add_option("--min-sentence-tokens", sum.min_sentence_tokens, "Minimum tokens per sentence");
  sum_cmd->add_flag("--indices", sum.indices, "Report selected sentence indices on stderr");

  RunOverrides run;
  auto* run_cmd = app.add_subcommand("run", "Run the representation x stemmer x measure grid");
  run_cmd->add_option("--config", run.config, "JSON experiment config");
  run_cmd->add_option("--corpus", run.corpus, "Corpus root");
  run_cmd->add_option("--output", run.output, "Output directory");
  run_cmd->add_option("--k", run.k, "Number of clusters (0: number of categories)");
  run_cmd->add_option("--measure", run.measures, "euclidean | cosine | jaccard | pearson | avgkl (repeatable)");
  run_cmd->add_option("--stemmer", run.stemmers, "none | light | root (repeatable)");
  run_cmd->add_option("--representation", run.representations, "fulltext | summary (repeatable)");
  run_cmd->add_option("--runs", run.runs, "K-means runs per cell");
  run_cmd->add_option("--seed", run.seed, "Seed of the first run");
  run_cmd->add_option("--max-iters", run.max_iters, "K-means iteration cap");
  run_cmd->add_option("--summary-sentences", run.summary_k, "Summary length: N, P% or default");
  run_cmd->add_option("--min-sentence-tokens", run.min_sentence_tokens, "Minimum tokens per sentence");
  run_cmd->add_option("--stoplist", run.stoplist, "Stop list file");
  run_cmd->add_option("--markers", run.markers, "Sentence marker file");
  run_cmd->add_flag("--write-summaries", run.write_summaries, "Write rendered summaries under <output>/summaries");
  run_cmd->add_flag("--dump-vectors", run.dump_vectors, "Write tf-idf vectors under <output>/vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*stats_cmd) return cmd_ingest_stats(stats_root);
    if (*sum_cmd) return cmd_summarize(sum);
    if (*run_cmd) return cmd_run(run);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
