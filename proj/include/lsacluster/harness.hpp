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
#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lsacluster/cluster.hpp"
#include "lsacluster/error.hpp"
#include "lsacluster/evaluation.hpp"
#include "lsacluster/lsa_summarizer.hpp"
#include "lsacluster/measures.hpp"
#include "lsacluster/preprocess.hpp"
#include "lsacluster/vsm.hpp"

namespace lsacluster {

inline constexpr std::string_view kToolName = "lsacluster";
inline constexpr std::string_view kToolVersion = "1.0.0";

// ---------------------------------------------------------------------------
// Corpus ingestion

struct IngestResult {
  std::vector<RawDocument> documents;
  std::vector<std::string> categories;  // non-empty ones, sorted
  std::vector<std::string> warnings;
  std::size_t unreadable = 0;
  std::size_t empty_categories = 0;
};

namespace detail {

inline std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

inline bool hidden(const std::filesystem::path& p) {
  const std::string name = p.filename().string();
  return !name.empty() && name.front() == '.';
}

}  // namespace detail

/// One document per regular file in each immediate subdirectory of root;
/// the subdirectory name is the category. Files that cannot be read or are
/// not valid UTF-8 are skipped with a warning.
inline IngestResult ingest(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw Error(ErrorKind::MissingRoot, "corpus root not found: " + root.string());

  IngestResult result;
  std::vector<fs::path> category_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (detail::hidden(entry.path())) continue;
    if (entry.is_directory()) {
      category_dirs.push_back(entry.path());
    } else {
      result.warnings.push_back("ignoring file outside a category directory: " + entry.path().filename().string());
    }
  }
  std::sort(category_dirs.begin(), category_dirs.end());

  for (const auto& dir : category_dirs) {
    const std::string category = dir.filename().string();
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && !detail::hidden(entry.path())) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::size_t accepted = 0;
    for (const auto& file : files) {
      const std::string id = category + "/" + file.filename().string();
      auto text = detail::read_file(file);
      if (!text || !utf8::is_valid(*text)) {
        ++result.unreadable;
        result.warnings.push_back(std::string(to_string(ErrorKind::UnreadableFile)) + ": " + id +
                                  (text ? " (invalid UTF-8)" : " (read failed)"));
        continue;
      }
      result.documents.push_back({id, category, std::move(*text)});
      ++accepted;
    }
    if (accepted == 0) {
      ++result.empty_categories;
      result.warnings.push_back("category '" + category + "' has no readable documents; excluded");
    } else {
      result.categories.push_back(category);
    }
  }
  return result;
}

struct CategoryStats {
  std::string category;
  std::size_t documents = 0;
  std::size_t terms = 0;  // tokens after normalization, before stop-word removal
};

inline std::vector<CategoryStats> stats(std::span<const RawDocument> corpus) {
  std::map<std::string, CategoryStats> table;
  for (const auto& doc : corpus) {
    auto& row = table[doc.category];
    row.category = doc.category;
    ++row.documents;
    row.terms += tokenize(normalize(doc.text)).size();
  }
  std::vector<CategoryStats> out;
  for (auto& [name, row] : table) out.push_back(row);
  return out;
}

// ---------------------------------------------------------------------------
// Configuration

enum class Representation { FullText, Summary };

inline std::string_view to_string(Representation r) {
  return r == Representation::FullText ? "fulltext" : "summary";
}

inline Representation parse_representation(std::string_view name) {
  if (name == "fulltext") return Representation::FullText;
  if (name == "summary") return Representation::Summary;
  throw Error(ErrorKind::ConfigError, "unknown representation '" + std::string(name) + "' (expected fulltext|summary)");
}

struct ExperimentConfig {
  std::string corpus;
  std::vector<Representation> representations{Representation::FullText, Representation::Summary};
  SummaryLength summary_k;
  std::vector<StemmerMode> stemmers{StemmerMode::None, StemmerMode::Light, StemmerMode::Root};
  std::vector<MeasureKind> measures{std::begin(kAllMeasures), std::end(kAllMeasures)};
  ClusterConfig cluster{0, MeasureKind::Euclidean, 100, 5, 0};  // k = 0: number of categories
  std::size_t min_sentence_tokens = 4;
  std::string stoplist;  // empty: built-in list
  std::string markers;   // empty: built-in list
  std::string output = "results";
  bool write_summaries = false;
};

namespace detail {

template <typename T, typename Parse>
std::vector<T> parse_one_or_many(const nlohmann::json& j, Parse parse) {
  std::vector<T> out;
  if (j.is_string()) {
    out.push_back(parse(j.get<std::string>()));
  } else if (j.is_array()) {
    for (const auto& e : j) out.push_back(parse(e.get<std::string>()));
  } else {
    throw Error(ErrorKind::ConfigError, "expected a string or a list of strings");
  }
  if (out.empty()) throw Error(ErrorKind::ConfigError, "empty list");
  return out;
}

template <typename T>
T positive(const nlohmann::json& j, const char* name) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw Error(ErrorKind::ConfigError, std::string(name) + " must be a positive integer");
  }
  return static_cast<T>(j.get<long long>());
}

}  // namespace detail

/// Reads the JSON form of ExperimentConfig. Unknown keys are rejected.
inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ConfigError, "config must be a JSON object");
  ExperimentConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "corpus") {
        cfg.corpus = value.get<std::string>();
      } else if (key == "representation" || key == "representations") {
        cfg.representations = detail::parse_one_or_many<Representation>(value, parse_representation);
      } else if (key == "summary_k") {
        cfg.summary_k = value.is_string() ? SummaryLength::parse(value.get<std::string>())
                                          : SummaryLength::count(detail::positive<std::size_t>(value, "summary_k"));
      } else if (key == "stemmer" || key == "stemmers") {
        cfg.stemmers = detail::parse_one_or_many<StemmerMode>(value, parse_stemmer_mode);
      } else if (key == "measures" || key == "measure") {
        cfg.measures = detail::parse_one_or_many<MeasureKind>(value, parse_measure);
      } else if (key == "cluster") {
        if (!value.is_object()) throw Error(ErrorKind::ConfigError, "cluster must be an object");
        for (const auto& [ck, cv] : value.items()) {
          if (ck == "k") {
            if (!cv.is_number_integer() || cv.get<long long>() < 0) {
              throw Error(ErrorKind::ConfigError, "cluster.k must be a non-negative integer (0 = categories)");
            }
            cfg.cluster.k = cv.get<std::size_t>();
          } else if (ck == "runs") {
            cfg.cluster.runs = detail::positive<std::size_t>(cv, "cluster.runs");
          } else if (ck == "max_iters") {
            cfg.cluster.max_iters = detail::positive<std::size_t>(cv, "cluster.max_iters");
          } else if (ck == "seed") {
            if (!cv.is_number_unsigned() && !(cv.is_number_integer() && cv.get<long long>() >= 0)) {
              throw Error(ErrorKind::ConfigError, "cluster.seed must be a non-negative integer");
            }
            cfg.cluster.seed = cv.get<std::uint64_t>();
          } else {
            throw Error(ErrorKind::ConfigError, "unknown key cluster." + ck);
          }
        }
      } else if (key == "min_sentence_tokens") {
        cfg.min_sentence_tokens = detail::positive<std::size_t>(value, "min_sentence_tokens");
      } else if (key == "stoplist") {
        cfg.stoplist = value.get<std::string>();
      } else if (key == "markers") {
        cfg.markers = value.get<std::string>();
      } else if (key == "output") {
        cfg.output = value.get<std::string>();
      } else if (key == "write_summaries") {
        cfg.write_summaries = value.get<bool>();
      } else {
        throw Error(ErrorKind::ConfigError, "unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ConfigError, e.what());
  }
  return cfg;
}

inline nlohmann::json to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["corpus"] = cfg.corpus;
  for (auto r : cfg.representations) j["representation"].push_back(std::string(to_string(r)));
  if (cfg.summary_k.kind == SummaryLength::Kind::Count) {
    j["summary_k"] = static_cast<std::size_t>(cfg.summary_k.value);
  } else {
    j["summary_k"] = cfg.summary_k.to_string();
  }
  for (auto s : cfg.stemmers) j["stemmer"].push_back(std::string(to_string(s)));
  for (auto m : cfg.measures) j["measures"].push_back(std::string(to_string(m)));
  j["cluster"] = {{"k", cfg.cluster.k},
                  {"runs", cfg.cluster.runs},
                  {"seed", cfg.cluster.seed},
                  {"max_iters", cfg.cluster.max_iters}};
  j["min_sentence_tokens"] = cfg.min_sentence_tokens;
  j["stoplist"] = cfg.stoplist;
  j["markers"] = cfg.markers;
  j["output"] = cfg.output;
  j["write_summaries"] = cfg.write_summaries;
  return j;
}

inline ExperimentConfig load_config(const std::filesystem::path& path) {
  auto text = detail::read_file(path);
  if (!text) throw Error(ErrorKind::ConfigError, "cannot read config " + path.string());
  try {
    return config_from_json(nlohmann::json::parse(*text));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ConfigError, "config " + path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Pipeline

/// Stop list and marker set shared by every document of a run.
struct Resources {
  StopList stoplist;
  MarkerSet markers;

  static Resources defaults(std::size_t min_sentence_tokens = 4) {
    return {default_stoplist(), default_marker_set(min_sentence_tokens)};
  }

  static Resources from_config(const ExperimentConfig& cfg) {
    Resources r;
    r.stoplist = cfg.stoplist.empty() ? default_stoplist() : make_stoplist(load_list_file(cfg.stoplist));
    r.markers = cfg.markers.empty() ? default_marker_set(cfg.min_sentence_tokens)
                                    : make_marker_set(load_list_file(cfg.markers), cfg.min_sentence_tokens);
    return r;
  }
};

/// normalize -> tokenize -> stop words -> stems.
inline std::vector<std::string> document_terms(std::string_view text, const Resources& res, StemmerMode mode) {
  return index_terms(tokenize(normalize(text)), res.stoplist, mode);
}

struct DocumentSummary {
  std::vector<Sentence> sentences;
  Summary summary;
  std::string text;  // rendered, document order
};

/// Sentence split, per-sentence index terms, topic selection and rendering.
/// A document without tokens yields an empty summary.
inline DocumentSummary summarize_document(const RawDocument& doc, const Resources& res, StemmerMode mode,
                                          const SummaryLength& length) {
  DocumentSummary out;
  const RawDocument normalized{doc.id, doc.category, normalize(doc.text)};
  try {
    out.sentences = split_sentences(normalized, res.markers);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyDocument) throw;
    out.summary.degenerate = true;
    return out;
  }
  std::vector<std::vector<std::string>> terms;
  terms.reserve(out.sentences.size());
  for (const auto& s : out.sentences) terms.push_back(index_terms(s.tokens, res.stoplist, mode));
  const std::size_t k = std::max<std::size_t>(1, length.resolve(out.sentences.size()));
  out.summary = summarize(std::span<const std::vector<std::string>>(terms), k);
  out.text = render_summary(out.sentences, out.summary);
  return out;
}

/// Vectorized corpus for one (representation, stemmer) pair.
struct PreparedCorpus {
  std::vector<std::size_t> labels;  // category index per document
  std::size_t category_count = 0;
  Vocabulary vocabulary;
  std::vector<DocVector> vectors;
  std::vector<std::string> summaries;  // rendered texts in summary mode
};

inline PreparedCorpus prepare_corpus(std::span<const RawDocument> corpus, Representation representation,
                                     StemmerMode mode, const Resources& res, const SummaryLength& length) {
  PreparedCorpus out;
  std::map<std::string, std::size_t> category_index;
  for (const auto& doc : corpus) category_index.try_emplace(doc.category, 0);
  std::size_t next = 0;
  for (auto& [name, idx] : category_index) idx = next++;
  out.category_count = category_index.size();

  std::vector<std::vector<std::string>> terms;
  terms.reserve(corpus.size());
  for (const auto& doc : corpus) {
    out.labels.push_back(category_index.at(doc.category));
    if (representation == Representation::Summary) {
      out.summaries.push_back(summarize_document(doc, res, mode, length).text);
      terms.push_back(document_terms(out.summaries.back(), res, mode));
    } else {
      terms.push_back(document_terms(doc.text, res, mode));
    }
  }
  out.vocabulary = build_vocabulary(terms);
  out.vectors.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out.vectors.push_back(tfidf_vector(terms[i], out.vocabulary, corpus[i].id));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Experiment grid

struct CellOutcome {
  Representation representation{};
  StemmerMode stemmer{};
  MeasureKind measure{};
  bool ok = false;
  std::string error;
  double wall_ms = 0.0;
  AveragedMetrics averaged;
};

struct GridOutcome {
  std::vector<ResultRow> rows;
  std::vector<CellOutcome> cells;
  std::size_t failed_cells = 0;
};

/// Runs every (representation, stemmer, measure) cell in grid order. A cell
/// that throws is recorded as failed and the grid continues.
inline GridOutcome run_grid(const ExperimentConfig& cfg, std::span<const RawDocument> corpus, const Resources& res,
                            std::ostream* log = nullptr) {
  GridOutcome grid;
  for (Representation rep : cfg.representations) {
    for (StemmerMode mode : cfg.stemmers) {
      std::optional<PreparedCorpus> prepared;
      std::string prepare_error;
      const auto prep_start = std::chrono::steady_clock::now();
      try {
        prepared = prepare_corpus(corpus, rep, mode, res, cfg.summary_k);
      } catch (const std::exception& e) {
        prepare_error = e.what();
      }
      const double prep_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - prep_start).count();

      for (MeasureKind measure : cfg.measures) {
        CellOutcome cell;
        cell.representation = rep;
        cell.stemmer = mode;
        cell.measure = measure;
        const auto start = std::chrono::steady_clock::now();
        try {
          if (!prepared) throw std::runtime_error(prepare_error);
          ClusterConfig cc = cfg.cluster;
          cc.measure = measure;
          if (cc.k == 0) cc.k = prepared->category_count;
          const auto runs = run_averaged(prepared->vectors, prepared->vocabulary.size(), cc);
          std::vector<EvalReport> reports;
          std::vector<ResultRow> rows;
          for (std::size_t r = 0; r < runs.size(); ++r) {
            reports.push_back(evaluate(std::span<const std::size_t>(runs[r].assignments),
                                       std::span<const std::size_t>(prepared->labels), prepared->category_count));
            rows.push_back({std::string(to_string(rep)), std::string(to_string(mode)),
                            std::string(to_string(measure)), std::to_string(r + 1), reports.back().purity,
                            reports.back().entropy});
          }
          cell.averaged = average(reports);
          rows.push_back({std::string(to_string(rep)), std::string(to_string(mode)), std::string(to_string(measure)),
                          "avg", cell.averaged.purity, cell.averaged.entropy});
          grid.rows.insert(grid.rows.end(), rows.begin(), rows.end());
          cell.ok = true;
        } catch (const std::exception& e) {
          cell.error = e.what();
          ++grid.failed_cells;
          if (log) {
            *log << "cell " << to_string(rep) << "/" << to_string(mode) << "/" << to_string(measure)
                 << " failed: " << e.what() << '\n';
          }
        }
        cell.wall_ms = prep_ms / static_cast<double>(cfg.measures.size()) +
                       std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        grid.cells.push_back(std::move(cell));
      }
    }
  }
  return grid;
}

inline nlohmann::json manifest_json(const ExperimentConfig& cfg, const IngestResult& ingested,
                                    const GridOutcome& grid) {
  nlohmann::json m;
  m["tool"] = std::string(kToolName);
  m["version"] = std::string(kToolVersion);
  m["config"] = to_json(cfg);
  m["seed"] = cfg.cluster.seed;
  m["corpus"] = {{"documents", ingested.documents.size()},
                 {"categories", ingested.categories},
                 {"unreadable_files", ingested.unreadable},
                 {"empty_categories", ingested.empty_categories}};
  m["warnings"] = ingested.warnings;
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : grid.cells) {
    nlohmann::json cell = {{"representation", std::string(to_string(c.representation))},
                           {"stemmer", std::string(to_string(c.stemmer))},
                           {"measure", std::string(to_string(c.measure))},
                           {"status", c.ok ? "ok" : "failed"},
                           {"wall_ms", c.wall_ms}};
    if (c.ok) {
      cell["purity"] = c.averaged.purity;
      cell["entropy"] = c.averaged.entropy;
    } else {
      cell["error"] = c.error;
    }
    cells.push_back(std::move(cell));
  }
  m["cells"] = std::move(cells);
  m["failed_cells"] = grid.failed_cells;
  return m;
}

/// Writes the rendered summaries as summaries/<stemmer>/<document id>.
inline void write_summaries(const std::filesystem::path& dir, std::span<const RawDocument> corpus,
                            const ExperimentConfig& cfg, const Resources& res) {
  namespace fs = std::filesystem;
  for (StemmerMode mode : cfg.stemmers) {
    for (const auto& doc : corpus) {
      const fs::path path = dir / std::string(to_string(mode)) / doc.id;
      fs::create_directories(path.parent_path());
      std::ofstream out(path, std::ios::binary);
      out << summarize_document(doc, res, mode, cfg.summary_k).text << '\n';
    }
  }
}

/// Writes results.csv, results.txt and manifest.json (plus summaries/ when
/// requested) under cfg.output.
inline void write_outputs(const ExperimentConfig& cfg, const IngestResult& ingested, const GridOutcome& grid,
                          const Resources& res) {
  namespace fs = std::filesystem;
  const fs::path dir(cfg.output);
  fs::create_directories(dir);
  {
    std::ofstream csv(dir / "results.csv", std::ios::binary);
    if (!csv) throw Error(ErrorKind::ConfigError, "cannot write " + (dir / "results.csv").string());
    write_csv(csv, grid.rows);
  }
  {
    std::ofstream table(dir / "results.txt", std::ios::binary);
    write_table(table, grid.rows);
  }
  {
    std::ofstream manifest(dir / "manifest.json", std::ios::binary);
    manifest << manifest_json(cfg, ingested, grid).dump(2) << '\n';
  }
  if (cfg.write_summaries) write_summaries(dir / "summaries", ingested.documents, cfg, res);
}

}  // namespace lsacluster
