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
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "lsacluster/error.hpp"

namespace lsacluster {

namespace detail {

template <typename Label>
std::map<Label, std::size_t> label_counts(std::span<const Label> labels) {
  std::map<Label, std::size_t> counts;
  for (const auto& l : labels) ++counts[l];
  return counts;
}

}  // namespace detail

/// Share of the dominant category in one cluster (given as the true labels
/// of its members).
template <typename Label>
double purity(std::span<const Label> cluster) {
  if (cluster.empty()) throw Error(ErrorKind::EmptyCluster, "purity of an empty cluster");
  std::size_t dominant = 0;
  for (const auto& [label, count] : detail::label_counts(cluster)) dominant = std::max(dominant, count);
  return static_cast<double>(dominant) / static_cast<double>(cluster.size());
}

/// Category entropy of one cluster normalized by ln(category_count);
/// 0 when category_count <= 1.
template <typename Label>
double entropy(std::span<const Label> cluster, std::size_t category_count) {
  if (cluster.empty()) throw Error(ErrorKind::EmptyCluster, "entropy of an empty cluster");
  if (category_count <= 1) return 0.0;
  const double n = static_cast<double>(cluster.size());
  double h = 0.0;
  for (const auto& [label, count] : detail::label_counts(cluster)) {
    const double p = static_cast<double>(count) / n;
    h -= p * std::log(p);
  }
  return std::clamp(h / std::log(static_cast<double>(category_count)), 0.0, 1.0);
}

struct ClusterMetrics {
  std::size_t cluster = 0;
  std::size_t size = 0;
  double purity = 0.0;
  double entropy = 0.0;
};

struct EvalReport {
  std::vector<ClusterMetrics> clusters;
  double purity = 0.0;   // sum over clusters of (n_i / n) * P(C_i)
  double entropy = 0.0;  // sum over clusters of (n_i / n) * E(C_i)
  std::size_t documents = 0;
};

/// Size-weighted aggregate of per-cluster metrics.
inline EvalReport overall(std::vector<ClusterMetrics> clusters) {
  if (clusters.empty()) throw Error(ErrorKind::EmptyInput, "no clusters to aggregate");
  EvalReport report;
  for (const auto& c : clusters) report.documents += c.size;
  if (report.documents == 0) throw Error(ErrorKind::EmptyCluster, "all clusters are empty");
  const double n = static_cast<double>(report.documents);
  for (const auto& c : clusters) {
    report.purity += static_cast<double>(c.size) / n * c.purity;
    report.entropy += static_cast<double>(c.size) / n * c.entropy;
  }
  report.clusters = std::move(clusters);
  return report;
}

/// Evaluates a hard assignment. Clusters with no members are left out.
template <typename Label>
EvalReport evaluate(std::span<const std::size_t> cluster_of, std::span<const Label> category_of,
                    std::size_t category_count) {
  if (cluster_of.size() != category_of.size()) {
    throw Error(ErrorKind::DimensionMismatch, "assignment and label counts differ");
  }
  std::map<std::size_t, std::vector<Label>> members;
  for (std::size_t i = 0; i < cluster_of.size(); ++i) members[cluster_of[i]].push_back(category_of[i]);
  std::vector<ClusterMetrics> clusters;
  for (const auto& [id, labels] : members) {
    const std::span<const Label> view(labels);
    clusters.push_back({id, labels.size(), purity(view), entropy(view, category_count)});
  }
  return overall(std::move(clusters));
}

struct AveragedMetrics {
  double purity = 0.0;
  double entropy = 0.0;
  std::size_t runs = 0;
};

/// Arithmetic mean of per-run overall metrics.
inline AveragedMetrics average(std::span<const EvalReport> runs) {
  if (runs.empty()) throw Error(ErrorKind::EmptyInput, "no runs to average");
  AveragedMetrics avg;
  avg.runs = runs.size();
  for (const auto& r : runs) {
    avg.purity += r.purity;
    avg.entropy += r.entropy;
  }
  avg.purity /= static_cast<double>(runs.size());
  avg.entropy /= static_cast<double>(runs.size());
  return avg;
}

// ---------------------------------------------------------------------------
// Result serialization

struct ResultRow {
  std::string representation;
  std::string stemmer;
  std::string measure;
  std::string run;  // run number, or "avg" for the averaged row
  double purity = 0.0;
  double entropy = 0.0;
};

inline constexpr const char* kCsvHeader = "representation,stemmer,measure,run,purity,entropy";

inline std::string format_metric(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

inline void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

inline void write_csv_row(std::ostream& out, const ResultRow& row) {
  out << row.representation << ',' << row.stemmer << ',' << row.measure << ',' << row.run << ','
      << format_metric(row.purity) << ',' << format_metric(row.entropy) << '\n';
}

inline void write_csv(std::ostream& out, std::span<const ResultRow> rows) {
  write_csv_header(out);
  for (const auto& r : rows) write_csv_row(out, r);
}

/// One block per representation: measures down, stemmers across, purity and
/// entropy per stemmer. Uses the averaged rows only.
inline void write_table(std::ostream& out, std::span<const ResultRow> rows) {
  std::vector<std::string> representations, stemmers, measures;
  const auto remember = [](std::vector<std::string>& v, const std::string& s) {
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
  };
  std::map<std::tuple<std::string, std::string, std::string>, const ResultRow*> cells;
  for (const auto& r : rows) {
    if (r.run != "avg") continue;
    remember(representations, r.representation);
    remember(stemmers, r.stemmer);
    remember(measures, r.measure);
    cells[{r.representation, r.stemmer, r.measure}] = &r;
  }
  char buf[64];
  for (const auto& rep : representations) {
    out << "Representation: " << rep << '\n';
    std::snprintf(buf, sizeof buf, "%-10s", "measure");
    out << buf;
    for (const auto& st : stemmers) {
      std::snprintf(buf, sizeof buf, " | %-8s %8s %8s", st.c_str(), "purity", "entropy");
      out << buf;
    }
    out << '\n';
    for (const auto& m : measures) {
      std::snprintf(buf, sizeof buf, "%-10s", m.c_str());
      out << buf;
      for (const auto& st : stemmers) {
        auto it = cells.find({rep, st, m});
        if (it == cells.end()) {
          std::snprintf(buf, sizeof buf, " | %-8s %8s %8s", "", "-", "-");
        } else {
          std::snprintf(buf, sizeof buf, " | %-8s %8.4f %8.4f", "", it->second->purity, it->second->entropy);
        }
        out << buf;
      }
      out << '\n';
    }
    out << '\n';
  }
}

}  // namespace lsacluster
