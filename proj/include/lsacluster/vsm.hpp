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
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lsacluster/error.hpp"

namespace lsacluster {

struct Vocabulary {
  std::vector<std::string> terms;  // first-occurrence order
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::size_t> df;
  std::size_t document_count = 0;

  std::size_t size() const noexcept { return terms.size(); }
};

inline Vocabulary build_vocabulary(std::span<const std::vector<std::string>> documents) {
  if (documents.empty()) throw Error(ErrorKind::EmptyCorpus, "cannot build a vocabulary from zero documents");
  Vocabulary vocab;
  vocab.document_count = documents.size();
  std::unordered_set<std::size_t> seen;
  for (const auto& doc : documents) {
    seen.clear();
    for (const auto& term : doc) {
      auto [it, inserted] = vocab.index.try_emplace(term, vocab.terms.size());
      if (inserted) {
        vocab.terms.push_back(term);
        vocab.df.push_back(0);
      }
      if (seen.insert(it->second).second) ++vocab.df[it->second];
    }
  }
  return vocab;
}

struct SparseEntry {
  std::size_t dim = 0;
  double weight = 0.0;

  bool operator==(const SparseEntry&) const = default;
};

/// Sparse document vector; entries sorted by dim, zero weights omitted.
struct DocVector {
  std::string doc_id;
  std::vector<SparseEntry> entries;

  bool empty() const noexcept { return entries.empty(); }

  double weight(std::size_t dim) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), dim,
                               [](const SparseEntry& e, std::size_t d) { return e.dim < d; });
    return it != entries.end() && it->dim == dim ? it->weight : 0.0;
  }

  static DocVector from_dense(std::string id, std::span<const double> dense) {
    DocVector v{std::move(id), {}};
    for (std::size_t d = 0; d < dense.size(); ++d)
      if (dense[d] != 0.0) v.entries.push_back({d, dense[d]});
    return v;
  }

  std::vector<double> to_dense(std::size_t dimension) const {
    std::vector<double> out(dimension, 0.0);
    for (const auto& e : entries) out.at(e.dim) = e.weight;
    return out;
  }
};

/// tf * ln(|D| / df). Terms outside the vocabulary are ignored.
inline DocVector tfidf_vector(std::span<const std::string> terms, const Vocabulary& vocab, std::string doc_id = {}) {
  std::map<std::size_t, double> tf;
  for (const auto& term : terms) {
    auto it = vocab.index.find(term);
    if (it != vocab.index.end()) tf[it->second] += 1.0;
  }
  DocVector v{std::move(doc_id), {}};
  const double n_docs = static_cast<double>(vocab.document_count);
  for (const auto& [dim, count] : tf) {
    const double w = count * std::log(n_docs / static_cast<double>(vocab.df[dim]));
    if (w > 0.0) v.entries.push_back({dim, w});
  }
  return v;
}

/// Debug dump: one line per vector, `doc_id \t dim:weight \t ...`.
inline void write_vectors(std::ostream& out, std::span<const DocVector> vectors) {
  char buf[64];
  for (const auto& v : vectors) {
    out << v.doc_id;
    for (const auto& e : v.entries) {
      std::snprintf(buf, sizeof buf, "%zu:%.6g", e.dim, e.weight);
      out << '\t' << buf;
    }
    out << '\n';
  }
}

}  // namespace lsacluster
