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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lsacluster/error.hpp"
#include "lsacluster/linalg.hpp"
#include "lsacluster/preprocess.hpp"

namespace lsacluster {

/// Terms (rows) by sentences (columns), weighted tf * ln(N / n_j).
struct TermSentenceMatrix {
  DenseMatrix matrix;
  std::vector<std::string> terms;  // row order = first occurrence
  std::unordered_map<std::string, std::size_t> term_index;
  std::size_t sentence_count = 0;
};

inline TermSentenceMatrix build_term_sentence_matrix(std::span<const std::vector<std::string>> sentence_terms) {
  if (sentence_terms.empty()) throw Error(ErrorKind::EmptyInput, "no sentences");
  TermSentenceMatrix tsm;
  tsm.sentence_count = sentence_terms.size();
  for (const auto& sentence : sentence_terms)
    for (const auto& term : sentence)
      if (tsm.term_index.try_emplace(term, tsm.terms.size()).second) tsm.terms.push_back(term);

  const std::size_t m = tsm.terms.size();
  const std::size_t n = tsm.sentence_count;
  DenseMatrix tf(m, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& term : sentence_terms[j]) tf(tsm.term_index.at(term), j) += 1.0;

  tsm.matrix = DenseMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t containing = 0;
    for (std::size_t j = 0; j < n; ++j) containing += tf(i, j) > 0.0 ? 1 : 0;
    const double global = std::log(static_cast<double>(n) / static_cast<double>(containing));
    for (std::size_t j = 0; j < n; ++j) tsm.matrix(i, j) = tf(i, j) * global;
  }
  return tsm;
}

inline std::vector<std::vector<std::string>> sentence_stems(std::span<const Sentence> sentences) {
  std::vector<std::vector<std::string>> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) {
    auto& terms = out.emplace_back();
    for (const auto& t : s.tokens) terms.push_back(t.stem);
  }
  return out;
}

inline TermSentenceMatrix build_term_sentence_matrix(std::span<const Sentence> sentences) {
  const auto terms = sentence_stems(sentences);
  return build_term_sentence_matrix(std::span<const std::vector<std::string>>(terms));
}

struct Summary {
  std::vector<std::size_t> selected;  // topic order
  std::size_t k = 0;
  std::size_t k_effective = 0;
  // Set when the weighted matrix is all zero; selected is then the leading
  // sentences.
  bool degenerate = false;
};

/// Requested summary length: a sentence count, a percentage of the document's
/// sentences, or the default min(5, ceil(30%)).
struct SummaryLength {
  enum class Kind { Default, Count, Percent };
  Kind kind = Kind::Default;
  double value = 0.0;

  static SummaryLength count(std::size_t k) { return {Kind::Count, static_cast<double>(k)}; }
  static SummaryLength percent(double p) { return {Kind::Percent, p}; }

  std::size_t resolve(std::size_t sentence_count) const {
    const double n = static_cast<double>(sentence_count);
    switch (kind) {
      case Kind::Count: return static_cast<std::size_t>(value);
      case Kind::Percent: return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(n * value / 100.0)));
      case Kind::Default: break;
    }
    return std::max<std::size_t>(1, std::min<std::size_t>(5, static_cast<std::size_t>(std::ceil(0.3 * n))));
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Count: return std::to_string(static_cast<std::size_t>(value));
      case Kind::Percent: {
        std::string s = std::to_string(value);
        s.erase(s.find_last_not_of('0') + 1);
        if (s.back() == '.') s.pop_back();
        return s + "%";
      }
      case Kind::Default: break;
    }
    return "default";
  }

  /// Accepts "N", "P%" or "default".
  static SummaryLength parse(std::string_view text) {
    const std::string s(text);
    try {
      if (s == "default") return {};
      if (!s.empty() && s.back() == '%') {
        std::size_t used = 0;
        const double p = std::stod(s.substr(0, s.size() - 1), &used);
        if (used == s.size() - 1 && p > 0.0 && p <= 100.0) return percent(p);
      } else {
        std::size_t used = 0;
        const long long k = std::stoll(s, &used);
        if (used == s.size() && k >= 1) return count(static_cast<std::size_t>(k));
      }
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::ConfigError, "invalid summary length '" + s + "' (expected N >= 1, P% or default)");
  }
};

/// Topic-wise sentence selection over the right singular vectors of a
/// terms x sentences weight matrix: for topic t the not-yet-selected sentence
/// with the largest V(i, t) is taken, smaller index winning ties. Stops after
/// min(k, rank, n) topics.
inline Summary select_topic_sentences(const DenseMatrix& weights, std::size_t k) {
  const std::size_t n = weights.cols();
  if (n == 0) throw Error(ErrorKind::EmptyInput, "no sentences to summarize");
  if (k == 0) throw Error(ErrorKind::OutOfRange, "summary length must be >= 1");
  const SvdFactors f = svd(weights);

  Summary summary;
  summary.k = k;
  if (f.rank == 0) {
    summary.degenerate = true;
    summary.k_effective = std::min(k, n);
    for (std::size_t i = 0; i < summary.k_effective; ++i) summary.selected.push_back(i);
    return summary;
  }

  summary.k_effective = std::min({k, f.rank, n});
  std::vector<bool> taken(n, false);
  for (std::size_t topic = 0; topic < summary.k_effective; ++topic) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      if (best == n || f.v(i, topic) > f.v(best, topic)) best = i;
    }
    taken[best] = true;
    summary.selected.push_back(best);
  }
  return summary;
}

inline Summary summarize(std::span<const std::vector<std::string>> sentence_terms, std::size_t k) {
  if (sentence_terms.empty()) throw Error(ErrorKind::EmptyInput, "no sentences to summarize");
  return select_topic_sentences(build_term_sentence_matrix(sentence_terms).matrix, k);
}

inline Summary summarize(std::span<const Sentence> sentences, std::size_t k) {
  const auto terms = sentence_stems(sentences);
  return summarize(std::span<const std::vector<std::string>>(terms), k);
}

inline constexpr std::string_view kDefaultSummaryJoiner = "۔ ";

/// Selected sentences in document order, joined.
inline std::string render_summary(std::span<const Sentence> sentences, const Summary& summary,
                                  std::string_view joiner = kDefaultSummaryJoiner) {
  std::vector<std::size_t> order = summary.selected;
  std::sort(order.begin(), order.end());
  std::string out;
  for (std::size_t idx : order) {
    if (idx >= sentences.size()) {
      throw Error(ErrorKind::IndexOutOfRange, "sentence index " + std::to_string(idx) + " >= " +
                                                  std::to_string(sentences.size()));
    }
    if (!out.empty()) out += joiner;
    out += sentences[idx].text();
  }
  return out;
}

}  // namespace lsacluster
