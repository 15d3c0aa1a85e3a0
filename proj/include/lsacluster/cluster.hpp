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
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lsacluster/error.hpp"
#include "lsacluster/measures.hpp"
#include "lsacluster/vsm.hpp"

namespace lsacluster {

struct ClusterConfig {
  std::size_t k = 2;
  MeasureKind measure = MeasureKind::Euclidean;
  std::size_t max_iters = 100;
  std::size_t runs = 5;
  std::uint64_t seed = 0;
};

struct ClusteringResult {
  std::vector<std::size_t> assignments;        // aligned with the input vectors
  std::vector<std::vector<double>> centroids;  // k dense vectors
  std::size_t iterations_used = 0;
  bool converged = false;
  std::uint64_t seed = 0;
  // Sum of squared distances to the assigned centroid after every
  // assignment step.
  std::vector<double> objective;
};

namespace detail {

// Uniform draw in [0, bound). std::uniform_int_distribution is
// implementation-defined; this keeps runs identical across standard libraries.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

class KMeansRun {
 public:
  KMeansRun(std::vector<const DocVector*> docs, std::size_t dimension, const ClusterConfig& config)
      : docs_(std::move(docs)), dimension_(dimension), config_(config) {}

  ClusteringResult run() {
    initialize();
    ClusteringResult result;
    result.seed = config_.seed;
    std::vector<std::size_t> previous;
    for (std::size_t iter = 1; iter <= config_.max_iters; ++iter) {
      std::vector<std::size_t> current = assign();
      result.objective.push_back(objective(current));
      if (iter > 1 && current == previous) {
        result.converged = true;
        break;
      }
      update(current);
      repair_empty_clusters(current);
      previous = std::move(current);
      result.iterations_used = iter;
    }
    result.assignments = std::move(previous);
    result.centroids.reserve(centroids_.size());
    for (const auto& c : centroids_) result.centroids.push_back(c.to_dense(dimension_));
    return result;
  }

 private:
  double dist(std::size_t doc, std::size_t cluster) const {
    return distance(config_.measure, *docs_[doc], centroids_[cluster], dimension_);
  }

  void initialize() {
    const std::size_t n = docs_.size();
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::mt19937_64 rng(config_.seed);
    centroids_.clear();
    for (std::size_t i = 0; i < config_.k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(bounded_draw(rng, n - i));
      std::swap(pool[i], pool[j]);
      centroids_.push_back(*docs_[pool[i]]);
    }
  }

  std::vector<std::size_t> assign() const {
    std::vector<std::size_t> out(docs_.size(), 0);
    for (std::size_t i = 0; i < docs_.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < centroids_.size(); ++c) {
        const double d = dist(i, c);
        if (d < best) {
          best = d;
          out[i] = c;
        }
      }
    }
    return out;
  }

  double objective(const std::vector<std::size_t>& assignment) const {
    double s = 0.0;
    for (std::size_t i = 0; i < docs_.size(); ++i) {
      const double d = dist(i, assignment[i]);
      s += d * d;
    }
    return s;
  }

  DocVector mean_of(const std::vector<std::size_t>& assignment, std::size_t cluster) const {
    std::vector<double> acc(dimension_, 0.0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < docs_.size(); ++i) {
      if (assignment[i] != cluster) continue;
      ++count;
      for (const auto& e : docs_[i]->entries) acc[e.dim] += e.weight;
    }
    if (count > 0)
      for (double& x : acc) x /= static_cast<double>(count);
    return DocVector::from_dense({}, acc);
  }

  void update(const std::vector<std::size_t>& assignment) {
    for (std::size_t c = 0; c < centroids_.size(); ++c) centroids_[c] = mean_of(assignment, c);
  }

  // An empty cluster takes the document farthest from its own centroid,
  // drawn only from clusters that keep at least one member.
  void repair_empty_clusters(std::vector<std::size_t>& assignment) {
    for (std::size_t c = 0; c < centroids_.size(); ++c) {
      std::vector<std::size_t> sizes(centroids_.size(), 0);
      for (std::size_t a : assignment) ++sizes[a];
      if (sizes[c] != 0) continue;
      std::size_t pick = docs_.size();
      double farthest = -1.0;
      for (std::size_t i = 0; i < docs_.size(); ++i) {
        if (sizes[assignment[i]] < 2) continue;
        const double d = dist(i, assignment[i]);
        if (d > farthest) {
          farthest = d;
          pick = i;
        }
      }
      if (pick == docs_.size()) break;
      const std::size_t donor = assignment[pick];
      assignment[pick] = c;
      centroids_[c] = *docs_[pick];
      centroids_[c].doc_id.clear();
      centroids_[donor] = mean_of(assignment, donor);
    }
  }

  std::vector<const DocVector*> docs_;
  std::size_t dimension_;
  ClusterConfig config_;
  std::vector<DocVector> centroids_;
};

}  // namespace detail

/// K-means with Forgy initialization and the measure's distance in the
/// assignment step; centroids are arithmetic means. Documents are processed
/// in doc_id order so the outcome does not depend on input order.
inline ClusteringResult kmeans(std::span<const DocVector> vectors, std::size_t dimension, const ClusterConfig& config) {
  if (config.k == 0) throw Error(ErrorKind::ConfigError, "k must be >= 1");
  if (config.max_iters == 0) throw Error(ErrorKind::ConfigError, "max_iters must be >= 1");
  if (vectors.size() < config.k) {
    throw Error(ErrorKind::TooFewDocuments, std::to_string(vectors.size()) + " documents for k = " +
                                                std::to_string(config.k));
  }
  if (dimension == 0) throw Error(ErrorKind::ZeroVocabulary, "vocabulary is empty");

  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vectors[a].doc_id < vectors[b].doc_id; });
  std::vector<const DocVector*> docs;
  docs.reserve(order.size());
  for (std::size_t pos : order) docs.push_back(&vectors[pos]);

  ClusteringResult canonical = detail::KMeansRun(std::move(docs), dimension, config).run();
  ClusteringResult result = canonical;
  for (std::size_t i = 0; i < order.size(); ++i) result.assignments[order[i]] = canonical.assignments[i];
  return result;
}

/// One kmeans per seed in seed, seed+1, ..., seed+runs-1.
inline std::vector<ClusteringResult> run_averaged(std::span<const DocVector> vectors, std::size_t dimension,
                                                  const ClusterConfig& config) {
  if (config.runs == 0) throw Error(ErrorKind::ConfigError, "runs must be >= 1");
  std::vector<ClusteringResult> results;
  results.reserve(config.runs);
  for (std::size_t r = 0; r < config.runs; ++r) {
    ClusterConfig run_config = config;
    run_config.seed = config.seed + r;
    results.push_back(kmeans(vectors, dimension, run_config));
  }
  return results;
}

}  // namespace lsacluster
