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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances are fixed here and never loosened at runtime.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lsacluster.hpp"
#include "synthetic_corpus.hpp"

namespace {

using namespace lsacluster;
namespace fs = std::filesystem;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;  // keep the first failure
    pass = pass && ok;
  }
};

struct Criterion {
  const char* name;
  double time_limit_s;  // <= 0: no runtime bound
  std::function<Verdict()> check;
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// ---------------------------------------------------------------------------

constexpr double kReconTol = 1e-8;
constexpr double kOrthoTol = 1e-8;
constexpr double kEigenRelTol = 1e-7;

double max_orthonormality_error(const DenseMatrix& q) {
  double worst = 0.0;
  for (std::size_t a = 0; a < q.cols(); ++a)
    for (std::size_t b = a; b < q.cols(); ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < q.rows(); ++i) s += q(i, a) * q(i, b);
      worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

Verdict svd_properties() {
  Verdict v;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  double worst_recon = 0.0, worst_ortho = 0.0, worst_eig = 0.0;
  std::size_t oracle_cases = 0;
  const auto fill = [&](DenseMatrix& x) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = entry(rng);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const bool small = trial % 2 == 0;
    const std::size_t m = 1 + rng() % (small ? 8 : 50);
    const std::size_t n = 1 + rng() % (small ? 8 : 30);
    DenseMatrix a(m, n);
    if (trial % 10 == 9 && std::min(m, n) > 2) {
      // Low-rank product to exercise rank truncation.
      const std::size_t r = 1 + rng() % (std::min(m, n) - 1);
      DenseMatrix l(m, r), rt(r, n);
      fill(l);
      fill(rt);
      a = matmul(l, rt);
    } else {
      fill(a);
    }
    const SvdFactors f = svd(a);
    DenseMatrix diff = reconstruct(f);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) diff(i, j) -= a(i, j);
    const double recon = diff.frobenius_norm() / std::max(1.0, a.frobenius_norm());
    worst_recon = std::max(worst_recon, recon);
    worst_ortho = std::max({worst_ortho, max_orthonormality_error(f.u), max_orthonormality_error(f.v)});
    for (std::size_t i = 1; i < f.sigma.size(); ++i) v.require(f.sigma[i] <= f.sigma[i - 1], "sigma not ordered");

    if (small) {
      ++oracle_cases;
      Eigen::MatrixXd e(m, n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) e(i, j) = a(i, j);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e.transpose() * e, Eigen::EigenvaluesOnly);
      Eigen::VectorXd lambda = solver.eigenvalues().reverse();  // descending
      const double lmax = std::max(lambda(0), 1e-300);
      for (std::size_t i = 0; i < n; ++i) {
        const double s2 = i < f.rank ? f.sigma[i] * f.sigma[i] : 0.0;
        const double rel = i < f.rank ? std::abs(s2 - lambda(i)) / lambda(i) : std::abs(lambda(i)) / lmax;
        worst_eig = std::max(worst_eig, rel);
      }
    }
  }
  v.require(worst_recon <= kReconTol, fmt("reconstruction %.3g > 1e-8", worst_recon));
  v.require(worst_ortho <= kOrthoTol, fmt("orthonormality %.3g > 1e-8", worst_ortho));
  v.require(worst_eig <= kEigenRelTol, fmt("eigen-oracle relative error %.3g > 1e-7", worst_eig));
  if (v.pass) {
    v.detail = fmt("max recon %.2e, max ortho %.2e", worst_recon, worst_ortho) +
               fmt(", max sigma^2 rel err %.2e over %.0f oracle cases", worst_eig, static_cast<double>(oracle_cases));
  }
  return v;
}

// ---------------------------------------------------------------------------

DocVector random_sparse(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> u(0.0, 1.0), w(0.01, 10.0);
  std::vector<double> x(dim, 0.0);
  for (double& e : x)
    if (u(rng) < 0.3) e = w(rng);
  x[rng() % dim] += w(rng);  // nonzero
  return DocVector::from_dense("", x);
}

Verdict measure_axioms() {
  Verdict v;
  std::mt19937_64 rng(77);
  std::size_t pearson_checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t dim = 2 + rng() % 40;
    const DocVector x = random_sparse(rng, dim), y = random_sparse(rng, dim), z = random_sparse(rng, dim);
    const double xy = euclidean(x, y), yx = euclidean(y, x), yz = euclidean(y, z), xz = euclidean(x, z);
    v.require(xy >= 0.0, "euclidean negative");
    v.require(euclidean(x, x) == 0.0, "euclidean(x,x) != 0");
    v.require(x.to_dense(dim) == y.to_dense(dim) || xy > 0.0, "euclidean zero for distinct inputs");
    v.require(xy == yx, "euclidean asymmetric");
    v.require(xz <= xy + yz + 1e-9, "triangle inequality violated");

    for (const auto& [a, b] : {std::pair{&x, &y}, std::pair{&y, &z}, std::pair{&x, &z}}) {
      const double c = cosine(*a, *b), j = jaccard(*a, *b);
      v.require(c >= 0.0 && c <= 1.0 + 1e-12, fmt("cosine out of [0,1]: %.17g", c));
      v.require(j >= 0.0 && j <= 1.0 + 1e-12, fmt("jaccard out of [0,1]: %.17g", j));
      const double kl = avg_kl(*a, *b), lk = avg_kl(*b, *a);
      v.require(kl >= 0.0, "avg_kl negative");
      v.require(std::abs(kl - lk) < 1e-12, fmt("avg_kl asymmetric by %.3g", std::abs(kl - lk)));
    }
    const auto dense = x.to_dense(dim);
    if (std::any_of(dense.begin(), dense.end(), [&](double e) { return e != dense[0]; })) {
      ++pearson_checked;
      const double p = pearson(x, x, dim);
      v.require(std::abs(p - 1.0) < 1e-12, fmt("pearson(a,a) = %.17g", p));
    }
  }
  if (v.pass) v.detail = fmt("1000 triples, pearson(a,a)=1 on %.0f non-constant vectors", pearson_checked);
  return v;
}

// ---------------------------------------------------------------------------

DocVector dv(std::vector<double> x) { return DocVector::from_dense("", x); }

Verdict hand_oracles() {
  Verdict v;
  const double j = jaccard(dv({1, 1}), dv({1, 0}));
  const double p = pearson(dv({1, 0}), dv({0, 1}), 2);
  const std::vector<char> cluster{'A', 'A', 'A', 'B'};
  const double e = entropy(std::span<const char>(cluster), 2);
  std::vector<std::vector<std::string>> docs(10, std::vector<std::string>{"x"});
  docs[0] = {"t", "t", "x"};
  const Vocabulary vocab = build_vocabulary(docs);
  const double w = tfidf_vector(docs[0], vocab).weight(vocab.index.at("t"));
  v.require(std::abs(j - 0.5) < 1e-12, fmt("jaccard = %.10g", j));
  v.require(std::abs(p + 1.0) < 1e-12, fmt("pearson = %.10g", p));
  v.require(std::abs(e - 0.8113) <= 1e-4, fmt("entropy = %.10g", e));
  v.require(std::abs(w - 4.6052) <= 1e-4, fmt("tfidf = %.10g", w));
  v.detail = fmt("jaccard %.4f, pearson %.4f", j, p) + fmt(", entropy %.4f, tfidf %.4f", e, w);
  return v;
}

// ---------------------------------------------------------------------------

Verdict summarizer_coverage() {
  Verdict v;
  // Sentences 0,1 share {a,b,c}; sentences 2,3 share {d,e,f}.
  const std::vector<std::vector<std::string>> doc{{"a", "a", "b", "c"}, {"a", "b", "b"}, {"d", "e"}, {"d", "f", "f"}};
  const Summary first = summarize(std::span<const std::vector<std::string>>(doc), 2);
  std::vector<std::size_t> picks = first.selected;
  std::sort(picks.begin(), picks.end());
  v.require(picks.size() == 2 && picks[0] <= 1 && picks[1] >= 2, "selection does not cover both blocks");
  for (int r = 0; r < 100; ++r) {
    const Summary again = summarize(std::span<const std::vector<std::string>>(doc), 2);
    v.require(again.selected == first.selected, "selection changed between runs");
  }
  v.detail = "selected sentences " + std::to_string(first.selected[0]) + "," + std::to_string(first.selected[1]) +
             " (identical over 100 runs)";
  return v;
}

// ---------------------------------------------------------------------------

ExperimentConfig synthetic_config(std::vector<Representation> reps, std::vector<MeasureKind> measures) {
  ExperimentConfig cfg;
  cfg.representations = std::move(reps);
  cfg.stemmers = {StemmerMode::None};
  cfg.measures = std::move(measures);
  cfg.cluster.k = 3;
  cfg.cluster.runs = 5;
  cfg.cluster.seed = 0;
  return cfg;
}

Verdict synthetic_clustering() {
  Verdict v;
  const auto docs = testing::make_corpus({});  // 3 x 20, 80% category terms
  const auto cfg = synthetic_config({Representation::FullText},
                                    {MeasureKind::Cosine, MeasureKind::Jaccard, MeasureKind::Euclidean});
  const GridOutcome g = run_grid(cfg, docs, Resources::defaults());
  v.require(g.failed_cells == 0, "grid cells failed");
  std::string detail;
  for (const auto& c : g.cells) {
    const std::string m(to_string(c.measure));
    v.require(c.averaged.purity >= 0.95, m + fmt(" purity %.4f < 0.95", c.averaged.purity));
    v.require(c.averaged.entropy <= 0.10, m + fmt(" entropy %.4f > 0.10", c.averaged.entropy));
    detail += (detail.empty() ? "" : "; ") + m + fmt(" P=%.4f E=%.4f", c.averaged.purity, c.averaged.entropy);
  }
  v.detail = v.pass ? detail : v.detail + " | " + detail;
  return v;
}

Verdict summary_trend() {
  Verdict v;
  const auto docs = testing::make_corpus({.noise_sentence_fraction = 0.5});
  const std::vector<MeasureKind> all(std::begin(kAllMeasures), std::end(kAllMeasures));
  const auto cfg = synthetic_config({Representation::FullText, Representation::Summary}, all);
  const GridOutcome g = run_grid(cfg, docs, Resources::defaults());
  v.require(g.failed_cells == 0, "grid cells failed");
  if (!v.pass) return v;
  std::size_t wins = 0;
  std::string detail;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const double full = g.cells[i].averaged.entropy;
    const double summ = g.cells[all.size() + i].averaged.entropy;
    wins += summ <= full;
    detail += (detail.empty() ? "" : "; ") + std::string(to_string(all[i])) + fmt(" full %.4f summary %.4f", full, summ);
  }
  v.require(wins >= 3, "summary entropy <= fulltext for only " + std::to_string(wins) + " of 5 measures");
  v.detail = std::to_string(wins) + "/5 measures: " + detail;
  return v;
}

// ---------------------------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict cli_determinism() {
  Verdict v;
  testing::TempDir dir("acceptance");
  testing::write_corpus(dir.path() / "corpus", testing::make_corpus({.docs_per_category = 8,
                                                                     .noise_sentence_fraction = 0.3}));
  const fs::path config = dir.path() / "config.json";
  {
    nlohmann::json j = {{"corpus", (dir.path() / "corpus").string()},
                        {"representation", {"fulltext", "summary"}},
                        {"stemmer", {"none", "light", "root"}},
                        {"cluster", {{"runs", 3}, {"seed", 11}}}};
    std::ofstream(config) << j.dump(2);
  }
  std::string csv[2];
  for (int i = 0; i < 2; ++i) {
    const fs::path out = dir.path() / ("out" + std::to_string(i));
    const std::string cmd = std::string("\"") + LSACLUSTER_CLI + "\" run --config \"" + config.string() +
                            "\" --output \"" + out.string() + "\" > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    v.require(status == 0, "run exited with status " + std::to_string(status));
    csv[i] = slurp(out / "results.csv");
  }
  v.require(!csv[0].empty(), "results.csv missing");
  v.require(csv[0] == csv[1], "results.csv differs between invocations");
  if (v.pass) {
    v.detail = std::to_string(std::count(csv[0].begin(), csv[0].end(), '\n')) + " lines byte-identical";
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"svd-properties", 10.0, svd_properties},
      {"measure-axioms", 5.0, measure_axioms},
      {"hand-oracle-values", 0.0, hand_oracles},
      {"summarizer-topic-coverage", 0.0, summarizer_coverage},
      {"synthetic-clustering", 30.0, synthetic_clustering},
      {"summary-entropy-trend", 0.0, summary_trend},
      {"run-determinism", 0.0, cli_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      v.pass = false;
      v.detail += fmt(" [runtime %.2fs exceeds %.0fs]", secs, c.time_limit_s);
    }
    std::printf("%s %s (%.2fs): %s\n", v.pass ? "PASS" : "FAIL", c.name, secs, v.detail.c_str());
    failures += !v.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
