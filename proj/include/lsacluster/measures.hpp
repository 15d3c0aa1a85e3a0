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
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "lsacluster/error.hpp"
#include "lsacluster/vsm.hpp"

namespace lsacluster {

enum class MeasureKind { Euclidean, Cosine, Jaccard, Pearson, AvgKL };

inline constexpr MeasureKind kAllMeasures[] = {MeasureKind::Euclidean, MeasureKind::Cosine, MeasureKind::Jaccard,
                                               MeasureKind::Pearson, MeasureKind::AvgKL};

inline std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Euclidean: return "euclidean";
    case MeasureKind::Cosine: return "cosine";
    case MeasureKind::Jaccard: return "jaccard";
    case MeasureKind::Pearson: return "pearson";
    case MeasureKind::AvgKL: return "avgkl";
  }
  return "euclidean";
}

inline MeasureKind parse_measure(std::string_view name) {
  for (MeasureKind k : kAllMeasures)
    if (to_string(k) == name) return k;
  throw Error(ErrorKind::ConfigError,
              "unknown measure '" + std::string(name) + "' (expected euclidean|cosine|jaccard|pearson|avgkl)");
}

namespace detail {

// Walks the union of two sorted supports, calling f(wa, wb) per dimension.
template <typename F>
void merge_supports(const DocVector& a, const DocVector& b, F&& f) {
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->dim < ib->dim)) {
      f(ia->weight, 0.0);
      ++ia;
    } else if (ia == a.entries.end() || ib->dim < ia->dim) {
      f(0.0, ib->weight);
      ++ib;
    } else {
      f(ia->weight, ib->weight);
      ++ia;
      ++ib;
    }
  }
}

inline double dot(const DocVector& a, const DocVector& b) {
  double s = 0.0;
  merge_supports(a, b, [&](double x, double y) { s += x * y; });
  return s;
}

inline double squared_norm(const DocVector& a) {
  double s = 0.0;
  for (const auto& e : a.entries) s += e.weight * e.weight;
  return s;
}

inline double mass(const DocVector& a) {
  double s = 0.0;
  for (const auto& e : a.entries) s += e.weight;
  return s;
}

}  // namespace detail

inline double euclidean(const DocVector& a, const DocVector& b) {
  double s = 0.0;
  detail::merge_supports(a, b, [&](double x, double y) { s += (x - y) * (x - y); });
  return std::sqrt(s);
}

inline double cosine(const DocVector& a, const DocVector& b) {
  const double na = detail::squared_norm(a);
  const double nb = detail::squared_norm(b);
  if (na == 0.0 || nb == 0.0) throw Error(ErrorKind::ZeroVector, "cosine of a zero vector");
  return detail::dot(a, b) / (std::sqrt(na) * std::sqrt(nb));
}

/// Extended (Tanimoto) Jaccard: a.b / (|a|^2 + |b|^2 - a.b).
inline double jaccard(const DocVector& a, const DocVector& b) {
  const double na = detail::squared_norm(a);
  const double nb = detail::squared_norm(b);
  if (na == 0.0 && nb == 0.0) throw Error(ErrorKind::ZeroVector, "jaccard of two zero vectors");
  const double ab = detail::dot(a, b);
  return ab / (na + nb - ab);
}

inline constexpr double kPearsonVarianceTol = 1e-12;

/// Pearson correlation over all `dimension` vocabulary entries, zeros
/// included.
inline double pearson(const DocVector& a, const DocVector& b, std::size_t dimension) {
  const double m = static_cast<double>(dimension);
  const double ta = detail::mass(a);
  const double tb = detail::mass(b);
  const double va = m * detail::squared_norm(a) - ta * ta;
  const double vb = m * detail::squared_norm(b) - tb * tb;
  if (va <= kPearsonVarianceTol || vb <= kPearsonVarianceTol) {
    throw Error(ErrorKind::DegenerateVariance, "pearson of a constant vector");
  }
  return (m * detail::dot(a, b) - ta * tb) / std::sqrt(va * vb);
}

/// Averaged KL divergence of the two L1-normalized term distributions P, Q
/// against their mixture M = pi1 P + pi2 Q, where pi_i are the (equal)
/// masses of the normalized inputs. Terms absent from both are skipped and
/// 0 ln 0 = 0.
inline double avg_kl(const DocVector& a, const DocVector& b) {
  const double ma = detail::mass(a);
  const double mb = detail::mass(b);
  if (ma <= 0.0 || mb <= 0.0) throw Error(ErrorKind::ZeroVector, "avg_kl of a zero-mass vector");
  constexpr double pi1 = 0.5;
  constexpr double pi2 = 0.5;
  double d = 0.0;
  detail::merge_supports(a, b, [&](double x, double y) {
    const double p = x / ma;
    const double q = y / mb;
    const double mix = pi1 * p + pi2 * q;
    if (p > 0.0) d += pi1 * p * std::log(p / mix);
    if (q > 0.0) d += pi2 * q * std::log(q / mix);
  });
  return d > 0.0 ? d : 0.0;
}

/// Raw score of the measure: a distance for Euclidean/AvgKL, a similarity
/// otherwise.
inline double raw_score(MeasureKind kind, const DocVector& a, const DocVector& b, std::size_t dimension) {
  switch (kind) {
    case MeasureKind::Euclidean: return euclidean(a, b);
    case MeasureKind::Cosine: return cosine(a, b);
    case MeasureKind::Jaccard: return jaccard(a, b);
    case MeasureKind::Pearson: return pearson(a, b, dimension);
    case MeasureKind::AvgKL: return avg_kl(a, b);
  }
  return 0.0;
}

inline double to_distance(MeasureKind kind, double raw) {
  constexpr double slack = 1e-9;
  const auto check = [&](double lo, double hi) {
    if (!(raw >= lo - slack && raw <= hi + slack)) {
      throw Error(ErrorKind::OutOfRange, std::string(to_string(kind)) + " score " + std::to_string(raw) +
                                             " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  };
  switch (kind) {
    case MeasureKind::Euclidean:
    case MeasureKind::AvgKL:
      check(0.0, std::numeric_limits<double>::infinity());
      return std::max(raw, 0.0);
    case MeasureKind::Cosine:
    case MeasureKind::Jaccard:
      check(0.0, 1.0);
      return std::clamp(1.0 - raw, 0.0, 1.0);
    case MeasureKind::Pearson:
      check(-1.0, 1.0);
      return raw >= 0.0 ? std::max(1.0 - raw, 0.0) : std::min(-raw, 1.0);
  }
  return raw;
}

inline constexpr double kPearsonDegenerateDistance = 2.0;

/// Distance used by clustering. Totalizes the measures' error cases:
/// cosine with one zero vector is 1 and with two zero vectors 0, jaccard of
/// two zero vectors is 0, degenerate pearson is 2, avg_kl against a zero-mass
/// vector is +inf.
inline double distance(MeasureKind kind, const DocVector& a, const DocVector& b, std::size_t dimension) {
  switch (kind) {
    case MeasureKind::Cosine:
      if (a.empty() || b.empty()) return a.empty() && b.empty() ? 0.0 : 1.0;
      break;
    case MeasureKind::Jaccard:
      if (a.empty() && b.empty()) return 0.0;
      break;
    case MeasureKind::Pearson:
      try {
        return to_distance(kind, pearson(a, b, dimension));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateVariance) throw;
        return kPearsonDegenerateDistance;
      }
    case MeasureKind::AvgKL:
      if (detail::mass(a) <= 0.0 || detail::mass(b) <= 0.0) return std::numeric_limits<double>::infinity();
      break;
    case MeasureKind::Euclidean: break;
  }
  return to_distance(kind, raw_score(kind, a, b, dimension));
}

}  // namespace lsacluster
