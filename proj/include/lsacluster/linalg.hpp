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
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lsacluster/error.hpp"

namespace lsacluster {

/// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;

  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorKind::DimensionMismatch, "entry count " + std::to_string(data_.size()) +
                                                    " != " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows.begin()->size();
    std::vector<double> data;
    data.reserve(m * n);
    for (const auto& r : rows) {
      if (r.size() != n) throw Error(ErrorKind::DimensionMismatch, "ragged row list");
      data.insert(data.end(), r.begin(), r.end());
    }
    return DenseMatrix(m, n, std::move(data));
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> data() const noexcept { return data_; }

  DenseMatrix transposed() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
  }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "matmul " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                                  " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

/// Thin SVD A = U diag(sigma) V^T truncated to the numerical rank.
struct SvdFactors {
  DenseMatrix u;              // m x rank
  std::vector<double> sigma;  // nonincreasing, all > tolerance
  DenseMatrix v;              // n x rank
  std::size_t rank = 0;
};

inline double default_svd_tolerance(const DenseMatrix& a) {
  return 1e-10 * static_cast<double>(std::max(a.rows(), a.cols())) * a.max_abs();
}

namespace detail {

// One-sided (Hestenes) Jacobi on the columns of a (m >= n). Returns the
// rotated columns W = A V and the accumulated V, both column-major.
struct JacobiColumns {
  std::vector<std::vector<double>> w;
  std::vector<std::vector<double>> v;
};

inline JacobiColumns one_sided_jacobi(const DenseMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  JacobiColumns out;
  out.w.assign(n, std::vector<double>(m));
  out.v.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) out.w[j][i] = a(i, j);
    out.v[j][j] = 1.0;
  }

  constexpr double kOrthoTol = 1e-15;
  constexpr int kMaxSweeps = 80;
  const auto dot = [](const std::vector<double>& x, const std::vector<double>& y) {
    return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
  };
  const auto rotate = [](std::vector<double>& x, std::vector<double>& y, double c, double s) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double xi = x[i];
      const double yi = y[i];
      x[i] = c * xi - s * yi;
      y[i] = s * xi + c * yi;
    }
  };

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = dot(out.w[p], out.w[p]);
        const double beta = dot(out.w[q], out.w[q]);
        const double gamma = dot(out.w[p], out.w[q]);
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= kOrthoTol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        rotate(out.w[p], out.w[q], c, s);
        rotate(out.v[p], out.v[q], c, s);
      }
    }
    if (!rotated) break;
  }
  return out;
}

// Factors for m >= n, unsigned.
inline SvdFactors svd_tall(const DenseMatrix& a, double tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  JacobiColumns cols = one_sided_jacobi(a);

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    norms[j] = std::sqrt(std::inner_product(cols.w[j].begin(), cols.w[j].end(), cols.w[j].begin(), 0.0));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  std::size_t rank = 0;
  while (rank < n && norms[order[rank]] > tol) ++rank;

  SvdFactors f;
  f.rank = rank;
  f.u = DenseMatrix(m, rank);
  f.v = DenseMatrix(n, rank);
  f.sigma.resize(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    const std::size_t j = order[k];
    f.sigma[k] = norms[j];
    for (std::size_t i = 0; i < m; ++i) f.u(i, k) = cols.w[j][i] / norms[j];
    for (std::size_t i = 0; i < n; ++i) f.v(i, k) = cols.v[j][i];
  }
  return f;
}

}  // namespace detail

/// Deterministic SVD by cyclic one-sided Jacobi sweeps. Singular values at or
/// below tol are dropped. Each column of V is signed so that its
/// largest-magnitude entry (first on ties) is positive; U follows.
inline SvdFactors svd(const DenseMatrix& a, std::optional<double> tol = std::nullopt) {
  if (!a.all_finite()) throw Error(ErrorKind::NonFiniteInput, "svd input has NaN or Inf entries");
  const double threshold = tol.value_or(default_svd_tolerance(a));
  if (tol && !(*tol > 0.0)) throw Error(ErrorKind::OutOfRange, "svd tolerance must be positive");
  if (a.rows() == 0 || a.cols() == 0) {
    return SvdFactors{DenseMatrix(a.rows(), 0), {}, DenseMatrix(a.cols(), 0), 0};
  }

  SvdFactors f;
  if (a.rows() >= a.cols()) {
    f = detail::svd_tall(a, threshold);
  } else {
    f = detail::svd_tall(a.transposed(), threshold);
    std::swap(f.u, f.v);
  }

  for (std::size_t k = 0; k < f.rank; ++k) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < f.v.rows(); ++i) {
      if (std::abs(f.v(i, k)) > std::abs(f.v(best, k))) best = i;
    }
    if (f.v(best, k) < 0.0) {
      for (std::size_t i = 0; i < f.v.rows(); ++i) f.v(i, k) = -f.v(i, k);
      for (std::size_t i = 0; i < f.u.rows(); ++i) f.u(i, k) = -f.u(i, k);
    }
  }
  return f;
}

/// U diag(sigma) V^T.
inline DenseMatrix reconstruct(const SvdFactors& f) {
  DenseMatrix us = f.u;
  for (std::size_t i = 0; i < us.rows(); ++i)
    for (std::size_t k = 0; k < f.rank; ++k) us(i, k) *= f.sigma[k];
  if (f.rank == 0) return DenseMatrix(f.u.rows(), f.v.rows());
  return matmul(us, f.v.transposed());
}

}  // namespace lsacluster
