// Copyright 2026 The cqed-dit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cqed/errors.hpp"

namespace cqed {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr Complex kI{0.0, 1.0};

/// Dense complex matrix, row-major. Entries are checked to be finite when the
/// matrix is built from caller data.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw DimensionMismatch("matrix dimensions must be positive");
    }
  }

  ComplexMatrix(std::size_t rows, std::size_t cols, CVector entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
      throw DimensionMismatch("matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
      throw DimensionMismatch("entry count " + std::to_string(data_.size()) +
                              " does not match " + std::to_string(rows) + "x" +
                              std::to_string(cols));
    }
    for (const auto& z : data_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvalidParameter("matrix entries must be finite");
      }
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const Complex> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  const CVector& entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  ComplexMatrix conj() const {
    ComplexMatrix r = *this;
    for (auto& z : r.data_) z = std::conj(z);
    return r;
  }

  Complex trace() const {
    require_square("trace");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest entry magnitude.
  double max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  bool is_hermitian(double tol) const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  ComplexMatrix& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionMismatch("matrix product of " + std::to_string(a.rows_) + "x" +
                              std::to_string(a.cols_) + " and " +
                              std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    ComplexMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    }
    return r;
  }

  friend CVector operator*(const ComplexMatrix& a, std::span<const Complex> x) {
    if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector length mismatch");
    CVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * x[j];
      y[i] = s;
    }
    return y;
  }

 private:
  void require_square(const char* what) const {
    if (!square()) throw DimensionMismatch(std::string(what) + " needs a square matrix");
  }
  void require_same_shape(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionMismatch("shape mismatch in elementwise operation");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  CVector data_;
};

/// Kronecker product a ⊗ b.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

inline double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

// Column-stacking vectorization: vec(X)[i + j*d] = X(i, j).
inline CVector vectorize(const ComplexMatrix& x) {
  CVector v(x.rows() * x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j)
    for (std::size_t i = 0; i < x.rows(); ++i) v[i + j * x.rows()] = x(i, j);
  return v;
}

inline ComplexMatrix unvectorize(std::span<const Complex> v, std::size_t d) {
  if (v.size() != d * d) throw DimensionMismatch("vector length is not d^2");
  ComplexMatrix x(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) x(i, j) = v[i + j * d];
  return x;
}

/// Index of the diagonal element (k, k) of a d x d matrix in its column-stacked
/// vectorization.
constexpr std::size_t diagonal_slot(std::size_t k, std::size_t d) { return k * (d + 1); }

/// LU factorization with partial pivoting of a square complex matrix.
class LuFactorization {
 public:
  /// Relative pivot threshold, measured against the largest initial row norm.
  static constexpr double kSingularTolerance = 1e-13;

  explicit LuFactorization(ComplexMatrix a) : lu_(std::move(a)), perm_(lu_.rows()) {
    if (!lu_.square()) throw DimensionMismatch("LU needs a square matrix");
    const std::size_t n = lu_.rows();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double row_norm = 0.0;
      for (const auto& z : lu_.row(i)) row_norm += std::abs(z);
      scale = std::max(scale, row_norm);
    }
    const double threshold = kSingularTolerance * scale;
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::abs(lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        const double v = std::abs(lu_(i, k));
        if (v > best) {
          best = v;
          p = i;
        }
      }
      if (!(best > threshold)) {
        throw SingularMatrix("pivot " + std::to_string(best) + " at column " +
                             std::to_string(k) + " below threshold " +
                             std::to_string(threshold));
      }
      if (p != k) {
        std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
        std::swap(perm_[k], perm_[p]);
      }
      const Complex inv_pivot = 1.0 / lu_(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const Complex f = lu_(i, k) * inv_pivot;
        lu_(i, k) = f;
        if (f == Complex{}) continue;
        auto ri = lu_.row(i);
        auto rk = lu_.row(k);
        for (std::size_t j = k + 1; j < n; ++j) ri[j] -= f * rk[j];
      }
    }
  }

  std::size_t size() const noexcept { return lu_.rows(); }

  CVector solve(std::span<const Complex> b) const {
    const std::size_t n = lu_.rows();
    if (b.size() != n) throw DimensionMismatch("right-hand side length mismatch");
    CVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = x[i];
      const auto r = lu_.row(i);
      for (std::size_t j = 0; j < i; ++j) s -= r[j] * x[j];
      x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      Complex s = x[i];
      const auto r = lu_.row(i);
      for (std::size_t j = i + 1; j < n; ++j) s -= r[j] * x[j];
      x[i] = s / r[i];
    }
    return x;
  }

 private:
  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;
};

inline CVector solve_dense(const ComplexMatrix& a, std::span<const Complex> b) {
  if (!a.square()) throw DimensionMismatch("solve_dense needs a square matrix");
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length mismatch");
  return LuFactorization(a).solve(b);
}

/// Solves M x = rhs on vectorized d x d matrices with the row of diagonal slot
/// `slot` replaced by the trace functional, i.e. the constraint Tr(x) =
/// trace_value. This is exact whenever Tr is a left eigenvector of M and the
/// solution is known to carry that trace.
inline CVector solve_trace_constrained(ComplexMatrix m, std::size_t d,
                                       std::span<const Complex> rhs,
                                       Complex trace_value, std::size_t slot = 0) {
  if (!m.square() || m.rows() != d * d) {
    throw DimensionMismatch("generator must be d^2 x d^2");
  }
  if (slot >= d) throw InvalidParameter("trace slot out of range");
  const std::size_t r = diagonal_slot(slot, d);
  CVector b(rhs.begin(), rhs.end());
  if (b.size() != d * d) throw DimensionMismatch("right-hand side length mismatch");
  auto row = m.row(r);
  std::fill(row.begin(), row.end(), Complex{});
  for (std::size_t k = 0; k < d; ++k) row[diagonal_slot(k, d)] = 1.0;
  b[r] = trace_value;
  return LuFactorization(std::move(m)).solve(b);
}

/// Trace-normalized null vector of a trace-preserving generator acting on
/// column-stacked d x d matrices, Hermitized after the solve.
inline CVector null_vector_trace_normalized(const ComplexMatrix& l, std::size_t d,
                                            std::size_t slot = 0) {
  CVector zero(d * d);
  CVector v;
  try {
    v = solve_trace_constrained(l, d, zero, 1.0, slot);
  } catch (const SingularMatrix& e) {
    throw DegenerateSteadyState(std::string("steady state is not unique (") + e.what() + ")");
  }
  ComplexMatrix rho = unvectorize(v, d);
  ComplexMatrix h = (rho + rho.adjoint()) * 0.5;
  return vectorize(h);
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

/// Ascending eigenvalues of a Hermitian matrix (lower triangle is used).
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionMismatch("eigenvalues need a square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(m), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// Eigenvalues of a general square matrix, unordered.
inline CVector eigenvalues(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionMismatch("eigenvalues need a square matrix");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(m), false);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace cqed
