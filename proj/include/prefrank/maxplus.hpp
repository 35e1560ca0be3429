#pragma once

/**
 * @file maxplus.hpp
 * @brief Max-times (tropical) matrix algebra over the nonnegative reals.
 *
 * Addition is the maximum, multiplication is ordinary multiplication:
 *
 *   (A ⊕ B)_ij = max(a_ij, b_ij)
 *   (A ⊗ B)_ij = max_k a_ik * b_kj
 *
 * Zero is the additive identity and the identity matrix I is the
 * multiplicative one. Vectors are n x 1 matrices; a row vector is 1 x n.
 * Every function here is pure.
 */

#include <algorithm>
#include <cassert>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "prefrank/errors.hpp"

namespace prefrank::maxplus {

/// Default slack accepted on the Kleene star precondition lambda <= 1.
inline constexpr double kKleeneTolerance = 1e-9;
/// Slack accepted when testing the linear dependence identity value == 1.
inline constexpr double kDependenceTolerance = 1e-9;

/// Dense row-major matrix with nonnegative entries.
template <std::floating_point T>
class BasicMatrix {
 public:
  using value_type = T;

  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols, T fill = T{0})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Build from nested rows; all rows must have the same length.
  BasicMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static BasicMatrix column(std::span<const T> x) {
    BasicMatrix m(x.size(), 1);
    std::copy(x.begin(), x.end(), m.data_.begin());
    return m;
  }

  static BasicMatrix row(std::span<const T> x) {
    BasicMatrix m(1, x.size());
    std::copy(x.begin(), x.end(), m.data_.begin());
    return m;
  }

  static BasicMatrix ones(std::size_t rows, std::size_t cols) { return BasicMatrix(rows, cols, T{1}); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<const T> values() const noexcept { return data_; }

  std::vector<T> column_vector(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  /// Matrix made of the listed columns, in the listed order.
  BasicMatrix select_columns(std::span<const std::size_t> indices) const {
    BasicMatrix out(rows_, indices.size());
    for (std::size_t c = 0; c < indices.size(); ++c)
      for (std::size_t i = 0; i < rows_; ++i) out(i, c) = (*this)(i, indices[c]);
    return out;
  }

  bool operator==(const BasicMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = BasicMatrix<double>;

/// Entrywise maximum.
template <std::floating_point T>
BasicMatrix<T> add(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("tropical add: shapes differ");
  BasicMatrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = std::max(a(i, j), b(i, j));
  return out;
}

/// c_ij = max_k a_ik * b_kj
template <std::floating_point T>
BasicMatrix<T> multiply(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("tropical multiply: inner dimensions differ");
  BasicMatrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = std::max(out(i, j), aik * b(k, j));
    }
  return out;
}

/// Scalar multiple, c * A.
template <std::floating_point T>
BasicMatrix<T> scale(const BasicMatrix<T>& a, T c) {
  BasicMatrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = c * a(i, j);
  return out;
}

/// Multiplicative conjugate transpose: (A⁻)_ij = 1/a_ji, or 0 where a_ji = 0.
template <std::floating_point T>
BasicMatrix<T> conjugate_transpose(const BasicMatrix<T>& a) {
  BasicMatrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j) != T{0} ? T{1} / a(i, j) : T{0};
  return out;
}

/// Maximum of the diagonal.
template <std::floating_point T>
T trace(const BasicMatrix<T>& a) {
  if (!a.square()) throw DimensionMismatch("trace of a non-square matrix");
  T tr{0};
  for (std::size_t i = 0; i < a.rows(); ++i) tr = std::max(tr, a(i, i));
  return tr;
}

/// A^p by repeated multiplication; A^0 = I.
template <std::floating_point T>
BasicMatrix<T> power(const BasicMatrix<T>& a, unsigned p) {
  if (!a.square()) throw DimensionMismatch("power of a non-square matrix");
  auto out = BasicMatrix<T>::identity(a.rows());
  for (unsigned k = 0; k < p; ++k) out = multiply(out, a);
  return out;
}

/// lambda = max_{k=1..n} tr(A^k)^(1/k), the maximum cycle geometric mean.
template <std::floating_point T>
T spectral_radius(const BasicMatrix<T>& a) {
  if (!a.square() || a.empty()) throw DimensionMismatch("spectral radius needs a non-empty square matrix");
  const std::size_t n = a.rows();
  T radius{0};
  auto p = a;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) p = multiply(p, a);
    const T tr = trace(p);
    if (tr > T{0}) radius = std::max(radius, k == 1 ? tr : std::pow(tr, T{1} / static_cast<T>(k)));
  }
  return radius;
}

/// A* = I ⊕ A ⊕ ... ⊕ A^(n-1). Requires spectral_radius(A) <= 1 + tolerance.
template <std::floating_point T>
BasicMatrix<T> kleene_star(const BasicMatrix<T>& a, T tolerance = static_cast<T>(kKleeneTolerance)) {
  if (!a.square() || a.empty()) throw DimensionMismatch("Kleene star needs a non-empty square matrix");
  const T radius = spectral_radius(a);
  if (radius > T{1} + tolerance) throw SpectralRadiusExceedsOne(static_cast<double>(radius));
  const std::size_t n = a.rows();
  auto star = BasicMatrix<T>::identity(n);
  auto p = star;
  for (std::size_t k = 1; k < n; ++k) {
    p = multiply(p, a);
    star = add(star, p);
  }
  return star;
}

/// max(x) / min(x) for a positive vector.
template <std::floating_point T>
T hilbert_seminorm(std::span<const T> x) {
  if (x.empty()) throw DimensionMismatch("Hilbert seminorm of an empty vector");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (!(*lo > T{0})) throw Error("Hilbert seminorm needs a positive vector");
  return *hi / *lo;
}

template <std::floating_point T>
T hilbert_seminorm(const std::vector<T>& x) {
  return hilbert_seminorm(std::span<const T>(x));
}

/// Value of (A (b⁻A)⁻)⁻ b. Always >= 1 for positive b; equals 1 exactly when b
/// is a max-linear combination of the columns of A.
template <std::floating_point T>
T dependence_value(std::span<const T> b, const BasicMatrix<T>& columns) {
  if (columns.cols() == 0) throw DimensionMismatch("linear dependence against an empty column set");
  if (columns.rows() != b.size()) throw DimensionMismatch("linear dependence: row counts differ");
  const auto bcol = BasicMatrix<T>::column(b);
  const auto coeffs = conjugate_transpose(multiply(conjugate_transpose(bcol), columns));
  const auto approx = multiply(columns, coeffs);
  return multiply(conjugate_transpose(approx), bcol)(0, 0);
}

template <std::floating_point T>
bool is_linearly_dependent(std::span<const T> b, const BasicMatrix<T>& columns,
                           T tolerance = static_cast<T>(kDependenceTolerance)) {
  return std::abs(dependence_value(b, columns) - T{1}) <= tolerance;
}

template <std::floating_point T>
bool is_linearly_dependent(const std::vector<T>& b, const BasicMatrix<T>& columns,
                           T tolerance = static_cast<T>(kDependenceTolerance)) {
  return is_linearly_dependent(std::span<const T>(b), columns, tolerance);
}

/// 1ᵀ A 1, the largest entry.
template <std::floating_point T>
T max_entry(const BasicMatrix<T>& a) {
  const auto v = a.values();
  return v.empty() ? T{0} : *std::max_element(v.begin(), v.end());
}

}  // namespace prefrank::maxplus
