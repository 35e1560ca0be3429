#pragma once

/**
 * @file comparison.hpp
 * @brief Reciprocal pairwise comparison matrices.
 */

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "prefrank/errors.hpp"
#include "prefrank/maxplus.hpp"

namespace prefrank {

using maxplus::Matrix;

inline constexpr double kReciprocityTolerance = 1e-6;
inline constexpr double kDiagonalTolerance = 1e-9;

/// One failed reciprocity check; indices are 1-based.
struct ReciprocityViolation {
  std::size_t row;
  std::size_t col;
  std::string message;
};

/// Checks a_ii = 1 and a_ij * a_ji = 1 for every pair. Violations are data,
/// nothing is thrown.
inline std::vector<ReciprocityViolation> validate_reciprocity(const Matrix& a) {
  std::vector<ReciprocityViolation> out;
  if (!a.square()) {
    out.push_back({0, 0, fmt::format("matrix is {}x{}, not square", a.rows(), a.cols())});
    return out;
  }
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(a(i, j) > 0.0) || !std::isfinite(a(i, j)))
        out.push_back({i + 1, j + 1, fmt::format("cell ({},{}) = {} is not a positive number", i + 1, j + 1, a(i, j))});
    }
  }
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(a(i, i) - 1.0) > kDiagonalTolerance)
      out.push_back({i + 1, i + 1, fmt::format("cell ({},{}) = {} but the diagonal must be 1", i + 1, i + 1, a(i, i))});
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(a(i, j) * a(j, i) - 1.0) > kReciprocityTolerance)
        out.push_back({j + 1, i + 1,
                       fmt::format("cell ({},{}) = {} is not the reciprocal of cell ({},{}) = {}", j + 1, i + 1,
                                   a(j, i), i + 1, j + 1, a(i, j))});
    }
  }
  return out;
}

/// Positive n x n matrix with a_ii = 1 and a_ji = 1 / a_ij. Only the upper
/// triangle is stored by the caller's choice; the lower triangle is always
/// rebuilt from it, so reciprocity holds exactly.
class ComparisonMatrix {
 public:
  /// `upper` lists a_ij for i < j in row-major order: a_12, a_13, ..., a_(n-1)n.
  static ComparisonMatrix from_upper(std::size_t n, std::span<const double> upper) {
    if (n < 1) throw DimensionMismatch("comparison matrix needs n >= 1");
    if (upper.size() != n * (n - 1) / 2)
      throw DimensionMismatch(fmt::format("expected {} upper-triangle entries for n = {}, got {}", n * (n - 1) / 2,
                                          n, upper.size()));
    Matrix full = Matrix::identity(n);
    std::size_t idx = 0;
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = upper[idx++];
        if (!(v > 0.0) || !std::isfinite(v)) {
          bad.push_back(fmt::format("cell ({},{}) = {} is not a positive number", i + 1, j + 1, v));
          continue;
        }
        full(i, j) = v;
        full(j, i) = 1.0 / v;
      }
    if (!bad.empty()) throw ValidationError(std::move(bad));
    return ComparisonMatrix(std::move(full));
  }

  /// Accepts a full matrix after checking reciprocity; the stored matrix is
  /// rebuilt from the upper triangle.
  static ComparisonMatrix from_full(const Matrix& a) {
    auto violations = validate_reciprocity(a);
    if (!violations.empty()) {
      std::vector<std::string> msgs;
      for (auto& v : violations) msgs.push_back(std::move(v.message));
      throw ValidationError(std::move(msgs));
    }
    const std::size_t n = a.rows();
    std::vector<double> upper;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) upper.push_back(a(i, j));
    return from_upper(n, upper);
  }

  /// The consistent matrix a_ij = x_i / x_j of a positive vector.
  static ComparisonMatrix consistent(std::span<const double> x) {
    std::vector<double> upper;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) upper.push_back(x[i] / x[j]);
    return from_upper(x.size(), upper);
  }

  std::size_t size() const noexcept { return full_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return full_(i, j); }
  const Matrix& full() const noexcept { return full_; }

  std::vector<double> upper() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j) out.push_back(full_(i, j));
    return out;
  }

  /// Same judgments with criteria relabelled: result(i,j) = a(perm[i], perm[j]).
  ComparisonMatrix permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != size()) throw DimensionMismatch("permutation length differs from matrix order");
    std::vector<double> up;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j) up.push_back(full_(perm[i], perm[j]));
    return from_upper(size(), up);
  }

  bool operator==(const ComparisonMatrix&) const = default;

 private:
  explicit ComparisonMatrix(Matrix full) : full_(std::move(full)) {}
  Matrix full_;
};

}  // namespace prefrank
