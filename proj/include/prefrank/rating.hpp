#pragma once

/**
 * @file rating.hpp
 * @brief Rating vectors from a pairwise comparison matrix.
 *
 * Three methods:
 *  - principal eigenvector (classical arithmetic, power iteration),
 *  - geometric mean of rows,
 *  - log-Chebyshev approximation, i.e. minimizing max_ij a_ij x_j / x_i.
 *
 * The log-Chebyshev minimum is the tropical spectral radius lambda of A and
 * every optimal x has the form x = B u with B = (lambda⁻¹ A)* and u > 0.
 * When the columns of B do not all span the same ray the optimum is not
 * unique, and two members of the solution cone are reported: the one with
 * the largest Hilbert seminorm max(x)/min(x) (best differentiating) and the
 * one with the smallest (worst differentiating).
 *
 * All returned rating vectors are divided by their maximum entry.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <fmt/format.h>

#include "prefrank/comparison.hpp"
#include "prefrank/errors.hpp"
#include "prefrank/maxplus.hpp"
#include "prefrank/tags.hpp"

namespace prefrank {

/// Positive scores in (0, 1], the largest equal to 1.
struct RatingVector {
  std::vector<double> scores;
  Tag method = Tag::SR;

  std::size_t size() const noexcept { return scores.size(); }
  double operator[](std::size_t i) const { return scores[i]; }
  bool operator==(const RatingVector&) const = default;
};

inline RatingVector normalize_max(std::vector<double> x, Tag method) {
  if (x.empty()) throw DimensionMismatch("cannot normalize an empty rating vector");
  const double top = *std::max_element(x.begin(), x.end());
  if (!(top > 0.0)) throw Error("rating vector has no positive entry");
  for (double& v : x) v /= top;
  return {std::move(x), method};
}

struct PowerIterationOptions {
  double tolerance = 1e-12;
  int max_iterations = 10'000;
};

/// Perron vector of A, iterating x <- A x / max(A x) from the all-ones vector.
inline RatingVector principal_eigenvector_rate(const ComparisonMatrix& a, PowerIterationOptions opts = {}) {
  const std::size_t n = a.size();
  std::vector<double> x(n, 1.0), next(n);
  for (int it = 0; it < opts.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
      next[i] = s;
    }
    const double top = *std::max_element(next.begin(), next.end());
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= top;
      diff = std::max(diff, std::abs(next[i] - x[i]));
    }
    x.swap(next);
    if (diff < opts.tolerance) return normalize_max(std::move(x), Tag::SPE);
  }
  throw ConvergenceFailure(fmt::format("power iteration did not converge in {} iterations", opts.max_iterations));
}

/// x_i = (prod_j a_ij)^(1/n).
inline RatingVector geometric_mean_rate(const ComparisonMatrix& a) {
  const std::size_t n = a.size();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) log_sum += std::log(a(i, j));
    x[i] = std::exp(log_sum / static_cast<double>(n));
  }
  return normalize_max(std::move(x), Tag::SGM);
}

/// max_ij a_ij x_j / x_i, the tropical form x⁻ A x.
inline double log_chebyshev_objective(const ComparisonMatrix& a, std::span<const double> x) {
  if (x.size() != a.size()) throw DimensionMismatch("objective: vector length differs from matrix order");
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(x[i] > 0.0)) throw Error("objective needs a positive vector");
    for (std::size_t j = 0; j < a.size(); ++j) best = std::max(best, a(i, j) * x[j] / x[i]);
  }
  return best;
}

inline double log_chebyshev_objective(const ComparisonMatrix& a, const RatingVector& x) {
  return log_chebyshev_objective(a, std::span<const double>(x.scores));
}

/// Columns of `generators` span every optimal rating vector.
struct SolutionCone {
  double lambda = 0.0;
  /// (lambda⁻¹ A)*, before pruning.
  Matrix kleene;
  /// Linearly independent columns kept from `kleene`.
  Matrix generators;
  /// Indices into `kleene` of the kept columns.
  std::vector<std::size_t> retained;
  bool unique = false;
};

/// Walks the columns in ascending order and drops each one that is a
/// max-linear combination of the columns not yet dropped. Dropping is final.
inline Matrix prune_columns(const Matrix& b, std::vector<std::size_t>* retained = nullptr) {
  std::vector<std::size_t> kept(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) kept[j] = j;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::vector<std::size_t> others;
    for (std::size_t c : kept)
      if (c != j) others.push_back(c);
    if (others.empty()) break;
    if (maxplus::is_linearly_dependent(b.column_vector(j), b.select_columns(others)))
      kept.erase(std::find(kept.begin(), kept.end(), j));
  }
  if (retained) *retained = kept;
  return b.select_columns(kept);
}

/// lambda⁻¹ A with each entry divided explicitly, so its spectral radius is 1
/// up to a rounding error.
inline Matrix normalized_by_radius(const ComparisonMatrix& a, double lambda) {
  const std::size_t n = a.size();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j) / lambda;
  return out;
}

inline SolutionCone solve_cone(const ComparisonMatrix& a) {
  SolutionCone cone;
  cone.lambda = maxplus::spectral_radius(a.full());
  cone.kleene = maxplus::kleene_star(normalized_by_radius(a, cone.lambda));
  cone.generators = prune_columns(cone.kleene, &cone.retained);
  cone.unique = cone.generators.cols() == 1;
  return cone;
}

namespace detail {

inline constexpr double kArgmaxTieTolerance = 1e-9;

/// First index whose value is within a relative 1e-9 of the maximum.
inline std::size_t first_argmax(std::span<const double> v) {
  const double top = *std::max_element(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] >= top - kArgmaxTieTolerance * std::abs(top)) return i;
  return 0;
}

}  // namespace detail

/// Generating matrix B (I ⊕ B_lk⁻ B) of all best differentiating solutions.
struct BestDifferentiating {
  Matrix generators;
  std::size_t k = 0;
  std::size_t l = 0;
  /// 1ᵀ B B⁻ 1, the largest Hilbert seminorm reachable inside the cone.
  double max_seminorm = 0.0;
};

inline BestDifferentiating best_differentiating_generators(const SolutionCone& cone) {
  const Matrix& b = cone.generators;
  const std::size_t n = b.rows();
  const std::size_t m = b.cols();

  std::vector<double> spread(m);
  for (std::size_t j = 0; j < m; ++j) spread[j] = maxplus::hilbert_seminorm(b.column_vector(j));
  BestDifferentiating out;
  out.k = detail::first_argmax(spread);

  std::vector<double> inverse_k(n);
  for (std::size_t i = 0; i < n; ++i) inverse_k[i] = 1.0 / b(i, out.k);
  out.l = detail::first_argmax(inverse_k);

  const auto ones = Matrix::ones(n, 1);
  out.max_seminorm =
      maxplus::multiply(maxplus::multiply(maxplus::conjugate_transpose(ones), b),
                        maxplus::multiply(maxplus::conjugate_transpose(b), ones))(0, 0);

  Matrix b_lk(n, m);
  b_lk(out.l, out.k) = b(out.l, out.k);
  const Matrix inner =
      maxplus::add(Matrix::identity(m), maxplus::multiply(maxplus::conjugate_transpose(b_lk), b));
  out.generators = maxplus::multiply(b, inner);
  return out;
}

/// Column k of B (I ⊕ B_lk⁻ B), which is b_k itself, normalized. Any u > 0
/// gives an optimal vector; u = e_k picks the column of largest spread.
inline RatingVector best_differentiating(const SolutionCone& cone) {
  const auto best = best_differentiating_generators(cone);
  return normalize_max(best.generators.column_vector(best.k), Tag::SCB);
}

/// Generating matrix (δ⁻¹ 1 1ᵀ ⊕ lambda⁻¹ A)* of all worst differentiating
/// solutions.
struct WorstDifferentiating {
  Matrix generators;
  /// 1ᵀ (lambda⁻¹ A)* 1, the smallest Hilbert seminorm inside the cone.
  double min_seminorm = 0.0;
};

inline WorstDifferentiating worst_differentiating_generators(const ComparisonMatrix& a, const SolutionCone& cone) {
  const std::size_t n = a.size();
  WorstDifferentiating out;
  out.min_seminorm = maxplus::max_entry(cone.kleene);
  const Matrix shifted =
      maxplus::add(Matrix(n, n, 1.0 / out.min_seminorm), normalized_by_radius(a, cone.lambda));
  out.generators = maxplus::kleene_star(shifted);
  return out;
}

/// ⊕ of the generator columns, each first divided by its maximum. This is the
/// greatest solution with max-norm 1, independent of how the generators are
/// listed.
inline RatingVector worst_differentiating(const ComparisonMatrix& a, const SolutionCone& cone) {
  const Matrix w = worst_differentiating_generators(a, cone).generators;
  std::vector<double> x(w.rows(), 0.0);
  for (std::size_t j = 0; j < w.cols(); ++j) {
    double top = 0.0;
    for (std::size_t i = 0; i < w.rows(); ++i) top = std::max(top, w(i, j));
    for (std::size_t i = 0; i < w.rows(); ++i) x[i] = std::max(x[i], w(i, j) / top);
  }
  return normalize_max(std::move(x), Tag::SCW);
}

/// SPE, SGM, SCB and SCW for one matrix.
inline std::map<Tag, RatingVector> rate_all(const ComparisonMatrix& a) {
  std::map<Tag, RatingVector> out;
  out.emplace(Tag::SPE, principal_eigenvector_rate(a));
  out.emplace(Tag::SGM, geometric_mean_rate(a));
  const auto cone = solve_cone(a);
  out.emplace(Tag::SCB, best_differentiating(cone));
  out.emplace(Tag::SCW, worst_differentiating(a, cone));
  return out;
}

}  // namespace prefrank
