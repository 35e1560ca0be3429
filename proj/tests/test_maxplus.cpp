#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "prefrank/fixtures.hpp"
#include "prefrank/maxplus.hpp"

using namespace prefrank;
using namespace prefrank::maxplus;

namespace {

Matrix random_nonnegative(std::mt19937_64& rng, std::size_t r, std::size_t c, double zero_share = 0.0) {
  std::uniform_real_distribution<double> v(0.1, 10.0), u(0.0, 1.0);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = u(rng) < zero_share ? 0.0 : v(rng);
  return m;
}

}  // namespace

TEST(MaxPlusAdd, EntrywiseMaximum) {
  const Matrix a{{1, 2}, {3, 4}}, b{{4, 1}, {0, 5}};
  EXPECT_EQ(add(a, b), (Matrix{{4, 2}, {3, 5}}));
  EXPECT_EQ(add(a, a), a);
  EXPECT_EQ(add(a, Matrix(2, 2)), a);
}

TEST(MaxPlusAdd, RejectsShapeMismatch) { EXPECT_THROW(add(Matrix(2, 2), Matrix(2, 3)), DimensionMismatch); }

TEST(MaxPlusMultiply, IdentityAndRowMaxima) {
  const Matrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(multiply(Matrix::identity(2), a), a);
  EXPECT_EQ(multiply(a, Matrix::identity(2)), a);
  EXPECT_EQ(multiply(a, Matrix{{1}, {1}}), (Matrix{{2}, {4}}));
}

TEST(MaxPlusMultiply, MatchesDirectExpansion) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_nonnegative(rng, 2, 2), b = random_nonnegative(rng, 2, 2);
    EXPECT_EQ(multiply(a, b)(0, 0), std::max(a(0, 0) * b(0, 0), a(0, 1) * b(1, 0)));
    EXPECT_EQ(multiply(a, b), oracle::maxtimes(a, b));
  }
}

TEST(MaxPlusMultiply, RejectsInnerMismatch) { EXPECT_THROW(multiply(Matrix(2, 3), Matrix(2, 3)), DimensionMismatch); }

TEST(MaxPlusConjugate, DefinitionAndZeros) {
  const Matrix x{{2}, {4}};
  EXPECT_EQ(conjugate_transpose(x), (Matrix{{0.5, 0.25}}));
  EXPECT_EQ(conjugate_transpose(Matrix{{2}, {0}}), (Matrix{{0.5, 0}}));
  const Matrix a{{1, 2}, {4, 0}};
  EXPECT_EQ(conjugate_transpose(a), (Matrix{{1, 0.25}, {0.5, 0}}));
}

TEST(MaxPlusConjugate, InvolutionOnPositiveVectors) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_nonnegative(rng, 6, 1);
    const auto back = conjugate_transpose(conjugate_transpose(x));
    for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(back(i, 0), x(i, 0), 1e-12 * x(i, 0));
  }
}

TEST(MaxPlusTrace, MaximumDiagonal) {
  EXPECT_EQ(trace(Matrix::identity(4)), 1.0);
  EXPECT_EQ(trace(Matrix{{0.5, 9}, {9, 0.7}}), 0.7);
  EXPECT_EQ(trace(fixtures::respondent2_matrix().full()), 1.0);
  EXPECT_THROW(trace(Matrix(2, 3)), DimensionMismatch);
}

TEST(MaxPlusSpectralRadius, ReciprocalAtLeastOne) {
  for (const auto& m : {fixtures::respondent1_matrix(), fixtures::respondent2_matrix(), fixtures::respondent3_matrix()})
    EXPECT_GE(spectral_radius(m.full()), 1.0);
}

TEST(MaxPlusSpectralRadius, ConsistentMatrixIsOne) {
  const std::vector<double> x{1, 2, 4, 0.3, 7};
  EXPECT_NEAR(spectral_radius(ComparisonMatrix::consistent(x).full()), 1.0, 1e-12);
}

TEST(MaxPlusSpectralRadius, Respondent1MatchesCycleEnumeration) {
  const auto a = fixtures::respondent1_matrix().full();
  EXPECT_NEAR(spectral_radius(a), oracle::max_cycle_mean(a), 1e-12);
}

TEST(MaxPlusSpectralRadius, RandomMatricesMatchCycleEnumeration) {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 30; ++t) {
      const auto a = random_nonnegative(rng, n, n, 0.3);
      const double want = oracle::max_cycle_mean(a);
      EXPECT_NEAR(spectral_radius(a), want, 1e-12 * std::max(1.0, want)) << "n = " << n;
    }
}

TEST(MaxPlusKleene, ZeroMatrixGivesIdentity) { EXPECT_EQ(kleene_star(Matrix(3, 3)), Matrix::identity(3)); }

TEST(MaxPlusKleene, RejectsRadiusAboveOne) {
  try {
    kleene_star(Matrix{{1, 3}, {1, 1}});
    FAIL() << "expected SpectralRadiusExceedsOne";
  } catch (const SpectralRadiusExceedsOne& e) {
    EXPECT_NEAR(e.radius(), std::sqrt(3.0), 1e-12);
  }
}

TEST(MaxPlusKleene, Respondent1MatchesSummationOracle) {
  const auto a = fixtures::respondent1_matrix();
  const double lambda = spectral_radius(a.full());
  Matrix scaled(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) scaled(i, j) = a(i, j) / lambda;
  EXPECT_EQ(kleene_star(scaled), oracle::kleene_by_summation(scaled));
}

TEST(MaxPlusKleene, IdempotentAtRadiusOne) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 2; n <= 6; ++n)
    for (int t = 0; t < 20; ++t) {
      const auto raw = random_nonnegative(rng, n, n);
      const double lambda = spectral_radius(raw);
      Matrix a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = raw(i, j) / lambda;
      const auto star = kleene_star(a);
      const auto sq = multiply(star, star);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(sq(i, j), star(i, j), 1e-12 * star(i, j));
    }
}

TEST(MaxPlusAlgebra, SemiringLaws) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_nonnegative(rng, 4, 4, 0.2), b = random_nonnegative(rng, 4, 4, 0.2),
               c = random_nonnegative(rng, 4, 4, 0.2);
    EXPECT_EQ(add(a, b), add(b, a));
    EXPECT_EQ(add(add(a, b), c), add(a, add(b, c)));
    EXPECT_EQ(multiply(a, add(b, c)), add(multiply(a, b), multiply(a, c)));
    EXPECT_EQ(multiply(add(a, b), c), add(multiply(a, c), multiply(b, c)));
    const auto l = multiply(multiply(a, b), c), r = multiply(a, multiply(b, c));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(l(i, j), r(i, j), 1e-12 * l(i, j));
  }
}

TEST(MaxPlusSeminorm, Examples) {
  EXPECT_EQ(hilbert_seminorm(std::vector<double>{1, 1, 1}), 1.0);
  EXPECT_EQ(hilbert_seminorm(std::vector<double>{0.25, 1, 0.5}), 4.0);
  const std::vector<double> x{0.3, 2.5, 1.1}, y{0.9, 7.5, 3.3};
  EXPECT_NEAR(hilbert_seminorm(x), hilbert_seminorm(y), 1e-12 * hilbert_seminorm(x));
  EXPECT_THROW(hilbert_seminorm(std::vector<double>{1, 0}), Error);
}

TEST(MaxPlusDependence, Collinear) {
  const Matrix a{{1}, {3}, {0.5}};
  EXPECT_TRUE(is_linearly_dependent(std::vector<double>{2, 6, 1}, a));
}

TEST(MaxPlusDependence, NotDependent) {
  const Matrix a{{1}, {1}};
  // (A (b⁻A)⁻)⁻ b by hand: b⁻A = max(1, 0.1) = 1, so A·1 = (1,1) and the
  // value is max(1/1 * 1, 1/1 * 10) = 10.
  EXPECT_DOUBLE_EQ(dependence_value(std::span<const double>(std::vector<double>{1, 10}), a), 10.0);
  EXPECT_FALSE(is_linearly_dependent(std::vector<double>{1, 10}, a));
}

TEST(MaxPlusDependence, ExplicitCombinations) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(0.1, 5.0);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 1; m <= 6; ++m)
      for (int t = 0; t < 5; ++t) {
        const auto a = random_nonnegative(rng, n, m);
        std::vector<double> b(n, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
          const double u = coef(rng);
          for (std::size_t i = 0; i < n; ++i) b[i] = std::max(b[i], u * a(i, j));
        }
        EXPECT_TRUE(is_linearly_dependent(b, a)) << n << "x" << m;
        EXPECT_GE(dependence_value(std::span<const double>(b), a), 1.0 - 1e-12);
      }
}

TEST(MaxPlusDependence, RejectsEmptyColumns) {
  EXPECT_THROW(dependence_value(std::span<const double>(std::vector<double>{1, 2}), Matrix(2, 0)), DimensionMismatch);
}

TEST(MaxPlusMatrix, RaggedInitializerThrows) {
  EXPECT_THROW((Matrix{{1, 2}, {3}}), DimensionMismatch);
}
