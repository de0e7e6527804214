#include <gtest/gtest.h>

#include <random>

#include "fanokit/error.hpp"
#include "fanokit/osculating.hpp"
#include "fanokit/semple.hpp"
#include "oracles.hpp"

using namespace fanokit;

namespace {

Matrix random_full_rank(const Field& f, std::size_t rows, std::size_t cols, std::mt19937& rng, int spread = 3) {
  while (true) {
    Matrix m = oracle::random_matrix(f, rows, cols, rng, spread);
    if (rank(m) == rows) return m;
  }
}

}  // namespace

TEST(Osculating, DimensionExamples) {
  EXPECT_EQ(osculating_dimension(1, 3, 1), 4u);
  EXPECT_EQ(osculating_dimension(2, 5, 1), 9u);
  EXPECT_EQ(osculating_dimension(2, 5, 2), 18u);
  EXPECT_THROW(osculating_dimension(2, 5, 0), PreconditionError);
  EXPECT_THROW(osculating_dimension(2, 5, 3), PreconditionError);
  EXPECT_THROW(osculating_dimension(2, 4, 1), PreconditionError);
}

TEST(Osculating, TopDimensionMissesOnlyTheLargestMinors) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = 2 * k + 1; n <= 2 * k + 4; ++n) {
      mpz_class expected = binomial(static_cast<long>(n + 1), k + 1) - 1 - minor_count(k, n, k + 1);
      EXPECT_EQ(mpz_class(static_cast<unsigned long>(osculating_dimension(k, n, k))), expected);
    }
  }
}

TEST(Osculating, EmpiricalRankSmallCases) {
  EXPECT_EQ(osculating_rank_empirical(1, 3, 1), 4u);
  EXPECT_EQ(osculating_rank_empirical(2, 5, 1), 9u);
  EXPECT_EQ(osculating_rank_empirical(2, 5, 2), 18u);
  for (std::size_t k = 1; k <= 2; ++k)
    for (std::size_t n = 2 * k + 1; n <= 6; ++n)
      for (std::size_t r = 1; r <= k; ++r) EXPECT_EQ(osculating_rank_empirical(k, n, r), osculating_dimension(k, n, r));
}

TEST(OsculatingHyperplane, PairingIsTheStackedDeterminant) {
  std::mt19937 rng(51);
  int meeting = 0;
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t k = trial % 3, n = 2 * k + 1 + trial % 2;
      Matrix pi = random_full_rank(f, n - k, n + 1, rng, 1);
      Matrix lam = random_full_rank(f, k + 1, n + 1, rng, 1);
      DualHyperplane h = osculating_hyperplane(PlaneFrame(pi));
      Scalar value = pair(h, oracle::leibniz_minors(lam));
      EXPECT_EQ(value, oracle::leibniz_det(Matrix::vstack(pi, lam)));
      bool meets = intersection_dim(PlaneFrame(pi), PlaneFrame(lam)) >= 0;
      meeting += meets ? 1 : 0;
      EXPECT_EQ(value.is_zero(), meets);
      EXPECT_EQ(pair(h, plucker_from_matrix(PlaneFrame(lam))).is_zero(), meets);
    }
  }
  EXPECT_GT(meeting, 0);
}

TEST(OsculatingHyperplane, CoordinateCenter) {
  Field q = Field::rationals();
  for (std::size_t k = 0; k <= 2; ++k) {
    std::size_t n = 2 * k + 1;
    Matrix pi(q, n - k, n + 1);
    for (std::size_t i = 0; i < n - k; ++i) pi(i, k + 1 + i) = q.one();
    DualHyperplane h = osculating_hyperplane(PlaneFrame(pi));
    ASSERT_FALSE(h.coeffs[0].is_zero());
    for (std::size_t i = 1; i < h.coeffs.size(); ++i) EXPECT_TRUE(h.coeffs[i].is_zero());
  }
}

TEST(OsculatingHyperplane, SharedRowPairsToZero) {
  std::mt19937 rng(52);
  Field q = Field::rationals();
  for (int trial = 0; trial < 20; ++trial) {
    Matrix pi = random_full_rank(q, 3, 6, rng);
    Matrix lam = random_full_rank(q, 3, 6, rng);
    for (std::size_t j = 0; j < 6; ++j) lam(0, j) = pi(1, j);
    if (rank(lam) < 3) continue;
    EXPECT_TRUE(pair(osculating_hyperplane(PlaneFrame(pi)), plucker_from_matrix(PlaneFrame(lam))).is_zero());
  }
  EXPECT_THROW(osculating_hyperplane(PlaneFrame(Matrix::from_ints(q, {{1, 1, 0}, {2, 2, 0}}))), PreconditionError);
}

TEST(IntersectionDim, Examples) {
  Field q = Field::rationals();
  PlaneFrame a(Matrix::from_ints(q, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  PlaneFrame b(Matrix::from_ints(q, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  PlaneFrame c(Matrix::from_ints(q, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(intersection_dim(a, a), 1);
  EXPECT_EQ(intersection_dim(a, b), -1);
  EXPECT_EQ(intersection_dim(a, c), 0);
  EXPECT_THROW(intersection_dim(a, PlaneFrame(Matrix::from_ints(q, {{1, 0, 0}}))), DimensionError);
}
