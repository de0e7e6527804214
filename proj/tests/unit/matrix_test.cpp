#include <gtest/gtest.h>

#include <random>

#include "fanokit/error.hpp"
#include "fanokit/matrix.hpp"
#include "oracles.hpp"

using namespace fanokit;

namespace {

std::vector<std::string> strings(const std::vector<Scalar>& v) { return oracle::key_of(v); }

}  // namespace

TEST(Matrix, DetExamples) {
  Field q = Field::rationals();
  EXPECT_TRUE(det(Matrix::identity(q, 2)).is_one());
  EXPECT_EQ(det(Matrix::from_ints(q, {{1, 2}, {3, 4}})).to_string(), "-2");
  EXPECT_EQ(det(Matrix::from_ints(Field::prime(5), {{1, 2}, {3, 4}})).residue(), 3u);
  EXPECT_THROW(det(Matrix(q, 2, 3)), DimensionError);
}

TEST(Matrix, DetMatchesLeibniz) {
  std::mt19937 rng(3);
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(101)}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        Matrix m = oracle::random_matrix(f, n, n, rng);
        EXPECT_EQ(det(m), oracle::leibniz_det(m));
      }
    }
  }
}

TEST(Matrix, DetIsMultiplicative) {
  std::mt19937 rng(4);
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t n = 1 + trial % 5;
      Matrix a = oracle::random_matrix(f, n, n, rng), b = oracle::random_matrix(f, n, n, rng);
      EXPECT_EQ(det(a * b), det(a) * det(b));
    }
  }
}

TEST(Matrix, RankExamples) {
  Field q = Field::rationals();
  EXPECT_EQ(rank(Matrix(q, 3, 4)), 0u);
  Matrix u = Matrix::from_ints(q, {{1}, {2}, {-3}});
  Matrix v = Matrix::from_ints(q, {{4, 0, 5, 1}});
  EXPECT_EQ(rank(u * v), 1u);
  EXPECT_EQ(rank(Matrix::from_ints(q, {{1, 0}, {0, 1}, {1, 1}})), 2u);
}

TEST(Matrix, RankMatchesMinorOracleAndTranspose) {
  std::mt19937 rng(5);
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
      // Low-rank products make rank deficiency common.
      std::size_t inner = 1 + trial % 3;
      Matrix m = oracle::random_matrix(f, rows, inner, rng, 2) * oracle::random_matrix(f, inner, cols, rng, 2);
      std::size_t r = rank(m);
      EXPECT_EQ(r, oracle::minor_rank(m));
      EXPECT_EQ(r, rank(m.transpose()));
      std::vector<std::size_t> pivots;
      Matrix e = rref(m, &pivots);
      EXPECT_EQ(pivots.size(), r);
      std::size_t nonzero_rows = 0;
      for (std::size_t i = 0; i < e.rows(); ++i) {
        auto row = e.row(i);
        if (std::any_of(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); })) ++nonzero_rows;
      }
      EXPECT_EQ(nonzero_rows, r);
    }
  }
}

TEST(Matrix, MaximalMinorsExamples) {
  Field q = Field::rationals();
  EXPECT_EQ(strings(maximal_minors(Matrix::from_ints(q, {{1, 0, 0, 0}, {0, 1, 0, 0}}))),
            (std::vector<std::string>{"1", "0", "0", "0", "0", "0"}));
  EXPECT_EQ(strings(maximal_minors(Matrix::from_ints(q, {{1, 0, 1, 0}, {0, 1, 0, 1}}))),
            (std::vector<std::string>{"1", "0", "1", "-1", "0", "1"}));
  EXPECT_EQ(strings(maximal_minors(Matrix::from_ints(q, {{3, -1, 2}}))), (std::vector<std::string>{"3", "-1", "2"}));
  EXPECT_THROW(maximal_minors(Matrix(q, 3, 2)), DimensionError);
}

TEST(Matrix, MaximalMinorsScaleByDet) {
  std::mt19937 rng(6);
  Field q = Field::rationals();
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t k1 = 1 + trial % 3, n1 = k1 + 1 + trial % 3;
    Matrix m = oracle::random_matrix(q, k1, n1, rng);
    Matrix a = oracle::random_matrix(q, k1, k1, rng);
    auto lhs = maximal_minors(a * m);
    auto rhs = maximal_minors(m);
    EXPECT_EQ(lhs, oracle::leibniz_minors(a * m));
    Scalar d = det(a);
    for (std::size_t i = 0; i < rhs.size(); ++i) EXPECT_EQ(lhs[i], d * rhs[i]);
  }
}

TEST(Matrix, KernelExamples) {
  Field q = Field::rationals();
  EXPECT_TRUE(kernel_basis(Matrix::identity(q, 3)).empty());
  EXPECT_EQ(kernel_basis(Matrix(q, 2, 3)).size(), 3u);
  Matrix row = Matrix::from_ints(q, {{1, 1, 0}});
  auto ker = kernel_basis(row);
  ASSERT_EQ(ker.size(), 2u);
  for (const auto& v : ker) EXPECT_TRUE(multiply(row, v)[0].is_zero());
  EXPECT_EQ(rank(Matrix::from_rows(q, ker)), 2u);
}

TEST(Matrix, KernelIsNullSpace) {
  std::mt19937 rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t rows = 1 + trial % 4, cols = 2 + trial % 5;
      Matrix m = oracle::random_matrix(f, rows, 2, rng, 2) * oracle::random_matrix(f, 2, cols, rng, 2);
      auto ker = kernel_basis(m);
      EXPECT_EQ(ker.size(), cols - rank(m));
      for (const auto& v : ker)
        for (const auto& e : multiply(m, v)) EXPECT_TRUE(e.is_zero());
      if (!ker.empty()) EXPECT_EQ(rank(Matrix::from_rows(f, ker)), ker.size());
    }
  }
}

TEST(Matrix, RationalResultsArePivotIndependent) {
  Field q = Field::rationals();
  Matrix m = Matrix::from_ints(q, {{0, 2, 4}, {1, 1, 1}, {3, 0, 9}});
  std::vector<std::size_t> order{2, 0, 1};
  std::vector<std::size_t> all{0, 1, 2};
  Matrix permuted = m.select(order, all);
  EXPECT_EQ(det(permuted), det(m));  // even permutation
  EXPECT_EQ(rref(permuted), rref(m));
}
