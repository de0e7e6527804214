#include <gtest/gtest.h>

#include <random>

#include "fanokit/combinatorics.hpp"
#include "fanokit/error.hpp"
#include "fanokit/semple.hpp"
#include "oracles.hpp"

using namespace fanokit;

namespace {

SempleChartPoint random_chart_point(const Field& f, std::size_t k, std::size_t n, std::mt19937& rng) {
  SempleChartPoint c{f.one(), oracle::random_matrix(f, k + 1, n - k, rng)};
  return c;
}

/// Signed polynomial determinant by permutation expansion.
Polynomial leibniz_poly_det(const std::vector<std::vector<Polynomial>>& m, const Ring& ring) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial total(ring);
  do {
    Polynomial term = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    if (permutation_sign(perm) < 0) term = -term;
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix rank_one(const Field& f, std::size_t rows, std::size_t cols, std::mt19937& rng) {
  while (true) {
    Matrix u = oracle::random_matrix(f, rows, 1, rng), v = oracle::random_matrix(f, 1, cols, rng);
    Matrix x = u * v;
    if (!x.is_zero()) return x;
  }
}

Matrix sum(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

}  // namespace

TEST(Semple, OriginMapsToLeadingCoordinate) {
  Field q = Field::rationals();
  for (std::size_t k = 0; k <= 2; ++k) {
    std::size_t n = 2 * k + 1;
    PluckerPoint p = semple_map({q.one(), Matrix(q, k + 1, n - k)});
    EXPECT_TRUE(p.coords()[0].is_one());
    for (std::size_t i = 1; i < p.coords().size(); ++i) EXPECT_TRUE(p.coords()[i].is_zero());
  }
}

TEST(Semple, HyperplaneMapsIntoOppositeGrassmannian) {
  Field q = Field::rationals();
  std::mt19937 rng(41);
  for (std::size_t k = 1; k <= 2; ++k) {
    std::size_t n = 2 * k + 1;
    Matrix x = oracle::random_matrix(q, k + 1, n - k, rng);
    ASSERT_EQ(rank(x), k + 1);
    PluckerPoint p = semple_map({q.zero(), x});
    auto indices = all_multi_indices(k + 1, n);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      bool inside = indices[i].indices().front() >= k + 2;
      if (!inside) EXPECT_TRUE(p.coords()[i].is_zero()) << indices[i].to_string();
    }
  }
}

TEST(Semple, RankOneHyperplanePointsAreIndeterminate) {
  // Every y = 0, rank-1 x over F_3 with k = 1, n = 3.
  Field f = Field::prime(3);
  std::size_t rank_one_count = 0;
  for (std::uint64_t code = 1; code < 81; ++code) {
    Matrix x(f, 2, 2);
    std::uint64_t c = code;
    for (std::size_t e = 0; e < 4; ++e, c /= 3) x(e / 2, e % 2) = f.element(c % 3);
    if (rank(x) != 1) continue;
    ++rank_one_count;
    EXPECT_THROW(semple_map({f.zero(), x}), PreconditionError);
  }
  EXPECT_EQ(rank_one_count, 32u);  // (3^2 - 1)^2 / (3 - 1)
}

TEST(Semple, InverseSignMatchesMinorExpansion) {
  Field q = Field::rationals();
  for (std::size_t k = 0; k <= 4; ++k) {
    std::size_t n = 2 * k + 1;
    for (std::size_t i = 1; i <= k + 1; ++i) {
      // [I | E] with a single 1 at row i of the first x column: the minor on
      // I(i -> k+2) is the sign relating x_{i,k+2} to that coordinate.
      Matrix m = Matrix::identity(q, k + 1);
      Matrix e(q, k + 1, n - k);
      e(i - 1, 0) = q.one();
      Matrix frame = Matrix::hstack(m, e);
      std::vector<std::size_t> cols;
      for (std::size_t c = 1; c <= k + 1; ++c)
        if (c != i) cols.push_back(c - 1);
      cols.push_back(k + 1);
      std::vector<std::size_t> rows(k + 1);
      std::iota(rows.begin(), rows.end(), 0);
      Scalar minor = oracle::leibniz_det(frame.select(rows, cols));
      EXPECT_EQ(minor, q.from_int(inverse_projection_sign(k, i))) << k << " " << i;
    }
  }
}

TEST(Semple, RoundTripOverRationals) {
  std::mt19937 rng(42);
  Field q = Field::rationals();
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t k = trial % 3, n = 2 * k + 1 + trial % 2;
    SempleChartPoint c = random_chart_point(q, k, n, rng);
    PluckerPoint p = semple_map(c);
    EXPECT_TRUE(inverse_projection(p).same_point(c));
    EXPECT_EQ(chart_normalize(p, MultiIndex::leading(k + 1, n)), c.x);
    // Scaling the chart point does not move the image.
    SempleChartPoint scaled{q.from_int(3), c.x.scaled(q.from_int(3))};
    EXPECT_EQ(semple_map(scaled), p);
  }
}

TEST(Semple, InverseProjectionExamples) {
  Field q = Field::rationals();
  PluckerPoint lead = semple_map({q.one(), Matrix(q, 2, 2)});
  SempleChartPoint back = inverse_projection(lead);
  EXPECT_TRUE(back.y.is_one());
  EXPECT_TRUE(back.x.is_zero());
  PluckerPoint far = plucker_from_matrix(PlaneFrame(Matrix::from_ints(q, {{0, 0, 1, 0}, {0, 0, 0, 1}})));
  EXPECT_THROW(inverse_projection(far), PreconditionError);
}

TEST(Semple, StandingAssumption) {
  Field q = Field::rationals();
  EXPECT_THROW(basis_d_kn(1, 2, q), PreconditionError);
  EXPECT_THROW(semple_map({q.one(), Matrix(q, 2, 1)}), PreconditionError);
  EXPECT_NO_THROW(basis_d_kn(1, 3, q));
}

TEST(DknBasis, SmallExamples) {
  Field q = Field::rationals();
  auto b13 = basis_d_kn(1, 3, q);
  ASSERT_EQ(b13.size(), 6u);
  Ring r = semple_ring(1, 3, q);
  EXPECT_EQ(r.names(), (std::vector<std::string>{"y", "x_1_3", "x_1_4", "x_2_3", "x_2_4"}));
  EXPECT_EQ(b13[0], parse_polynomial("y^2", r));
  EXPECT_EQ(b13[5], parse_polynomial("x_1_3*x_2_4 - x_1_4*x_2_3", r));
  for (std::size_t i = 1; i <= 4; ++i) {
    EXPECT_EQ(b13[i].term_count(), 1u);
    EXPECT_EQ(b13[i].total_degree(), 2u);
    EXPECT_EQ(b13[i].terms().begin()->first[0], 1u);
  }
  EXPECT_EQ(basis_d_kn(2, 5, q).size(), 20u);
}

TEST(DknBasis, FormsAreSignedMinorsTimesPowersOfY) {
  Field q = Field::rationals();
  for (std::size_t k = 0; k <= 2; ++k) {
    for (std::size_t n = 2 * k + 1; n <= 2 * k + 2; ++n) {
      Ring r = semple_ring(k, n, q);
      auto basis = basis_d_kn(k, n, q);
      auto indices = all_multi_indices(k + 1, n);
      ASSERT_EQ(basis.size(), indices.size());
      Polynomial y = Polynomial::variable(r, "y");
      for (std::size_t t = 0; t < indices.size(); ++t) {
        std::vector<std::size_t> missing_rows, x_cols;
        for (std::size_t i = 1; i <= k + 1; ++i)
          if (!indices[t].contains(i)) missing_rows.push_back(i);
        for (std::size_t j : indices[t].indices())
          if (j > k + 1) x_cols.push_back(j);
        ASSERT_EQ(missing_rows.size(), x_cols.size());
        std::vector<std::vector<Polynomial>> block;
        for (std::size_t i : missing_rows) {
          block.emplace_back();
          for (std::size_t j : x_cols)
            block.back().push_back(Polynomial::variable(r, "x_" + std::to_string(i) + "_" + std::to_string(j)));
        }
        Polynomial expected = y.pow(static_cast<unsigned>(k + 1 - missing_rows.size())) *
                              (block.empty() ? Polynomial::constant(r, 1) : leibniz_poly_det(block, r));
        EXPECT_TRUE(basis[t] == expected || basis[t] == -expected) << indices[t].to_string();
        EXPECT_EQ(is_homogeneous(basis[t]), k + 1);
      }
    }
  }
}

TEST(DknBasis, EvaluatesToTheSempleMinors) {
  std::mt19937 rng(43);
  for (const Field& f : {Field::rationals(), Field::prime(11)}) {
    for (std::size_t k = 0; k <= 2; ++k) {
      std::size_t n = 2 * k + 2;
      auto basis = basis_d_kn(k, n, f);
      for (int trial = 0; trial < 10; ++trial) {
        SempleChartPoint c{oracle::random_scalar(f, rng), oracle::random_matrix(f, k + 1, n - k, rng)};
        auto coords = c.coordinates();
        auto minors = oracle::leibniz_minors(semple_matrix(c));
        for (std::size_t t = 0; t < basis.size(); ++t) EXPECT_EQ(basis[t].evaluate(coords), minors[t]);
      }
    }
  }
}

TEST(DknBasis, MinorCountsSumToN) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t k = 0; k < n; ++k) {
      mpz_class sum = 0;
      for (std::size_t r = 1; r <= k + 1; ++r) sum += minor_count(k, n, r);
      EXPECT_EQ(sum, binomial(static_cast<long>(n + 1), k + 1) - 1) << k << " " << n;
    }
  }
}

TEST(Stratum, Examples) {
  std::mt19937 rng(44);
  Field q = Field::rationals();
  EXPECT_EQ(secant_stratum(rank_one(q, 3, 3, rng)), 2u);
  Matrix generic = oracle::random_matrix(q, 3, 3, rng);
  ASSERT_FALSE(det(generic).is_zero());
  EXPECT_EQ(secant_stratum(generic), 0u);
  Matrix two = sum(rank_one(q, 3, 3, rng), rank_one(q, 3, 3, rng));
  ASSERT_EQ(rank(two), 2u);
  EXPECT_EQ(secant_stratum(two), 1u);
  EXPECT_THROW(secant_stratum(Matrix(q, 3, 3)), PreconditionError);
}

TEST(VanishingOrder, Examples) {
  std::mt19937 rng(45);
  Field q = Field::rationals();
  for (std::size_t k = 1; k <= 2; ++k) {
    std::size_t n = 2 * k + 1;
    Ring r = semple_ring(k, n, q);
    SempleChartPoint seg{q.zero(), rank_one(q, k + 1, n - k, rng)};
    EXPECT_EQ(vanishing_order_at(Polynomial::variable(r, "y").pow(static_cast<unsigned>(k + 1)), seg), k + 1);
    EXPECT_EQ(vanishing_order_at(Polynomial(r), seg), kInfiniteOrder);
  }
  Ring r = semple_ring(1, 3, q);
  SempleChartPoint seg{q.zero(), Matrix::from_ints(q, {{1, 2}, {3, 6}})};
  EXPECT_EQ(vanishing_order_at(parse_polynomial("y*x_1_3", r), seg), 1u);
  EXPECT_EQ(vanishing_order_at(parse_polynomial("x_1_3", r), seg), 0u);
  EXPECT_THROW(vanishing_order_at(parse_polynomial("y", r), {q.zero(), Matrix::identity(q, 2)}), PreconditionError);
}

TEST(VanishingOrder, BasisFormsVanishToOrderK) {
  std::mt19937 rng(46);
  Field q = Field::rationals();
  for (std::size_t k = 1; k <= 2; ++k) {
    std::size_t n = 2 * k + 1;
    auto basis = basis_d_kn(k, n, q);
    for (int trial = 0; trial < 5; ++trial) {
      SempleChartPoint seg{q.zero(), rank_one(q, k + 1, n - k, rng)};
      for (const auto& form : basis) EXPECT_GE(vanishing_order_at(form, seg), k);
    }
  }
}
