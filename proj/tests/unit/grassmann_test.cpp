#include <gtest/gtest.h>

#include <random>

#include "fanokit/error.hpp"
#include "fanokit/grassmann.hpp"
#include "oracles.hpp"

using namespace fanokit;

namespace {

Matrix random_full_rank(const Field& f, std::size_t rows, std::size_t cols, std::mt19937& rng) {
  while (true) {
    Matrix m = oracle::random_matrix(f, rows, cols, rng);
    if (oracle::minor_rank(m) == rows) return m;
  }
}

std::vector<std::string> strings(const std::vector<Scalar>& v) { return oracle::key_of(v); }

}  // namespace

TEST(MultiIndex, Basics) {
  MultiIndex i({1, 3}, 3);
  EXPECT_EQ(i.complement().indices(), (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(i.to_string(), "1,3");
  EXPECT_EQ(MultiIndex::parse("2,4", 3).lex_position(), 4u);
  EXPECT_THROW(MultiIndex({2, 2}, 3), PreconditionError);
  EXPECT_THROW(MultiIndex({1, 5}, 3), PreconditionError);
  auto all = all_multi_indices(2, 3);
  ASSERT_EQ(all.size(), 6u);
  for (std::size_t p = 0; p < all.size(); ++p) EXPECT_EQ(all[p].lex_position(), p);
}

TEST(Plucker, Examples) {
  Field q = Field::rationals();
  PluckerPoint e = plucker_from_matrix(PlaneFrame(Matrix::from_ints(q, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
  EXPECT_EQ(strings(e.coords()), (std::vector<std::string>{"1", "0", "0", "0", "0", "0"}));
  PluckerPoint p = plucker_from_matrix(PlaneFrame(Matrix::from_ints(q, {{1, 0, 1, 0}, {0, 1, 0, 1}})));
  EXPECT_EQ(strings(p.coords()), (std::vector<std::string>{"1", "0", "1", "-1", "0", "1"}));
  EXPECT_THROW(PlaneFrame(Matrix::from_ints(q, {{1, 2, 3}, {2, 4, 6}})), PreconditionError);
}

TEST(Plucker, InvariantUnderLeftAction) {
  std::mt19937 rng(31);
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t k = trial % 3, n = k + 1 + trial % 4;
      Matrix m = random_full_rank(f, k + 1, n + 1, rng);
      Matrix a = random_full_rank(f, k + 1, k + 1, rng);
      PluckerPoint p = plucker_from_matrix(PlaneFrame(m));
      EXPECT_EQ(p, plucker_from_matrix(PlaneFrame(a * m)));
      EXPECT_EQ(p.coords(), oracle::scaled_to_first_one(oracle::leibniz_minors(m)));
    }
  }
}

TEST(Plucker, FromCoordinatesValidates) {
  Field q = Field::rationals();
  std::vector<Scalar> ok;
  for (int v : {1, 0, 1, -1, 0, 1}) ok.push_back(q.from_int(v));
  EXPECT_EQ(strings(PluckerPoint::from_coordinates(1, 3, ok).coords()), strings(ok));
  std::vector<Scalar> bad;
  for (int v : {1, 0, 0, 0, 0, 1}) bad.push_back(q.from_int(v));  // z12 z34 != 0, fails the relation
  EXPECT_THROW(PluckerPoint::from_coordinates(1, 3, bad), PreconditionError);
  EXPECT_THROW(PluckerPoint::from_coordinates(1, 3, std::vector<Scalar>(6, q.zero())), PreconditionError);
  EXPECT_THROW(PluckerPoint::from_coordinates(1, 3, std::vector<Scalar>(5, q.one())), Error);
}

TEST(Chart, Examples) {
  Field q = Field::rationals();
  Matrix a = Matrix::from_ints(q, {{2, -1}, {0, 3}});
  PluckerPoint p = plucker_from_matrix(frame_from_chart(a, MultiIndex::leading(2, 3)));
  EXPECT_EQ(chart_normalize(p, MultiIndex::leading(2, 3)), a);

  PluckerPoint ex = plucker_from_matrix(PlaneFrame(Matrix::from_ints(q, {{1, 0, 1, 0}, {0, 1, 0, 1}})));
  EXPECT_EQ(chart_normalize(ex, MultiIndex({1, 2}, 3)), Matrix::from_ints(q, {{1, 0}, {0, 1}}));
  EXPECT_THROW(chart_normalize(ex, MultiIndex({1, 3}, 3)), PreconditionError);
}

TEST(Chart, RoundTripOnEveryNonzeroChart) {
  std::mt19937 rng(32);
  for (const Field& f : {Field::rationals(), Field::prime(3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t k = trial % 3, n = k + 1 + trial % 3;
      PluckerPoint p = plucker_from_matrix(PlaneFrame(random_full_rank(f, k + 1, n + 1, rng)));
      for (const auto& chart : all_multi_indices(k + 1, n)) {
        if (p.at(chart).is_zero()) {
          EXPECT_THROW(chart_normalize(p, chart), PreconditionError);
          continue;
        }
        Matrix a = chart_normalize(p, chart);
        EXPECT_EQ(plucker_from_matrix(frame_from_chart(a, chart)), p);
      }
      EXPECT_EQ(plucker_from_matrix(frame_of(p)), p);
      MultiIndex lead = p.leading_index();
      EXPECT_FALSE(p.at(lead).is_zero());
      for (const auto& chart : all_multi_indices(k + 1, n)) {
        if (chart == lead) break;
        EXPECT_TRUE(p.at(chart).is_zero());
      }
    }
  }
}

TEST(Projective, NormalizeAndCompare) {
  Field q = Field::rationals();
  std::vector<Scalar> v{q.zero(), q.from_int(2), q.from_int(-4)};
  EXPECT_EQ(strings(normalize_projective(v)), (std::vector<std::string>{"0", "1", "-2"}));
  std::vector<Scalar> w{q.zero(), q.from_int(-1), q.from_int(2)};
  EXPECT_TRUE(projectively_equal(v, w));
  w[2] = q.from_int(3);
  EXPECT_FALSE(projectively_equal(v, w));
}

TEST(ProjectionChart, AvoidsEveryPoint) {
  std::mt19937 rng(33);
  Field q = Field::rationals();
  std::vector<PluckerPoint> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(plucker_from_matrix(PlaneFrame(random_full_rank(q, 2, 5, rng))));
  for (std::uint64_t seed : {0u, 1u, 7u}) {
    auto chart = choose_projection_chart(pts, seed);
    ASSERT_TRUE(chart.has_value());
    for (const auto& p : pts) EXPECT_FALSE(p.at(*chart).is_zero());
    EXPECT_EQ(chart, choose_projection_chart(pts, seed));
  }
  // Two complementary coordinate lines of P^3 share no nonzero chart.
  std::vector<PluckerPoint> clash{
      plucker_from_matrix(PlaneFrame(Matrix::from_ints(q, {{1, 0, 0, 0}, {0, 1, 0, 0}}))),
      plucker_from_matrix(PlaneFrame(Matrix::from_ints(q, {{0, 0, 1, 0}, {0, 0, 0, 1}})))};
  EXPECT_FALSE(choose_projection_chart(clash, 0).has_value());
}
