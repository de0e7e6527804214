#include <gtest/gtest.h>

#include <random>

#include "fanokit/error.hpp"
#include "fanokit/field.hpp"
#include "oracles.hpp"

using namespace fanokit;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(Field, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), trial_division_prime(n)) << n;
  EXPECT_TRUE(is_prime(1000000007ULL));
  EXPECT_FALSE(is_prime(1000000007ULL * 3ULL));
}

TEST(Field, RejectsCompositeModulus) {
  EXPECT_THROW(Field::prime(1), PreconditionError);
  EXPECT_THROW(Field::prime(9), PreconditionError);
  EXPECT_NO_THROW(Field::prime(2));
}

TEST(Field, RationalsStayReduced) {
  Field q = Field::rationals();
  Scalar a = q.parse("6/8");
  EXPECT_EQ(a.to_string(), "3/4");
  EXPECT_EQ(q.parse(" -2/4 ").to_string(), "-1/2");
  EXPECT_EQ((q.parse("1/3") + q.parse("2/3")).to_string(), "1");
}

TEST(Field, ResiduesStayReduced) {
  Field f = Field::prime(5);
  EXPECT_EQ(f.from_int(-2).residue(), 3u);
  EXPECT_EQ(f.parse("1/2").residue(), 3u);
  EXPECT_EQ((f.from_int(4) * f.from_int(4)).residue(), 1u);
  EXPECT_THROW(f.parse("1/5"), PreconditionError);
}

TEST(Field, ParseErrorsCarryPositions) {
  Field q = Field::rationals();
  try {
    q.parse("12x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(q.parse(""), ParseError);
  EXPECT_THROW(q.parse("1/0"), ParseError);
  EXPECT_THROW(q.parse("3/"), ParseError);
}

TEST(Field, MixingFieldsThrows) {
  EXPECT_THROW(Field::prime(3).one() + Field::rationals().one(), PreconditionError);
  EXPECT_THROW(Field::prime(3).one() * Field::prime(5).one(), PreconditionError);
  EXPECT_THROW(Field::rationals().zero().inverse(), PreconditionError);
}

TEST(Field, AxiomsOnRandomTriples) {
  std::mt19937 rng(11);
  for (const Field& f : {Field::rationals(), Field::prime(7), Field::prime(1000003)}) {
    for (int trial = 0; trial < 300; ++trial) {
      Scalar a = oracle::random_scalar(f, rng), b = oracle::random_scalar(f, rng), c = oracle::random_scalar(f, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - a, f.zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_EQ(a.pow(3), a * a * a);
    }
  }
}

TEST(Field, FermatLittle) {
  Field f = Field::prime(13);
  for (std::uint64_t i = 1; i < 13; ++i) EXPECT_TRUE(f.element(i).pow(12).is_one());
}
