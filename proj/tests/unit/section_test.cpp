#include <gtest/gtest.h>

#include "fanokit/combinatorics.hpp"
#include "fanokit/error.hpp"
#include "fanokit/section.hpp"

using namespace fanokit;

namespace {

using Key = HypersurfaceFamily::Key;

/// u0 * (x0 x1 - x2^2) + u1 * (x0 x2 - x1^2) over the line u2 = 0.
HypersurfaceFamily conic_pencil(const Field& f, const char* phi = "u2", const char* a = "u0", const char* b = "u1") {
  Ring u = base_ring(1, f);
  Polynomial pa = parse_polynomial(a, u), pb = parse_polynomial(b, u);
  std::map<Key, Polynomial> coeffs{{{0, 1}, pa}, {{2, 2}, -pa}, {{0, 2}, pb}, {{1, 1}, -pb}};
  return HypersurfaceFamily(BaseVariety(parse_polynomial(phi, u)), 2, 2, 1, coeffs);
}

/// Every F_p point of P^{r+1} (first nonzero coordinate 1) on the base.
std::vector<std::vector<Scalar>> base_points(const BaseVariety& base) {
  const Field& f = base.field();
  const std::size_t len = base.r() + 2;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t lead = 0; lead < len; ++lead) {
    const std::size_t free = len - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= f.modulus();
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Scalar> w(len, f.zero());
      w[lead] = f.one();
      std::uint64_t c = code;
      for (std::size_t i = lead + 1; i < len; ++i, c /= f.modulus()) w[i] = f.element(c % f.modulus());
      if (base.contains(w)) out.push_back(w);
    }
  }
  return out;
}

/// For k = 0 the Semple coordinates (y, x_1_2, ..., x_1_{n+1}) are the point
/// itself; checks f_w(p(w)) = 0 wherever p(w) and the fibre are nonzero.
std::size_t check_point_section(const SectionSystem& sys, const std::vector<Polynomial>& section) {
  std::size_t checked = 0;
  for (const auto& w : base_points(sys.family.base())) {
    std::vector<Scalar> point;
    for (const auto& pi : section) point.push_back(pi.evaluate(w));
    if (std::all_of(point.begin(), point.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
    Hypersurface total = sys.family.total();
    std::vector<Scalar> full = point;
    full.insert(full.end(), w.begin(), w.end());
    EXPECT_TRUE(total.form().evaluate(full).is_zero());
    ++checked;
  }
  return checked;
}

}  // namespace

TEST(SectionSystem, ToyCounts) {
  SectionSystem sys = section_system(conic_pencil(Field::prime(3)), 0, 2);
  EXPECT_EQ(sys.basis_psi.size(), 3u);
  EXPECT_EQ(sys.coordinate_count(), 3u);
  EXPECT_EQ(sys.lambda_ring.size(), 9u);
  EXPECT_EQ(sys.counts.basis_size, 3);
  EXPECT_EQ(sys.counts.lambda_count, 9);
  EXPECT_EQ(sys.counts.alpha_count, 15);
  EXPECT_EQ(sys.counts.equation_count, 21);
  EXPECT_TRUE(sys.counts.underdetermined);
  SectionCounts lemma = section_lemma_counts(2, 2, 1, 0, 2, 1, 1);
  EXPECT_EQ(sys.counts.lambda_count, lemma.lambda_count);
  EXPECT_EQ(sys.counts.alpha_count, lemma.alpha_count);
  EXPECT_EQ(sys.counts.equation_count, lemma.equation_count);
  EXPECT_THROW(section_system(conic_pencil(Field::prime(3)), 0, 1), PreconditionError);
}

TEST(SectionSystem, InvariantsAcrossDegrees) {
  for (const Field& f : {Field::prime(3), Field::rationals()}) {
    HypersurfaceFamily fam = conic_pencil(f);
    for (unsigned m = 2; m <= 4; ++m) {
      SectionSystem sys = section_system(fam, 0, m);
      const unsigned r = 1, mbar = 1;
      mpz_class big_m = binomial(static_cast<long>(m + r + 1), r + 1) - binomial(static_cast<long>(m - mbar + r + 1), r + 1);
      EXPECT_EQ(mpz_class(static_cast<unsigned long>(sys.basis_psi.size())), big_m);
      for (const auto& psi : sys.basis_psi) {
        EXPECT_EQ(total_degree(psi), m);
        EXPECT_LT(psi[r + 1], mbar);
      }
      EXPECT_EQ(sys.counts.lambda_count, mpz_class(3) * big_m);
      mpz_class bound = binomial(2, 0) * binomial(static_cast<long>(2 * m + 1 + r + 1), r + 1);
      EXPECT_LE(mpz_class(static_cast<unsigned long>(sys.raw_equations.size())), bound);
      std::vector<Scalar> zero(sys.lambda_ring.size(), f.zero());
      EXPECT_TRUE(sys.satisfied_by(zero));
      for (const auto& eq : sys.raw_equations) {
        ASSERT_FALSE(eq.is_zero());
        EXPECT_LE(*eq.total_degree(), 2u);
      }
    }
  }
}

TEST(SectionSystem, ToySearchFindsAVerifiedSection) {
  SectionSystem sys = section_system(conic_pencil(Field::prime(3)), 0, 2);
  SectionSearchResult res = solve_section_brute(sys);
  ASSERT_TRUE(res.lambda.has_value());
  EXPECT_TRUE(std::any_of(res.lambda->begin(), res.lambda->end(), [](const Scalar& s) { return !s.is_zero(); }));
  EXPECT_TRUE(sys.satisfied_by(*res.lambda));
  EXPECT_TRUE(res.verification.passed) << res.verification.failure;
  EXPECT_GT(res.verification.prime_points_checked, 0u);
  EXPECT_GT(res.verification.extension_points_checked, 0u);
  EXPECT_EQ(res.work, 19683);
  EXPECT_GT(check_point_section(sys, res.section), 0u);
  // Deterministic order: a rerun gives the same λ.
  EXPECT_EQ(solve_section_brute(sys).lambda, res.lambda);
}

TEST(SectionSystem, CoordinateChangeIsUndone) {
  // The base u0 = 0 is not monic in u2, so a shift is recorded and the
  // section is reported back in the original coordinates.
  SectionSystem sys = section_system(conic_pencil(Field::prime(3), "u0", "u1", "u2"), 0, 2);
  EXPECT_FALSE(sys.change.is_identity());
  SectionSearchResult res = solve_section_brute(sys);
  ASSERT_TRUE(res.lambda.has_value());
  EXPECT_TRUE(res.verification.passed) << res.verification.failure;
  EXPECT_GT(check_point_section(sys, res.section), 0u);
}

TEST(SectionSystem, VerificationRejectsAWrongSection) {
  SectionSystem sys = section_system(conic_pencil(Field::prime(3)), 0, 2);
  Ring u = sys.family.base().ring();
  // The constant point [0:1:0] lies on no fibre with u1 != 0.
  std::vector<Polynomial> bogus{Polynomial(u), parse_polynomial("u0^2 + u1^2", u), Polynomial(u)};
  SectionVerification v = verify_section(sys, bogus);
  EXPECT_FALSE(v.passed);
  EXPECT_FALSE(v.failure.empty());
}

TEST(SectionSystem, BudgetAndRandomMode) {
  SectionSystem sys = section_system(conic_pencil(Field::prime(3)), 0, 2);
  SectionSearchOptions tight;
  tight.budget = 100;
  EXPECT_THROW(solve_section_brute(sys, tight), BudgetExceeded);
  SectionSearchOptions random;
  random.budget = 20000;
  random.random = true;
  random.seed = 5;
  random.iterations = 20000;
  SectionSearchResult a = solve_section_brute(sys, random);
  SectionSearchResult b = solve_section_brute(sys, random);
  ASSERT_TRUE(a.lambda.has_value());
  EXPECT_EQ(a.lambda, b.lambda);
  EXPECT_TRUE(a.verification.passed);
  random.iterations = 30000;
  EXPECT_THROW(solve_section_brute(sys, random), BudgetExceeded);
  EXPECT_THROW(solve_section_brute(section_system(conic_pencil(Field::rationals()), 0, 2)), PreconditionError);
}
