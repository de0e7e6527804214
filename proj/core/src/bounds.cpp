#include "fanokit/bounds.hpp"

#include <algorithm>

#include "fanokit/combinatorics.hpp"
#include "fanokit/error.hpp"
#include "fanokit/polynomial.hpp"

namespace fanokit {

namespace {

using Univariate = std::vector<mpq_class>;  // lowest degree first

mpz_class ceil_of(const mpq_class& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

mpz_class floor_of(const mpq_class& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

mpq_class ratio(const mpz_class& a, const mpz_class& b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

mpz_class power(unsigned base, unsigned e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

/// C(d + k, k) = C(d + k, d).
mpz_class plane_binomial(unsigned d, const mpz_class& k) { return binomial(k + d, d); }

mpz_class fano_count(const mpz_class& n, const mpz_class& k) { return (k + 1) * (n - k) + 1; }

void require_degree(unsigned d) {
  if (d < 2) throw PreconditionError("degree must be at least 2");
}

void require_nonnegative(const mpz_class& v, const char* name) {
  if (v < 0) throw PreconditionError(std::string(name) + " must be nonnegative");
}

void trim(Univariate& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Univariate multiply(const Univariate& a, const Univariate& b) {
  if (a.empty() || b.empty()) return {};
  Univariate out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Univariate add(Univariate a, const Univariate& b, const mpq_class& scale) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
  trim(a);
  return a;
}

/// C(a m + b + top, top) as a polynomial in m.
Univariate binomial_in_m(const mpz_class& a, const mpz_class& b, unsigned top) {
  Univariate out{mpq_class(1)};
  for (unsigned i = 1; i <= top; ++i) out = multiply(out, {mpq_class(b + i), mpq_class(a)});
  const mpq_class inv(mpz_class(1), factorial(top));
  for (auto& c : out) c *= inv;
  return out;
}

mpq_class evaluate(const Univariate& p, const mpz_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const Univariate& p, const mpz_class& x) { return sgn(evaluate(p, x)); }

Univariate derivative(const Univariate& p) {
  Univariate out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
  trim(out);
  return out;
}

/// Smallest z in (lo, hi] with pred(z), given pred(hi) and pred monotone.
template <typename Pred>
mpz_class first_true(mpz_class lo, mpz_class hi, Pred pred) {
  while (hi - lo > 1) {
    const mpz_class mid = lo + (hi - lo) / 2;
    if (pred(mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

/// Integer points lo = x_0 < ... < x_s = hi such that p is monotone on the
/// integers of every [x_i, x_{i+1}].
std::vector<mpz_class> monotone_points(const Univariate& p, const mpz_class& lo, const mpz_class& hi) {
  std::vector<mpz_class> out{lo};
  if (p.size() > 2 && hi - lo > 1) {
    const Univariate q = derivative(p);
    const auto pieces = monotone_points(q, lo, hi);
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
      mpz_class cur = pieces[i];
      const mpz_class end = pieces[i + 1];
      while (cur < end) {
        const int s = sign_at(q, cur);
        if (sign_at(q, end) == s) break;
        const mpz_class z = first_true(cur, end, [&](const mpz_class& x) { return sign_at(q, x) != s; });
        if (z - 1 > out.back()) out.push_back(z - 1);
        if (z > out.back()) out.push_back(z);
        cur = z;
      }
    }
  }
  if (hi > out.back()) out.push_back(hi);
  return out;
}

std::optional<mpz_class> first_positive(const Univariate& p, const mpz_class& lo, const mpz_class& hi) {
  if (hi < lo) return std::nullopt;
  const auto points = monotone_points(p, lo, hi);
  if (sign_at(p, points.front()) > 0) return points.front();
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (sign_at(p, points[i + 1]) > 0) {
      return first_true(points[i], points[i + 1], [&](const mpz_class& x) { return sign_at(p, x) > 0; });
    }
  }
  return std::nullopt;
}

std::optional<mpz_class> cauchy_crossover(const Univariate& p) {
  if (p.empty() || p.back() <= 0) return std::nullopt;
  mpq_class worst = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) worst = std::max(worst, mpq_class(abs(p[i] / p.back())));
  return floor_of(worst + 1) + 1;
}

}  // namespace

mpz_class predonzan_k(unsigned d) {
  require_degree(d);
  mpz_class k = 0;
  for (unsigned e = 3; e <= d; ++e) k = binomial(k + (e - 1), e - 1);
  return k;
}

std::string to_string(MorinVariant v) { return v == MorinVariant::paper ? "paper" : "expected_dimension"; }

MorinVariant parse_morin_variant(const std::string& text) {
  if (text == "paper") return MorinVariant::paper;
  if (text == "expected_dimension") return MorinVariant::expected_dimension;
  throw ParseError("unknown Morin variant '" + text + "'", 0);
}

mpq_class morin_rhs(unsigned d, const mpz_class& k, MorinVariant variant) {
  require_degree(d);
  if (k < 1) throw PreconditionError("Morin's bound needs k >= 1");
  const mpq_class base = ratio(binomial(k + d, d), k + 1);
  if (variant == MorinVariant::expected_dimension) return base + k;
  if (d == 2 && k >= 2) return mpq_class(2 * k + 1);
  return base;
}

mpz_class morin_threshold(unsigned d, const mpz_class& k, MorinVariant variant) {
  return ceil_of(morin_rhs(d, k, variant));
}

mpq_class family_plane_rhs(unsigned d, unsigned r, const mpz_class& k) {
  require_degree(d);
  require_nonnegative(k, "k");
  return k + ratio(plane_binomial(d, k) * power(d, r) - 1, k + 1);
}

mpz_class family_plane_bound(unsigned d, unsigned r, const mpz_class& k) {
  return floor_of(family_plane_rhs(d, r, k)) + 1;
}

mpq_class predonzan_unirationality_rhs(unsigned d, long t) {
  if (t < -1) throw PreconditionError("t must be at least -1");
  const mpz_class k = predonzan_k(d);
  return ratio(binomial(k + d, d), k + 1) + k + t + 1;
}

mpz_class predonzan_unirationality_bound(unsigned d, long t) { return ceil_of(predonzan_unirationality_rhs(d, t)); }

mpq_class family_unirationality_rhs(unsigned d, unsigned r, long t) {
  if (t < -1) throw PreconditionError("t must be at least -1");
  return family_plane_rhs(d, r, predonzan_k(d)) + t + 1;
}

mpz_class family_unirationality_bound(unsigned d, unsigned r, long t) {
  return floor_of(family_unirationality_rhs(d, r, t)) + 1;
}

SectionCounts section_lemma_counts(const mpz_class& n, unsigned d, unsigned r, const mpz_class& k,
                                   const mpz_class& m, const mpz_class& mbar, const mpz_class& mu) {
  require_degree(d);
  require_nonnegative(n, "n");
  require_nonnegative(k, "k");
  require_nonnegative(mu, "mu");
  if (mbar < 1) throw PreconditionError("the base degree must be at least 1");
  if (m <= mbar) throw PreconditionError("the ansatz degree m must exceed the base degree");
  const unsigned top = r + 1;
  SectionCounts c;
  c.basis_size = binomial(m + top, top) - binomial(m - mbar + top, top);
  c.lambda_count = fano_count(n, k) * c.basis_size;
  const mpz_class b = plane_binomial(d, k);
  c.alpha_count = b * binomial(d * m - mbar + mu + top, top);
  c.equation_count = b * binomial(d * m + mu + top, top);
  c.underdetermined = c.lambda_count + c.alpha_count > c.equation_count;
  return c;
}

std::vector<mpq_class> surplus_polynomial(const mpz_class& n, unsigned d, unsigned r, const mpz_class& k,
                                          const mpz_class& mbar, const mpz_class& mu) {
  const unsigned top = r + 1;
  const mpq_class lambda_factor(fano_count(n, k));
  const mpq_class b(plane_binomial(d, k));
  Univariate basis = add(binomial_in_m(1, 0, top), binomial_in_m(1, -mbar, top), -1);
  Univariate eq_gap = add(binomial_in_m(d, mu - mbar, top), binomial_in_m(d, mu, top), -1);
  return add(add({}, basis, lambda_factor), eq_gap, b);
}

LeadingCoefficient leading_coefficient_check(const mpz_class& n, unsigned d, unsigned r, const mpz_class& k,
                                             const mpz_class& mbar) {
  require_degree(d);
  LeadingCoefficient out;
  out.value = fano_count(n, k) - plane_binomial(d, k) * power(d, r);
  out.positive = out.value > 0;
  if (r > 8) return out;

  // Expand the surplus in Q[m, mu], keeping mu symbolic.
  const Field q = Field::rationals();
  const Ring ring(q, {"m", "mu"});
  const Polynomial m = Polynomial::variable(ring, 0);
  const Polynomial mu = Polynomial::variable(ring, 1);
  const unsigned top = r + 1;
  const auto binom = [&](const Polynomial& argument) {
    Polynomial out_poly = Polynomial::constant(ring, 1);
    for (unsigned i = 1; i <= top; ++i) out_poly *= argument + Polynomial::constant(ring, static_cast<long>(i));
    return out_poly * q.from_mpq(mpq_class(mpz_class(1), factorial(top)));
  };
  const Polynomial bar = Polynomial::constant(ring, q.from_mpz(mbar));
  const Polynomial dm = m * q.from_int(d);
  const Polynomial surplus = (binom(m) - binom(m - bar)) * q.from_mpz(fano_count(n, k)) +
                             (binom(dm - bar + mu) - binom(dm + mu)) * q.from_mpz(plane_binomial(d, k));
  Monomial e_top{top};
  Monomial e_next{r};
  const Polynomial top_coeff = coefficient_of(surplus, {"m"}, e_top);
  const Polynomial next_coeff = coefficient_of(surplus, {"m"}, e_next);
  const mpq_class expected = mpq_class(mbar, factorial(r)) * out.value;
  out.symbolic_checked = true;
  out.top_coefficient_zero = top_coeff.is_zero();
  out.next_coefficient_matches = next_coeff == Polynomial::constant(ring, q.from_mpq(expected));
  return out;
}

MinimalM minimal_m(const mpz_class& n, unsigned d, unsigned r, const mpz_class& k, const mpz_class& mbar,
                   const mpz_class& mu, std::optional<mpz_class> cap) {
  require_degree(d);
  if (mbar < 1) throw PreconditionError("the base degree must be at least 1");
  MinimalM out;
  out.leading_value = fano_count(n, k) - plane_binomial(d, k) * power(d, r);
  const Univariate p = surplus_polynomial(n, d, r, k, mbar, mu);
  out.crossover = cauchy_crossover(p);
  const bool explicit_cap = cap.has_value();
  out.cap = explicit_cap ? *cap : mbar + 512;
  if (!explicit_cap && out.crossover && *out.crossover > out.cap) out.cap = *out.crossover;
  out.m = first_positive(p, mbar + 1, out.cap);
  if (!out.m && out.leading_value > 0) {
    throw PreconditionError("minimal_m: cap " + out.cap.get_str() + " exhausted; raise it to at least " +
                            (out.crossover ? out.crossover->get_str() : std::string("the crossover")));
  }
  return out;
}

mpz_class roth_degree(const mpz_class& a, const mpz_class& b) {
  if (a < 1 || b < 1) throw PreconditionError("roth_degree: degrees must be at least 1");
  return a * b;
}

BoundCertificate predonzan_k_certificate(unsigned d, const mpz_class& k) {
  const mpz_class kd = predonzan_k(d);
  BoundCertificate c;
  c.name = "predonzan_plane_dimension";
  c.inputs = {{"d", mpz_class(d)}, {"k", k}};
  c.threshold = kd;
  c.satisfied = k >= kd;
  c.witness = {{"k_d", kd}, {"rounding", std::string("non-strict: k >= k(d)")}};
  c.reference = "Predonzan's recursion k(2) = 0, k(d) = C(k(d-1)+d-1, d-1)";
  return c;
}

BoundCertificate morin_certificate(const mpz_class& n, unsigned d, const mpz_class& k, MorinVariant variant) {
  const mpq_class rhs = morin_rhs(d, k, variant);
  BoundCertificate c;
  c.name = variant == MorinVariant::paper ? "morin_containment" : "morin_containment_expected_dimension";
  c.inputs = {{"n", n}, {"d", mpz_class(d)}, {"k", k}};
  c.threshold = rhs;
  c.satisfied = n >= rhs;
  c.witness = {{"variant", to_string(variant)},
               {"minimal_n", ceil_of(rhs)},
               {"rounding", std::string("non-strict: n >= threshold")},
               {"conclusion", std::string(c.satisfied ? "every hypersurface of degree d in P^n contains a k-plane"
                                                      : "no conclusion")}};
  c.reference = "Morin's theorem on k-planes contained in hypersurfaces";
  return c;
}

BoundCertificate family_plane_certificate(const mpz_class& n, unsigned d, unsigned r, const mpz_class& k) {
  const mpq_class rhs = family_plane_rhs(d, r, k);
  const LeadingCoefficient lead = leading_coefficient_check(n, d, r, k, 1);
  BoundCertificate c;
  c.name = "family_plane_condition";
  c.inputs = {{"n", n}, {"d", mpz_class(d)}, {"r", mpz_class(r)}, {"k", k}};
  c.threshold = rhs;
  c.satisfied = n > rhs;
  c.witness = {{"minimal_n", mpz_class(floor_of(rhs) + 1)},
               {"leading_value", lead.value},
               {"rounding", std::string("strict: n > threshold")},
               {"conclusion", std::string(c.satisfied ? "a family over an r-dimensional base has a rational section of "
                                                        "k-planes over a dense open subset"
                                                      : "no conclusion")}};
  c.reference = "section lemma condition n > k + (C(d+k,k) d^r - 1)/(k+1)";
  return c;
}

BoundCertificate predonzan_unirationality_certificate(const mpz_class& n, unsigned d, long t) {
  const mpq_class rhs = predonzan_unirationality_rhs(d, t);
  BoundCertificate c;
  c.name = "predonzan_unirationality";
  c.inputs = {{"n", n}, {"d", mpz_class(d)}, {"t", mpz_class(t)}};
  c.threshold = rhs;
  c.satisfied = n >= rhs;
  c.witness = {{"k_d", predonzan_k(d)},
               {"minimal_n", ceil_of(rhs)},
               {"rounding", std::string("non-strict: n >= threshold")},
               {"smooth_convention", std::string(t == -1 ? "t = -1 encodes an empty singular locus" : "not used")},
               {"conclusion", std::string(c.satisfied ? "a hypersurface of degree d in P^n with singular locus of "
                                                        "dimension t is unirational"
                                                      : "no conclusion")}};
  c.reference = "Predonzan's unirationality theorem for a single hypersurface";
  return c;
}

BoundCertificate family_unirationality_certificate(const mpz_class& n, unsigned d, unsigned r, long t) {
  const mpq_class rhs = family_unirationality_rhs(d, r, t);
  BoundCertificate c;
  c.name = "family_unirationality";
  c.inputs = {{"n", n}, {"d", mpz_class(d)}, {"r", mpz_class(r)}, {"t", mpz_class(t)}};
  c.threshold = rhs;
  c.satisfied = n > rhs;
  c.witness = {{"k_d", predonzan_k(d)},
               {"minimal_n", mpz_class(floor_of(rhs) + 1)},
               {"reduced_ambient", mpz_class(n - t - 1)},
               {"rounding", std::string("strict: n > threshold")},
               {"smooth_convention", std::string(t == -1 ? "t = -1 encodes an empty singular locus" : "not used")},
               {"hypotheses", std::string("the base is unirational of dimension r and the generic fibre is an "
                                          "irreducible hypersurface of degree d whose singular locus has dimension "
                                          "t; asserted, not checked")},
               {"conclusion", std::string(c.satisfied ? "then the total space of the family is unirational"
                                                      : "no conclusion")}};
  c.reference = "unirationality of families of hypersurfaces of low degree";
  return c;
}

BoundCertificate section_lemma_certificate(const mpz_class& n, unsigned d, unsigned r, const mpz_class& k,
                                           const mpz_class& mbar, const mpz_class& mu, std::optional<mpz_class> cap) {
  const LeadingCoefficient lead = leading_coefficient_check(n, d, r, k, mbar);
  BoundCertificate c;
  c.name = "section_lemma_counts";
  c.inputs = {{"n", n}, {"d", mpz_class(d)}, {"r", mpz_class(r)}, {"k", k}, {"mbar", mbar}, {"mu", mu}};
  c.threshold = 0;
  c.satisfied = lead.positive;
  c.witness = {{"leading_value", lead.value},
               {"rounding", std::string("strict: leading value > 0")},
               {"top_coefficient_zero", lead.top_coefficient_zero},
               {"next_coefficient_matches", lead.next_coefficient_matches}};
  if (n >= k) {
    const MinimalM mm = minimal_m(n, d, r, k, mbar, mu, cap);
    c.witness.emplace_back("m_cap", mm.cap);
    if (mm.crossover) c.witness.emplace_back("crossover", *mm.crossover);
    if (mm.m) {
      const SectionCounts counts = section_lemma_counts(n, d, r, k, *mm.m, mbar, mu);
      c.witness.emplace_back("minimal_m", *mm.m);
      c.witness.emplace_back("basis_size", counts.basis_size);
      c.witness.emplace_back("lambda_count", counts.lambda_count);
      c.witness.emplace_back("alpha_count", counts.alpha_count);
      c.witness.emplace_back("equation_count", counts.equation_count);
      c.witness.emplace_back("surplus", counts.surplus());
    } else {
      c.witness.emplace_back("minimal_m", std::string("none up to the cap"));
    }
  } else {
    c.witness.emplace_back("minimal_m", std::string("not applicable: n < k"));
  }
  c.reference = "section lemma: more unknowns than equations for m large";
  return c;
}

BoundCertificate roth_certificate(const mpz_class& a, const mpz_class& b, bool base_unirational,
                                  bool fibers_unirational) {
  const mpz_class degree = roth_degree(a, b);
  BoundCertificate c;
  c.name = "roth_chaining";
  c.inputs = {{"base_degree", a}, {"fiber_degree", b}};
  c.threshold = 1;
  c.satisfied = base_unirational && fibers_unirational;
  c.witness = {{"degree", degree},
               {"base_unirational", base_unirational},
               {"fibers_unirational", fibers_unirational},
               {"rational_when_degrees_are_one", degree == 1}};
  c.reference = "Roth's criterion: unirational base and fibres give a unirational total space of degree a*b";
  return c;
}

CertificateBundle certify(const CertifyInputs& in) {
  require_degree(in.d);
  if (in.t < -1) throw PreconditionError("t must be at least -1");
  const mpz_class kd = predonzan_k(in.d);
  const mpz_class k = in.k.value_or(kd);
  const mpz_class n = in.n.value_or(family_unirationality_bound(in.d, in.r, in.t));
  CertificateBundle out;
  out.resolved = {{"n", n},   {"d", mpz_class(in.d)}, {"r", mpz_class(in.r)},       {"t", mpz_class(in.t)},
                  {"k", k},   {"mbar", in.mbar},      {"mu", in.mu},                 {"base_degree", in.base_degree},
                  {"fiber_degree", in.fiber_degree}};
  out.bounds = {{"k_d", kd},
                {"family_unirationality_bound", family_unirationality_bound(in.d, in.r, in.t)},
                {"predonzan_unirationality_bound", predonzan_unirationality_bound(in.d, in.t)},
                {"family_plane_bound", family_plane_bound(in.d, in.r, k)}};
  if (k >= 1) out.bounds.emplace_back("morin_threshold", morin_threshold(in.d, k, in.variant));
  if (!in.n) out.notes.push_back("n defaults to the smallest value satisfying the family unirationality bound");
  if (!in.k) out.notes.push_back("k defaults to k(d)");
  if (in.t == -1) out.notes.push_back("t = -1 encodes smooth fibres (empty singular locus)");
  out.notes.push_back("the section lemma counts are evaluated in the reduced ambient space of dimension n - t - 1");

  out.certificates.push_back(predonzan_k_certificate(in.d, k));
  if (k >= 1) out.certificates.push_back(morin_certificate(n, in.d, k, in.variant));
  out.certificates.push_back(family_plane_certificate(n, in.d, in.r, k));
  out.certificates.push_back(predonzan_unirationality_certificate(n, in.d, in.t));
  const BoundCertificate family = family_unirationality_certificate(n, in.d, in.r, in.t);
  out.certificates.push_back(family);
  out.certificates.push_back(section_lemma_certificate(n - in.t - 1, in.d, in.r, kd, in.mbar, in.mu, in.m_cap));
  out.certificates.push_back(roth_certificate(in.base_degree, in.fiber_degree, true, family.satisfied));
  return out;
}

}  // namespace fanokit
