#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace fanokit {

/// k(2) = 0, k(d) = C(k(d-1) + d - 1, d - 1).
mpz_class predonzan_k(unsigned d);

enum class MorinVariant { paper, expected_dimension };

std::string to_string(MorinVariant v);
/// Parses "paper" or "expected_dimension".
MorinVariant parse_morin_variant(const std::string& text);

/// The rational right-hand side of Morin's bound n >= threshold: 2k+1 for
/// quadrics with k >= 2, otherwise C(k+d, d)/(k+1) ("paper"); or
/// k + C(k+d, d)/(k+1) ("expected_dimension").
mpq_class morin_rhs(unsigned d, const mpz_class& k, MorinVariant variant);
mpz_class morin_threshold(unsigned d, const mpz_class& k, MorinVariant variant);

/// k + (C(d+k, k) d^r - 1)/(k+1); planes exist in the family when n exceeds it.
mpq_class family_plane_rhs(unsigned d, unsigned r, const mpz_class& k);
mpz_class family_plane_bound(unsigned d, unsigned r, const mpz_class& k);

/// C(k+d, d)/(k+1) + k + t + 1 with k = k(d); t = -1 means smooth.
mpq_class predonzan_unirationality_rhs(unsigned d, long t);
mpz_class predonzan_unirationality_bound(unsigned d, long t);

/// family_plane_rhs(d, r, k(d)) + t + 1, strict.
mpq_class family_unirationality_rhs(unsigned d, unsigned r, long t);
mpz_class family_unirationality_bound(unsigned d, unsigned r, long t);

struct SectionCounts {
  mpz_class basis_size;  // M
  mpz_class lambda_count;
  mpz_class alpha_count;
  mpz_class equation_count;
  bool underdetermined = false;  // lambda + alpha > equations

  mpz_class surplus() const { return lambda_count + alpha_count - equation_count; }
};

SectionCounts section_lemma_counts(const mpz_class& n, unsigned d, unsigned r, const mpz_class& k,
                                   const mpz_class& m, const mpz_class& mbar, const mpz_class& mu);

/// The counting surplus lambda + alpha - equations as a polynomial in m,
/// coefficients lowest degree first. Exact for m >= mbar.
std::vector<mpq_class> surplus_polynomial(const mpz_class& n, unsigned d, unsigned r, const mpz_class& k,
                                          const mpz_class& mbar, const mpz_class& mu);

struct LeadingCoefficient {
  mpz_class value;  // (k+1)(n-k) + 1 - C(d+k, k) d^r
  bool positive = false;
  bool symbolic_checked = false;   // expansion carried out (r <= 8)
  bool top_coefficient_zero = false;
  bool next_coefficient_matches = false;
};

/// Evaluates the leading value and confirms it by expanding the surplus
/// symbolically in m and mu.
LeadingCoefficient leading_coefficient_check(const mpz_class& n, unsigned d, unsigned r, const mpz_class& k,
                                             const mpz_class& mbar);

struct MinimalM {
  std::optional<mpz_class> m;
  mpz_class cap;
  std::optional<mpz_class> crossover;  // surplus > 0 for all m >= crossover
  mpz_class leading_value;
};

/// First m > mbar with a positive surplus, scanning up to `cap` (default
/// mbar + 512, raised to the crossover when the leading value is positive).
/// Throws PreconditionError if an explicit cap is exhausted although the
/// leading value is positive.
MinimalM minimal_m(const mpz_class& n, unsigned d, unsigned r, const mpz_class& k, const mpz_class& mbar,
                   const mpz_class& mu, std::optional<mpz_class> cap = std::nullopt);

mpz_class roth_degree(const mpz_class& a, const mpz_class& b);

using WitnessValue = std::variant<mpz_class, mpq_class, bool, std::string>;

struct BoundCertificate {
  std::string name;
  std::vector<std::pair<std::string, mpz_class>> inputs;
  mpq_class threshold;
  bool satisfied = false;
  std::vector<std::pair<std::string, WitnessValue>> witness;
  std::string reference;
};

BoundCertificate predonzan_k_certificate(unsigned d, const mpz_class& k);
BoundCertificate morin_certificate(const mpz_class& n, unsigned d, const mpz_class& k, MorinVariant variant);
BoundCertificate family_plane_certificate(const mpz_class& n, unsigned d, unsigned r, const mpz_class& k);
BoundCertificate predonzan_unirationality_certificate(const mpz_class& n, unsigned d, long t);
BoundCertificate family_unirationality_certificate(const mpz_class& n, unsigned d, unsigned r, long t);
BoundCertificate section_lemma_certificate(const mpz_class& n, unsigned d, unsigned r, const mpz_class& k,
                                           const mpz_class& mbar, const mpz_class& mu,
                                           std::optional<mpz_class> cap = std::nullopt);
BoundCertificate roth_certificate(const mpz_class& a, const mpz_class& b, bool base_unirational,
                                  bool fibers_unirational);

struct CertifyInputs {
  unsigned d = 3;
  unsigned r = 0;
  long t = -1;
  std::optional<mpz_class> n;  // default: family_unirationality_bound(d, r, t)
  std::optional<mpz_class> k;  // default: k(d)
  mpz_class mbar = 1;
  mpz_class mu = 1;
  mpz_class base_degree = 1;
  mpz_class fiber_degree = 1;
  MorinVariant variant = MorinVariant::paper;
  std::optional<mpz_class> m_cap;
};

struct CertificateBundle {
  std::vector<std::pair<std::string, mpz_class>> resolved;  // inputs after defaults
  std::vector<std::pair<std::string, mpz_class>> bounds;    // the minimal n of each theorem
  std::vector<std::string> notes;
  std::vector<BoundCertificate> certificates;
};

CertificateBundle certify(const CertifyInputs& in);

}  // namespace fanokit
