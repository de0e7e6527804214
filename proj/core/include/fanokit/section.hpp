#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanokit/bounds.hpp"
#include "fanokit/family.hpp"

namespace fanokit {

/// Unknowns l_i_j of the ansatz p_i = sum_j l_i_j Psi_j, where i runs over
/// the Semple coordinates (y, then x_i_j row-major) and the Psi_j are the
/// degree-m monomials in u with u_{r+1}-exponent below deg(phi).
struct SectionSystem {
  std::size_t k = 0;
  unsigned m = 0;
  HypersurfaceFamily family;   // as given
  MonicChange change;          // makes phi monic in u_{r+1}
  HypersurfaceFamily working;  // family.transformed(change)
  std::vector<Monomial> basis_psi;
  Ring semple;                           // y, x_i_j
  std::vector<Polynomial> fano_forms;    // C(d+k, k) forms in (y, x_i_j, u) for the given family
  Ring lambda_ring;                      // l_i_j
  std::vector<Polynomial> raw_equations;  // nonzero, in lambda_ring
  SectionCounts counts;                  // the unreduced bookkeeping

  std::size_t coordinate_count() const { return semple.size(); }
  /// The section in the original base coordinates: p_i(u) for the given λ.
  std::vector<Polynomial> section(const std::vector<Scalar>& lambda) const;
  bool satisfied_by(const std::vector<Scalar>& lambda) const;
};

/// Requires m > deg(phi).
SectionSystem section_system(const HypersurfaceFamily& fam, std::size_t k, unsigned m);

struct SectionVerification {
  std::size_t prime_points_checked = 0;
  std::size_t prime_points_skipped = 0;
  std::size_t extension_points_checked = 0;
  std::size_t extension_points_skipped = 0;
  bool passed = true;
  std::string failure;
};

/// Checks that the k-plane of p(w) lies on X_w for every point w of the base
/// over F_p (through the Semple map and contains_plane) and over F_{p^2}.
/// Points where p(w) is zero or degenerate, or the fibre is degenerate, are
/// skipped.
SectionVerification verify_section(const SectionSystem& sys, const std::vector<Polynomial>& section,
                                   double budget = kDefaultBudget);

struct SectionSearchOptions {
  double budget = kDefaultBudget;
  bool random = false;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 100000;
};

struct SectionSearchResult {
  std::optional<std::vector<Scalar>> lambda;
  std::vector<Polynomial> section;
  SectionVerification verification;
  mpz_class work;  // p^lambda_count
  std::uint64_t candidates = 0;
};

/// Exhaustive search over nonzero λ in F_p^L in lexicographic order (last
/// coordinate fastest), or random sampling when options.random is set.
SectionSearchResult solve_section_brute(const SectionSystem& sys, const SectionSearchOptions& options = {});

}  // namespace fanokit
