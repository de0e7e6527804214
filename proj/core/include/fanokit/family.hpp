#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "fanokit/hypersurface.hpp"

namespace fanokit {

/// Ring u0..u_{r+1}.
Ring base_ring(std::size_t r, const Field& field);

/// The base W = {phi = 0} in P^{r+1}.
class BaseVariety {
 public:
  /// phi must be a nonzero form in the ring u0..u_{r+1} (r >= 0).
  explicit BaseVariety(Polynomial phi);

  std::size_t r() const noexcept { return r_; }
  unsigned degree() const noexcept { return degree_; }
  const Polynomial& phi() const noexcept { return phi_; }
  const Ring& ring() const noexcept { return phi_.ring(); }
  const Field& field() const noexcept { return phi_.ring().field(); }
  bool contains(std::span<const Scalar> w) const;

 private:
  Polynomial phi_;
  std::size_t r_ = 0;
  unsigned degree_ = 0;
};

/// The linear change u_i -> u_i + shift_i u_{r+1} (i <= r) that makes phi
/// monic in u_{r+1}.
struct MonicChange {
  std::vector<Scalar> shift;
  Polynomial phi;  // transformed, leading coefficient in u_{r+1} scaled to 1

  bool is_identity() const;
  /// The substitution u -> T u on polynomials in the base ring.
  Polynomial forward(const Polynomial& p) const;
  /// The inverse substitution u -> T^{-1} u.
  Polynomial backward(const Polynomial& p) const;
};

/// Picks the first shift (odometer order over small values) with
/// phi(shift, 1) != 0. Throws PreconditionError if there is none.
MonicChange make_monic(const Polynomial& phi);

/// X_w = { sum a_{i1..id}(w) x_{i1}...x_{id} = 0 } over w in W.
class HypersurfaceFamily {
 public:
  /// Sorted exponent multiset (i1 <= ... <= id) with entries in 0..n.
  using Key = std::vector<std::size_t>;

  /// Coefficients live in the base ring and are forms of degree mu (or zero);
  /// not all may vanish modulo phi. Missing keys are zero.
  HypersurfaceFamily(BaseVariety base, std::size_t n, unsigned d, unsigned mu, std::map<Key, Polynomial> coeffs);

  const BaseVariety& base() const noexcept { return base_; }
  std::size_t n() const noexcept { return n_; }
  unsigned d() const noexcept { return d_; }
  unsigned mu() const noexcept { return mu_; }
  const std::map<Key, Polynomial>& coeffs() const noexcept { return coeffs_; }

  /// The total form in x0..xn, u0..u_{r+1}.
  Hypersurface total() const;
  /// The same family over the base transformed by `change`.
  HypersurfaceFamily transformed(const MonicChange& change) const;

 private:
  BaseVariety base_;
  std::size_t n_ = 0;
  unsigned d_ = 0;
  unsigned mu_ = 0;
  std::map<Key, Polynomial> coeffs_;
};

/// Monomial x_{i1}...x_{id} of a key as an exponent vector on x0..xn.
Monomial key_monomial(const HypersurfaceFamily::Key& key, std::size_t n);

/// Throws PreconditionError off the base or when every coefficient vanishes
/// at w.
Hypersurface fiber_at(const HypersurfaceFamily& fam, std::span<const Scalar> w);

/// fano_equations of the total form, with the u-variables as parameters.
FanoSystem relative_fano_equations(const HypersurfaceFamily& fam, std::size_t k, const MultiIndex& chart);

}  // namespace fanokit
