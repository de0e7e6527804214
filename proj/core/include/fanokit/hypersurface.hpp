#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fanokit/grassmann.hpp"
#include "fanokit/poly_matrix.hpp"

namespace fanokit {

/// A hypersurface {f = 0} in P^n. The ring starts with the coordinates
/// x0..xn; any further variables are parameters (symbolic coefficients or
/// the base coordinates of a family) and f need only be homogeneous in x.
class Hypersurface {
 public:
  /// Throws PreconditionError if f is zero or not homogeneous in x.
  explicit Hypersurface(Polynomial form);
  static Hypersurface parse(const std::string& text, std::size_t n, const Field& field);

  std::size_t n() const noexcept { return n_; }
  unsigned d() const noexcept { return d_; }
  const Polynomial& form() const noexcept { return form_; }
  const Ring& ring() const noexcept { return form_.ring(); }
  const Field& field() const noexcept { return form_.ring().field(); }
  std::vector<std::string> coordinate_names() const;
  std::vector<std::string> parameter_names() const;

 private:
  Polynomial form_;
  std::size_t n_ = 0;
  unsigned d_ = 0;
};

Ring coordinate_ring(std::size_t n, const Field& field);

/// The general form of degree d in x0..xn, with one coefficient variable
/// alpha_<e0>_<e1>_..._<en> per monomial.
Hypersurface generic_hypersurface(std::size_t n, unsigned d, const Field& field);

/// f restricted to the plane, as a form of degree d in s0..sk.
Polynomial restrict_to_plane(const Hypersurface& h, const PlaneFrame& frame);

/// f(s . F) for a frame F with polynomial entries in `frame_ring`; the result
/// lives in s0..sk, then frame_ring's variables, then h's parameters.
Polynomial restrict_to_plane(const Hypersurface& h, const PolyMatrix& frame, const Ring& frame_ring);

/// Name of the chart variable in row i, column j (both 1-based).
std::string chart_variable(std::size_t i, std::size_t j);

struct FanoSystem {
  std::size_t k = 0;
  MultiIndex chart;
  Ring ring;  // chart variables, then parameters
  std::vector<std::string> chart_variables;  // row-major over the chart's complement
  std::vector<Monomial> s_monomials;         // label of each equation
  std::vector<Polynomial> equations;         // C(d+k, k) entries, zeros kept

  /// Evaluates every equation at the chart matrix `a`; only for systems
  /// without parameters.
  bool vanishes_at(const Matrix& a) const;
};

/// The coefficients of f restricted to the chart frame (identity on `chart`,
/// variables a_i_j elsewhere), one per s-monomial of degree d in descending
/// lexicographic order.
FanoSystem fano_equations(const Hypersurface& h, std::size_t k, const MultiIndex& chart);

/// The same coefficients for an arbitrary symbolic frame.
std::vector<Polynomial> fano_equations_on_frame(const Hypersurface& h, const PolyMatrix& frame,
                                                const Ring& frame_ring, std::vector<Monomial>* labels = nullptr);

bool contains_plane(const Hypersurface& h, const PluckerPoint& p);

inline constexpr double kDefaultBudget = 1e8;

/// p^{(k+1)(n-k)} C(n+1, k+1).
mpz_class enumeration_work(const Hypersurface& h, std::size_t k);

/// Every F_p-rational k-plane on h, each once, ordered by Schubert cell
/// (charts in lexicographic order) and then by cell coordinates.
std::vector<PluckerPoint> enumerate_planes(const Hypersurface& h, std::size_t k, double budget = kDefaultBudget);

enum class Smoothness { smooth, singular, inconclusive };

struct SmoothnessVerdict {
  Smoothness kind = Smoothness::inconclusive;
  std::optional<std::vector<Scalar>> witness;  // a singular point of h on the plane
  std::string reason;
};

std::string to_string(Smoothness s);

/// Decides whether h is smooth at every point of the plane p. Exact for
/// k <= 1 and for quadrics; for k >= 2 over F_p the rational points of the
/// plane are searched and the verdict is inconclusive if none is singular.
SmoothnessVerdict smooth_along_plane(const Hypersurface& h, const PluckerPoint& p,
                                     double budget = kDefaultBudget);

}  // namespace fanokit
