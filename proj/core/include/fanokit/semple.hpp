#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "fanokit/grassmann.hpp"
#include "fanokit/polynomial.hpp"

namespace fanokit {

/// A point [y : x_{1,k+2} : ... : x_{k+1,n+1}] of P^M(k,n), M = (k+1)(n-k).
/// Rows of `x` are i = 1..k+1, columns are j = k+2..n+1.
struct SempleChartPoint {
  Scalar y;
  Matrix x;

  std::size_t k() const { return x.rows() - 1; }
  std::size_t n() const { return x.cols() + x.rows() - 1; }
  /// (y, x row-major).
  std::vector<Scalar> coordinates() const;
  static SempleChartPoint from_coordinates(std::size_t k, std::size_t n, const std::vector<Scalar>& coords);
  /// Equality as projective points.
  bool same_point(const SempleChartPoint& other) const;
};

/// Ring with variables y, x_1_{k+2}, ..., x_{k+1}_{n+1} (row-major).
Ring semple_ring(std::size_t k, std::size_t n, const Field& field);

/// The (k+1) x (n+1) matrix [y*I | x] whose maximal minors define the map.
Matrix semple_matrix(const SempleChartPoint& c);

/// The image of c: maximal minors of [y*I | x]. Requires 2k < n. Throws
/// PreconditionError when [y*I | x] drops rank, i.e. c lies in the base
/// scheme of the linear system.
PluckerPoint semple_map(const SempleChartPoint& c);

/// Sign relating x_{i,j} to z_{I(i->j)}, where I(i->j) replaces i by j in
/// (1, ..., k+1): x_{i,j} = sign * z_{I(i->j)} when z_{(1..k+1)} = 1.
int inverse_projection_sign(std::size_t k, std::size_t i);

/// Linear projection from the span of the planes meeting
/// <e_{k+2}, ..., e_{n+1}>: y = z_{(1..k+1)}, x_{i,j} = sign * z_{I(i->j)}.
/// The result is normalized projectively. Throws when all retained
/// coordinates vanish (p is in the center of projection).
SempleChartPoint inverse_projection(const PluckerPoint& p);

/// The forms of degree k+1 defining the map, one per Plucker index in
/// lexicographic order: each is +-y^{k+1-r} D^r for a minor D^r of the x
/// block. Requires 2k < n.
std::vector<Polynomial> basis_d_kn(std::size_t k, std::size_t n, const Field& field);

/// m_r = C(k+1, r) * C(n-k, r), the number of order-r minors of the x block.
mpz_class minor_count(std::size_t k, std::size_t n, std::size_t r);

/// r = k + 1 - rank(x) for a nonzero x on the hyperplane y = 0.
std::size_t secant_stratum(const Matrix& x);

inline constexpr std::size_t kInfiniteOrder = std::numeric_limits<std::size_t>::max();

/// Multiplicity of the form at a point of the Segre variety (y = 0,
/// rank x = 1): the lowest degree surviving after translating to the point.
/// kInfiniteOrder for the zero form.
std::size_t vanishing_order_at(const Polynomial& form, const SempleChartPoint& point);

void require_standing_assumption(std::size_t k, std::size_t n);

}  // namespace fanokit
