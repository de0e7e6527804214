#include "fanokit/semple.hpp"

#include <algorithm>

#include "fanokit/combinatorics.hpp"
#include "fanokit/poly_matrix.hpp"

namespace fanokit {

void require_standing_assumption(std::size_t k, std::size_t n) {
  if (2 * k >= n) {
    throw PreconditionError("requires 2k < n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
  }
}

std::vector<Scalar> SempleChartPoint::coordinates() const {
  std::vector<Scalar> out{y};
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out.push_back(x(i, j));
  return out;
}

SempleChartPoint SempleChartPoint::from_coordinates(std::size_t k, std::size_t n, const std::vector<Scalar>& coords) {
  if (k >= n || coords.size() != 1 + (k + 1) * (n - k)) throw DimensionError("wrong number of Semple coordinates");
  SempleChartPoint c{coords.front(), Matrix(coords.front().field(), k + 1, n - k)};
  std::size_t pos = 1;
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j < n - k; ++j) c.x(i, j) = coords[pos++];
  return c;
}

bool SempleChartPoint::same_point(const SempleChartPoint& other) const {
  return x.rows() == other.x.rows() && x.cols() == other.x.cols() &&
         projectively_equal(coordinates(), other.coordinates());
}

Ring semple_ring(std::size_t k, std::size_t n, const Field& field) {
  std::vector<std::string> names{"y"};
  for (std::size_t i = 1; i <= k + 1; ++i)
    for (std::size_t j = k + 2; j <= n + 1; ++j) names.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
  return Ring(field, std::move(names));
}

Matrix semple_matrix(const SempleChartPoint& c) {
  const std::size_t k = c.k();
  Matrix m(c.x.field(), k + 1, c.n() + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    m(i, i) = c.y;
    for (std::size_t j = 0; j < c.x.cols(); ++j) m(i, k + 1 + j) = c.x(i, j);
  }
  return m;
}

PluckerPoint semple_map(const SempleChartPoint& c) {
  require_standing_assumption(c.k(), c.n());
  if (c.y.field() != c.x.field()) throw PreconditionError("semple_map: y and x from different fields");
  Matrix m = semple_matrix(c);
  if (rank(m) != c.k() + 1) {
    throw PreconditionError("semple_map: point lies in the indeterminacy locus (y = 0 and rank x = " +
                            std::to_string(rank(c.x)) + " < k+1), inside the base scheme B_1");
  }
  return plucker_from_matrix(PlaneFrame(std::move(m)));
}

int inverse_projection_sign(std::size_t k, std::size_t i) {
  // i is 1-based; moving column j from slot i to slot k+1 takes k+1-i swaps.
  return (k + 1 - i) % 2 == 0 ? 1 : -1;
}

SempleChartPoint inverse_projection(const PluckerPoint& p) {
  const std::size_t k = p.k();
  const std::size_t n = p.n();
  require_standing_assumption(k, n);
  const MultiIndex base = MultiIndex::leading(k + 1, n);
  SempleChartPoint c{p.at(base), Matrix(p.field(), k + 1, n - k)};
  for (std::size_t i = 1; i <= k + 1; ++i) {
    for (std::size_t j = k + 2; j <= n + 1; ++j) {
      std::vector<std::size_t> cols;
      for (std::size_t t = 1; t <= k + 1; ++t)
        if (t != i) cols.push_back(t);
      cols.push_back(j);
      const Scalar& z = p.at(MultiIndex(cols, n));
      c.x(i - 1, j - k - 2) = inverse_projection_sign(k, i) > 0 ? z : -z;
    }
  }
  std::vector<Scalar> coords = c.coordinates();
  bool all_zero = true;
  for (const auto& v : coords) all_zero = all_zero && v.is_zero();
  if (all_zero) throw PreconditionError("inverse_projection: point lies in the center of projection");
  return SempleChartPoint::from_coordinates(k, n, normalize_projective(std::move(coords)));
}

std::vector<Polynomial> basis_d_kn(std::size_t k, std::size_t n, const Field& field) {
  require_standing_assumption(k, n);
  const Ring ring = semple_ring(k, n, field);
  const Polynomial y = Polynomial::variable(ring, 0);
  PolyMatrix m(k + 1, std::vector<Polynomial>(n + 1, Polynomial(ring)));
  for (std::size_t i = 0; i <= k; ++i) {
    m[i][i] = y;
    for (std::size_t j = k + 2; j <= n + 1; ++j) {
      m[i][j - 1] = Polynomial::variable(ring, "x_" + std::to_string(i + 1) + "_" + std::to_string(j));
    }
  }
  return maximal_minors(m, ring);
}

mpz_class minor_count(std::size_t k, std::size_t n, std::size_t r) {
  return binomial(static_cast<long>(k + 1), r) * binomial(static_cast<long>(n - k), r);
}

std::size_t secant_stratum(const Matrix& x) {
  if (x.is_zero()) throw PreconditionError("secant_stratum: the zero matrix is not a projective point");
  return x.rows() - rank(x);
}

std::size_t vanishing_order_at(const Polynomial& form, const SempleChartPoint& point) {
  if (!point.y.is_zero() || rank(point.x) != 1) {
    throw PreconditionError("vanishing_order_at: point is not on the Segre variety (needs y = 0, rank x = 1)");
  }
  const Ring& ring = form.ring();
  const std::vector<Scalar> coords = point.coordinates();
  if (ring.size() != coords.size()) throw DimensionError("vanishing_order_at: form and point dimensions differ");
  if (form.is_zero()) return kInfiniteOrder;
  std::map<std::string, Polynomial, std::less<>> shift;
  for (std::size_t v = 0; v < ring.size(); ++v) {
    shift.emplace(ring.name(v), Polynomial::variable(ring, v) + Polynomial::constant(ring, coords[v]));
  }
  const Polynomial moved = substitute(form, shift, ring);
  std::size_t order = kInfiniteOrder;
  for (const auto& [m, c] : moved.terms()) order = std::min<std::size_t>(order, total_degree(m));
  return order;
}

}  // namespace fanokit
