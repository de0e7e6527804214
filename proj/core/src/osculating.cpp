#include "fanokit/osculating.hpp"

#include <functional>

#include "fanokit/combinatorics.hpp"
#include "fanokit/semple.hpp"

namespace fanokit {

Scalar pair(const DualHyperplane& h, const std::vector<Scalar>& plucker_coords) {
  if (plucker_coords.size() != h.coeffs.size()) throw DimensionError("pairing: coordinate counts differ");
  Scalar sum = h.coeffs.front().field().zero();
  for (std::size_t i = 0; i < h.coeffs.size(); ++i) sum += h.coeffs[i] * plucker_coords[i];
  return sum;
}

Scalar pair(const DualHyperplane& h, const PluckerPoint& p) {
  if (p.k() != h.k || p.n() != h.n) throw DimensionError("pairing: hyperplane and point live in different G(k,n)");
  return pair(h, p.coords());
}

std::size_t osculating_dimension(std::size_t k, std::size_t n, std::size_t r) {
  require_standing_assumption(k, n);
  if (r < 1 || r > k) {
    throw PreconditionError("osculating order r=" + std::to_string(r) + " outside [1, k=" + std::to_string(k) + "]");
  }
  mpz_class sum = 0;
  for (std::size_t i = 1; i <= r; ++i) sum += minor_count(k, n, i);
  return sum.get_ui();
}

std::size_t osculating_rank_empirical(std::size_t k, std::size_t n, std::size_t r) {
  osculating_dimension(k, n, r);  // validates the arguments
  const Field q = Field::rationals();
  const Ring homogeneous = semple_ring(k, n, q);
  std::vector<std::string> x_names(homogeneous.names().begin() + 1, homogeneous.names().end());
  const Ring affine(q, x_names);

  // Dehomogenize at y = 1.
  std::map<std::string, Polynomial, std::less<>> at_y1{{"y", Polynomial::constant(affine, 1)}};
  for (const auto& name : x_names) at_y1.emplace(name, Polynomial::variable(affine, name));
  std::vector<Polynomial> coords;
  for (const auto& form : basis_d_kn(k, n, q)) coords.push_back(substitute(form, at_y1, affine));

  std::vector<std::vector<Scalar>> jets;
  // Walk multi-indices of derivatives in nondecreasing variable order.
  std::function<void(std::size_t, std::size_t, const std::vector<Polynomial>&)> walk =
      [&](std::size_t first_var, std::size_t order, const std::vector<Polynomial>& current) {
        std::vector<Scalar> row;
        for (const auto& c : current) row.push_back(c.constant_term());
        jets.push_back(std::move(row));
        if (order == r) return;
        for (std::size_t v = first_var; v < x_names.size(); ++v) {
          std::vector<Polynomial> next;
          bool all_zero = true;
          for (const auto& c : current) {
            next.push_back(partial_derivative(c, x_names[v]));
            all_zero = all_zero && next.back().is_zero();
          }
          if (!all_zero) walk(v, order + 1, next);
        }
      };
  walk(0, 0, coords);
  return rank(Matrix::from_rows(q, jets)) - 1;
}

DualHyperplane osculating_hyperplane(const PlaneFrame& pi) {
  const std::size_t n = pi.n();
  const std::size_t rows = pi.matrix().rows();
  if (rows > n) throw DimensionError("osculating_hyperplane: the center must be a proper subspace");
  const std::size_t k = n - rows;
  const std::vector<Scalar> p = maximal_minors(pi.matrix());
  DualHyperplane h{k, n, std::vector<Scalar>(p.size(), pi.field().zero())};
  const auto centers = all_multi_indices(rows, n);
  for (std::size_t t = 0; t < centers.size(); ++t) {
    const MultiIndex comp = centers[t].complement();
    std::vector<std::size_t> perm = centers[t].indices();
    perm.insert(perm.end(), comp.indices().begin(), comp.indices().end());
    const Scalar coeff = permutation_sign(perm) > 0 ? p[t] : -p[t];
    h.coeffs[comp.lex_position()] = coeff;
  }
  return h;
}

long intersection_dim(const PlaneFrame& a, const PlaneFrame& b) {
  if (a.n() != b.n()) throw DimensionError("intersection_dim: planes live in different projective spaces");
  const std::size_t total = a.matrix().rows() + b.matrix().rows();
  return static_cast<long>(total - rank(Matrix::vstack(a.matrix(), b.matrix()))) - 1;
}

}  // namespace fanokit
