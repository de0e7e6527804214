#pragma once

#include <cstddef>
#include <vector>

#include "fanokit/grassmann.hpp"

namespace fanokit {

/// A hyperplane of P^N(k,n), given by one coefficient per (k+1)-multi-index
/// in lexicographic order. Pairing with Plucker coordinates evaluates its
/// equation.
struct DualHyperplane {
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<Scalar> coeffs;
};

/// sum_I h_I z_I.
Scalar pair(const DualHyperplane& h, const PluckerPoint& p);
Scalar pair(const DualHyperplane& h, const std::vector<Scalar>& plucker_coords);

/// sum_{i=1}^r C(k+1, i) C(n-k, i): the projective dimension of the
/// r-th osculating space of G(k, n). Requires 1 <= r <= k and 2k < n.
std::size_t osculating_dimension(std::size_t k, std::size_t n, std::size_t r);

/// Builds the affine chart parametrization of G(k, n) around the plane
/// <e_1, ..., e_{k+1}>, takes every partial derivative of order <= r of its
/// coordinate functions at the origin, and returns the projective dimension
/// of their span.
std::size_t osculating_rank_empirical(std::size_t k, std::size_t n, std::size_t r);

/// For an (n-k-1)-plane pi, the hyperplane of P^N(k,n) cutting out the
/// k-planes meeting pi. Its coefficient at the complement of J is
/// sign(J, complement J) * p_J, with p_J the maximal minors of pi (not
/// normalized), so pairing with the raw minors of a k-plane frame gives
/// det([pi; frame]) exactly.
DualHyperplane osculating_hyperplane(const PlaneFrame& pi);

/// Projective dimension of the intersection of the two spans; -1 if empty.
long intersection_dim(const PlaneFrame& a, const PlaneFrame& b);

}  // namespace fanokit
