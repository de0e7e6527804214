#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fanokit/grassmann.hpp"
#include "fanokit/poly_matrix.hpp"

namespace fanokit {

/// Two k-planes L1, L2 meeting in M (dimension k - r), with complements
/// spanned by rows a_1..a_r of L1 and b_1..b_r of L2. The bilinear map
/// ([t0:t1], q) -> sum_i q_i (t0 a_i + t1 b_i) parametrizes Seg(1, r-1); the
/// fibre over [1:0] lies in L1 and the fibre over [0:1] in L2.
struct SegreBridge {
  std::size_t r = 0;
  Matrix intersection;  // k - r + 1 rows spanning M (possibly none)
  Matrix first;         // a_1..a_r
  Matrix second;        // b_1..b_r

  std::vector<Scalar> point(const Scalar& t0, const Scalar& t1, std::span<const Scalar> q) const;
  /// Rows t0 a_i + t1 b_i, spanning the fibre P^{r-1} over [t0:t1].
  Matrix fibre(const Scalar& t0, const Scalar& t1) const;
  /// The k-plane spanned by M and the fibre over [t0:t1].
  PlaneFrame joined(const Scalar& t0, const Scalar& t1) const;
};

/// Throws PreconditionError if the planes coincide or have different
/// dimensions.
SegreBridge segre_bridge(const PlaneFrame& f1, const PlaneFrame& f2);

/// A curve P^1 -> G(k, n) given by a frame whose entries are binary forms in
/// t0, t1; its Plucker coordinates are binary forms of degree `degree`.
struct PluckerCurve {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t degree = 0;
  Ring ring;  // t0, t1
  PolyMatrix frame;
  std::vector<Polynomial> coords;

  std::vector<Scalar> raw_at(const Scalar& t0, const Scalar& t1) const;
  PluckerPoint at(const Scalar& t0, const Scalar& t1) const;
};

Ring binary_ring(const Field& field);

/// The curve t -> <M, t0 a_i + t1 b_i> through f0 at [1:0] and f1 at [0:1].
/// Its degree is r = k - dim(f0 cap f1).
PluckerCurve rnc_through(const PlaneFrame& f0, const PlaneFrame& f1);

/// The model curve in G(k, k+r+1): the plane spanned by a fixed
/// (k-r-1)-plane and the fibre {[t0:t1]} x P^r of Seg(1, r). Its nonzero
/// Plucker coordinates are, up to sign, the r+2 monomials of degree r+1.
/// Requires r <= k; r = k is the plain Segre scroll in G(k, 2k+1).
PluckerCurve rnc_model(std::size_t k, std::size_t r, const Field& field);

}  // namespace fanokit
