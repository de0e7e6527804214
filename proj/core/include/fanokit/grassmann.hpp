#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanokit/matrix.hpp"

namespace fanokit {

/// Strictly increasing 1-based column indices in [1, n+1].
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Throws PreconditionError unless strictly increasing and within bounds.
  MultiIndex(std::vector<std::size_t> indices, std::size_t n);

  /// (1, ..., size).
  static MultiIndex leading(std::size_t size, std::size_t n);
  /// Parses "1,2,4".
  static MultiIndex parse(const std::string& text, std::size_t n);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  std::size_t ambient() const noexcept { return n_; }
  bool contains(std::size_t column) const;

  /// 0-based column positions.
  std::vector<std::size_t> zero_based() const;
  /// The complementary multi-index in {1, ..., n+1}.
  MultiIndex complement() const;
  /// Position in the lexicographic list of all multi-indices of this size.
  std::size_t lex_position() const;

  /// "1,2,4".
  std::string to_string() const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<std::size_t> indices_;
  std::size_t n_ = 0;
};

/// All multi-indices of the given size in {1, ..., n+1}, lexicographically.
std::vector<MultiIndex> all_multi_indices(std::size_t size, std::size_t n);

/// Full-rank (k+1) x (n+1) matrix whose rows span a k-plane of P^n.
class PlaneFrame {
 public:
  /// Throws PreconditionError ("degenerate frame") on rank deficiency.
  explicit PlaneFrame(Matrix m);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t k() const noexcept { return m_.rows() - 1; }
  std::size_t n() const noexcept { return m_.cols() - 1; }
  const Field& field() const noexcept { return m_.field(); }

 private:
  Matrix m_;
};

/// A point of G(k, n) in P^N(k,n), N = C(n+1, k+1) - 1. Coordinates are in
/// lexicographic multi-index order and scaled so the first nonzero one is 1.
class PluckerPoint {
 public:
  /// Validates that `coords` is the Plucker vector of some k-plane.
  static PluckerPoint from_coordinates(std::size_t k, std::size_t n, std::vector<Scalar> coords);

  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  const Scalar& at(const MultiIndex& index) const;
  /// The lexicographically first index with a nonzero coordinate.
  MultiIndex leading_index() const;

  bool operator==(const PluckerPoint& other) const = default;

 private:
  friend PluckerPoint plucker_from_matrix(const PlaneFrame& frame);
  PluckerPoint(std::size_t k, std::size_t n, Field field, std::vector<Scalar> coords);

  std::size_t k_ = 0;
  std::size_t n_ = 0;
  Field field_;
  std::vector<Scalar> coords_;
};

/// Scales a nonzero vector so its first nonzero entry is 1.
std::vector<Scalar> normalize_projective(std::vector<Scalar> v);

/// Equality of nonzero vectors up to a nonzero scalar.
bool projectively_equal(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

PluckerPoint plucker_from_matrix(const PlaneFrame& frame);

/// The unique A with p spanned by the rows of the frame having the identity
/// in the columns of `chart` and A in the remaining columns (in increasing
/// order). Throws PreconditionError when z_chart(p) = 0.
Matrix chart_normalize(const PluckerPoint& p, const MultiIndex& chart);

/// The frame with the identity on `chart` and `a` on the complement.
PlaneFrame frame_from_chart(const Matrix& a, const MultiIndex& chart);

/// A frame spanning `p`, taken in the chart of its leading index.
PlaneFrame frame_of(const PluckerPoint& p);

/// Picks a coordinate chart I (equivalently the coordinate center of
/// projection spanned by the complementary basis vectors) such that every
/// point in `points` has z_I != 0. Candidate charts are tried in an order
/// shuffled by `seed`; the accepted chart is verified through the pairing
/// with the osculating hyperplane of its center. nullopt if none works.
std::optional<MultiIndex> choose_projection_chart(const std::vector<PluckerPoint>& points, std::uint64_t seed);

}  // namespace fanokit
