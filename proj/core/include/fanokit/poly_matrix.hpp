#pragma once

#include <vector>

#include "fanokit/polynomial.hpp"

namespace fanokit {

/// A matrix with polynomial entries, row-major; all entries share one ring.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// All maximal minors of a matrix with at most as many rows as columns, in
/// lexicographic order of the column multi-index. Computed by Laplace
/// expansion along the first row with memoized sub-minors, so it works over
/// any polynomial ring without division.
std::vector<Polynomial> maximal_minors(const PolyMatrix& m, const Ring& ring);

Polynomial det(const PolyMatrix& m, const Ring& ring);

}  // namespace fanokit
