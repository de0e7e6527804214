#include "fanokit/poly_matrix.hpp"

#include <cstdint>
#include <unordered_map>

#include "fanokit/combinatorics.hpp"

namespace fanokit {

namespace {

class MinorCache {
 public:
  MinorCache(const PolyMatrix& m, const Ring& ring) : m_(m), ring_(ring), levels_(m.size()) {}

  /// Determinant of rows [row, R) against the columns in `mask`.
  const Polynomial& minor(std::size_t row, std::uint64_t mask) {
    auto& level = levels_[row];
    if (auto it = level.find(mask); it != level.end()) return it->second;
    Polynomial sum(ring_);
    if (row + 1 == m_.size()) {
      // One row left: the mask holds exactly one column.
      sum = m_[row][static_cast<std::size_t>(__builtin_ctzll(mask))];
    } else {
      int position = 0;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1, ++position) {
        const auto col = static_cast<std::size_t>(__builtin_ctzll(rest));
        const Polynomial& entry = m_[row][col];
        if (entry.is_zero()) continue;
        const Polynomial& sub = minor(row + 1, mask & ~(std::uint64_t{1} << col));
        if (sub.is_zero()) continue;
        if (position % 2 == 0) {
          sum += entry * sub;
        } else {
          sum -= entry * sub;
        }
      }
    }
    return level.emplace(mask, std::move(sum)).first->second;
  }

 private:
  const PolyMatrix& m_;
  const Ring& ring_;
  std::vector<std::unordered_map<std::uint64_t, Polynomial>> levels_;
};

void check_shape(const PolyMatrix& m, const Ring& ring) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  if (cols > 64) throw DimensionError("polynomial matrices are limited to 64 columns");
  for (const auto& row : m) {
    if (row.size() != cols) throw DimensionError("ragged polynomial matrix");
    for (const auto& e : row)
      if (e.ring() != ring) throw PreconditionError("polynomial matrix entry from a different ring");
  }
  if (m.size() > cols) throw DimensionError("maximal_minors: more rows than columns");
}

}  // namespace

std::vector<Polynomial> maximal_minors(const PolyMatrix& m, const Ring& ring) {
  check_shape(m, ring);
  if (m.empty()) return {Polynomial::constant(ring, 1)};
  MinorCache cache(m, ring);
  std::vector<Polynomial> out;
  for (const auto& cols : combinations(m.front().size(), m.size())) {
    std::uint64_t mask = 0;
    for (auto c : cols) mask |= std::uint64_t{1} << c;
    out.push_back(cache.minor(0, mask));
  }
  return out;
}

Polynomial det(const PolyMatrix& m, const Ring& ring) {
  if (!m.empty() && m.size() != m.front().size()) throw DimensionError("det: polynomial matrix is not square");
  return maximal_minors(m, ring).front();
}

}  // namespace fanokit
