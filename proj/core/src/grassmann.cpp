#include "fanokit/grassmann.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "fanokit/combinatorics.hpp"
#include "fanokit/osculating.hpp"

namespace fanokit {

MultiIndex::MultiIndex(std::vector<std::size_t> indices, std::size_t n) : indices_(std::move(indices)), n_(n) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || indices_[i] > n + 1) {
      throw PreconditionError("multi-index entry " + std::to_string(indices_[i]) + " outside [1, " +
                              std::to_string(n + 1) + "]");
    }
    if (i > 0 && indices_[i] <= indices_[i - 1]) throw PreconditionError("multi-index is not strictly increasing");
  }
}

MultiIndex MultiIndex::leading(std::size_t size, std::size_t n) {
  std::vector<std::size_t> v(size);
  for (std::size_t i = 0; i < size; ++i) v[i] = i + 1;
  return MultiIndex(std::move(v), n);
}

MultiIndex MultiIndex::parse(const std::string& text, std::size_t n) {
  std::vector<std::size_t> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) {
      throw ParseError("invalid multi-index '" + text + "'", 0);
    }
    v.push_back(std::stoul(part));
  }
  return MultiIndex(std::move(v), n);
}

bool MultiIndex::contains(std::size_t column) const {
  return std::binary_search(indices_.begin(), indices_.end(), column);
}

std::vector<std::size_t> MultiIndex::zero_based() const {
  std::vector<std::size_t> out;
  for (auto i : indices_) out.push_back(i - 1);
  return out;
}

MultiIndex MultiIndex::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 1; c <= n_ + 1; ++c)
    if (!contains(c)) out.push_back(c);
  return MultiIndex(std::move(out), n_);
}

std::size_t MultiIndex::lex_position() const { return combination_rank(zero_based(), n_ + 1); }

std::string MultiIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < indices_.size(); ++i) out += (i ? "," : "") + std::to_string(indices_[i]);
  return out;
}

std::vector<MultiIndex> all_multi_indices(std::size_t size, std::size_t n) {
  std::vector<MultiIndex> out;
  for (auto& c : combinations(n + 1, size)) {
    for (auto& x : c) ++x;
    out.emplace_back(std::move(c), n);
  }
  return out;
}

PlaneFrame::PlaneFrame(Matrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() > m_.cols()) {
    throw DimensionError("a plane frame needs 1 <= rows <= cols, got " + std::to_string(m_.rows()) + "x" +
                         std::to_string(m_.cols()));
  }
  if (rank(m_) != m_.rows()) throw PreconditionError("degenerate frame: rows are linearly dependent");
}

PluckerPoint::PluckerPoint(std::size_t k, std::size_t n, Field field, std::vector<Scalar> coords)
    : k_(k), n_(n), field_(field), coords_(std::move(coords)) {}

std::vector<Scalar> normalize_projective(std::vector<Scalar> v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == v.end()) throw PreconditionError("the zero vector is not a projective point");
  const Scalar inv = it->inverse();
  for (auto& x : v) x *= inv;
  return v;
}

bool projectively_equal(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  return a.size() == b.size() && normalize_projective(a) == normalize_projective(b);
}

PluckerPoint plucker_from_matrix(const PlaneFrame& frame) {
  return PluckerPoint(frame.k(), frame.n(), frame.field(), normalize_projective(maximal_minors(frame.matrix())));
}

const Scalar& PluckerPoint::at(const MultiIndex& index) const {
  if (index.size() != k_ + 1 || index.ambient() != n_) throw DimensionError("multi-index does not fit G(k,n)");
  return coords_.at(index.lex_position());
}

MultiIndex PluckerPoint::leading_index() const {
  const auto all = all_multi_indices(k_ + 1, n_);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return all[i];
  throw PreconditionError("Plucker vector is zero");
}

Matrix chart_normalize(const PluckerPoint& p, const MultiIndex& chart) {
  const std::size_t k = p.k();
  const std::size_t n = p.n();
  if (chart.size() != k + 1 || chart.ambient() != n) throw DimensionError("chart index does not fit G(k,n)");
  const Scalar& pivot = p.at(chart);
  if (pivot.is_zero()) throw PreconditionError("point lies outside the chart z_{" + chart.to_string() + "} != 0");
  const Scalar inv = pivot.inverse();
  const MultiIndex rest = chart.complement();
  Matrix a(p.field(), k + 1, n - k);
  // Replacing the i-th column of the identity block by column j gives the
  // determinant a(i, j); sorting j into place costs |target - i| swaps.
  for (std::size_t i = 0; i < k + 1; ++i) {
    for (std::size_t jj = 0; jj < rest.size(); ++jj) {
      const std::size_t j = rest.indices()[jj];
      std::vector<std::size_t> cols = chart.indices();
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
      auto pos = std::lower_bound(cols.begin(), cols.end(), j);
      const auto target = static_cast<std::size_t>(pos - cols.begin());
      cols.insert(pos, j);
      const std::size_t swaps = target > i ? target - i : i - target;
      Scalar value = p.at(MultiIndex(cols, n)) * inv;
      a(i, jj) = swaps % 2 == 0 ? value : -value;
    }
  }
  return a;
}

PlaneFrame frame_from_chart(const Matrix& a, const MultiIndex& chart) {
  const std::size_t rows = chart.size();
  const std::size_t n = chart.ambient();
  if (a.rows() != rows || a.cols() != n + 1 - rows) throw DimensionError("chart matrix has the wrong shape");
  Matrix m(a.field(), rows, n + 1);
  const auto id_cols = chart.zero_based();
  const auto rest = chart.complement().zero_based();
  for (std::size_t i = 0; i < rows; ++i) {
    m(i, id_cols[i]) = a.field().one();
    for (std::size_t j = 0; j < rest.size(); ++j) m(i, rest[j]) = a(i, j);
  }
  return PlaneFrame(std::move(m));
}

PlaneFrame frame_of(const PluckerPoint& p) {
  const MultiIndex chart = p.leading_index();
  return frame_from_chart(chart_normalize(p, chart), chart);
}

PluckerPoint PluckerPoint::from_coordinates(std::size_t k, std::size_t n, std::vector<Scalar> coords) {
  if (k > n) throw DimensionError("G(k,n) needs k <= n");
  if (coords.size() != binomial(static_cast<long>(n + 1), k + 1)) {
    throw DimensionError("expected C(n+1,k+1) = " + binomial(static_cast<long>(n + 1), k + 1).get_str() +
                         " Plucker coordinates, got " + std::to_string(coords.size()));
  }
  if (coords.empty()) throw DimensionError("empty Plucker vector");
  const Field field = coords.front().field();
  for (const auto& c : coords)
    if (c.field() != field) throw PreconditionError("Plucker coordinates from different fields");
  PluckerPoint candidate(k, n, field, normalize_projective(std::move(coords)));
  PluckerPoint rebuilt = plucker_from_matrix(frame_of(candidate));
  if (rebuilt != candidate) throw PreconditionError("coordinates do not satisfy the Plucker relations");
  return candidate;
}

std::optional<MultiIndex> choose_projection_chart(const std::vector<PluckerPoint>& points, std::uint64_t seed) {
  if (points.empty()) return std::nullopt;
  const std::size_t k = points.front().k();
  const std::size_t n = points.front().n();
  auto charts = all_multi_indices(k + 1, n);
  std::mt19937_64 rng(seed);
  std::shuffle(charts.begin(), charts.end(), rng);
  for (const auto& chart : charts) {
    // The center is spanned by e_j for j outside the chart.
    const MultiIndex center = chart.complement();
    Matrix pi(points.front().field(), center.size(), n + 1);
    for (std::size_t r = 0; r < center.size(); ++r) pi(r, center.indices()[r] - 1) = pi.field().one();
    const DualHyperplane h = osculating_hyperplane(PlaneFrame(pi));
    const bool avoids = std::all_of(points.begin(), points.end(),
                                    [&](const PluckerPoint& p) { return !pair(h, p).is_zero(); });
    if (avoids) return chart;
  }
  return std::nullopt;
}

}  // namespace fanokit
