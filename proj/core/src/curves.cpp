#include "fanokit/curves.hpp"

namespace fanokit {

namespace {

/// Rows of `candidates` that extend `base` to a basis of their joint span.
Matrix complete_basis(const Matrix& base, const Matrix& candidates) {
  Matrix current = base;
  std::vector<std::vector<Scalar>> picked;
  for (std::size_t i = 0; i < candidates.rows(); ++i) {
    Matrix row = Matrix::from_rows(candidates.field(), {candidates.row(i)});
    Matrix trial = current.rows() == 0 ? row : Matrix::vstack(current, row);
    if (rank(trial) == trial.rows()) {
      current = trial;
      picked.push_back(candidates.row(i));
    }
  }
  Matrix out(candidates.field(), picked.size(), candidates.cols());
  for (std::size_t i = 0; i < picked.size(); ++i)
    for (std::size_t j = 0; j < candidates.cols(); ++j) out(i, j) = picked[i][j];
  return out;
}

}  // namespace

std::vector<Scalar> SegreBridge::point(const Scalar& t0, const Scalar& t1, std::span<const Scalar> q) const {
  if (q.size() != r) throw DimensionError("segre point: expected " + std::to_string(r) + " fibre coordinates");
  const Matrix f = fibre(t0, t1);
  std::vector<Scalar> out(f.cols(), f.field().zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) out[j] += q[i] * f(i, j);
  return out;
}

Matrix SegreBridge::fibre(const Scalar& t0, const Scalar& t1) const {
  Matrix out(first.field(), r, first.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < first.cols(); ++j) out(i, j) = t0 * first(i, j) + t1 * second(i, j);
  return out;
}

PlaneFrame SegreBridge::joined(const Scalar& t0, const Scalar& t1) const {
  const Matrix f = fibre(t0, t1);
  return PlaneFrame(intersection.rows() == 0 ? f : Matrix::vstack(intersection, f));
}

SegreBridge segre_bridge(const PlaneFrame& f1, const PlaneFrame& f2) {
  if (f1.n() != f2.n() || f1.k() != f2.k()) {
    throw DimensionError("segre_bridge: planes must have the same dimension and ambient space");
  }
  if (f1.field() != f2.field()) throw PreconditionError("segre_bridge: fields differ");
  const Field& field = f1.field();
  const Matrix& a = f1.matrix();
  const Matrix& b = f2.matrix();
  // (c1, c2) with c1 a = c2 b spans the intersection.
  const Matrix stacked = Matrix::vstack(a, b.scaled(-field.one())).transpose();
  const auto kernel = kernel_basis(stacked);
  const std::size_t dim_m = kernel.size();
  if (dim_m == a.rows()) throw PreconditionError("segre_bridge: the two planes coincide");
  Matrix meet(field, dim_m, a.cols());
  for (std::size_t t = 0; t < dim_m; ++t)
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) meet(t, j) += kernel[t][i] * a(i, j);

  SegreBridge bridge;
  bridge.r = a.rows() - dim_m;
  bridge.intersection = meet;
  bridge.first = complete_basis(meet, a);
  bridge.second = complete_basis(meet, b);
  return bridge;
}

Ring binary_ring(const Field& field) { return Ring(field, {"t0", "t1"}); }

std::vector<Scalar> PluckerCurve::raw_at(const Scalar& t0, const Scalar& t1) const {
  const std::vector<Scalar> point{t0, t1};
  std::vector<Scalar> out;
  for (const auto& c : coords) out.push_back(c.evaluate(point));
  return out;
}

PluckerPoint PluckerCurve::at(const Scalar& t0, const Scalar& t1) const {
  return PluckerPoint::from_coordinates(k, n, raw_at(t0, t1));
}

PluckerCurve rnc_through(const PlaneFrame& f0, const PlaneFrame& f1) {
  const SegreBridge bridge = segre_bridge(f0, f1);
  const Field& field = f0.field();
  const Ring ring = binary_ring(field);
  const Polynomial t0 = Polynomial::variable(ring, 0);
  const Polynomial t1 = Polynomial::variable(ring, 1);

  PluckerCurve curve;
  curve.k = f0.k();
  curve.n = f0.n();
  curve.degree = bridge.r;
  curve.ring = ring;
  for (std::size_t i = 0; i < bridge.intersection.rows(); ++i) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < bridge.intersection.cols(); ++j)
      row.push_back(Polynomial::constant(ring, bridge.intersection(i, j)));
    curve.frame.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < bridge.r; ++i) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < bridge.first.cols(); ++j)
      row.push_back(t0 * bridge.first(i, j) + t1 * bridge.second(i, j));
    curve.frame.push_back(std::move(row));
  }
  curve.coords = maximal_minors(curve.frame, ring);
  return curve;
}

PluckerCurve rnc_model(std::size_t k, std::size_t r, const Field& field) {
  if (r > k) throw PreconditionError("rnc_model: needs r <= k");
  const std::size_t n = k + r + 1;
  const Ring ring = binary_ring(field);
  PluckerCurve curve;
  curve.k = k;
  curve.n = n;
  curve.degree = r + 1;
  curve.ring = ring;
  curve.frame.assign(k + 1, std::vector<Polynomial>(n + 1, Polynomial(ring)));
  for (std::size_t i = 0; i <= r; ++i) {
    curve.frame[i][i] = Polynomial::variable(ring, 0);
    curve.frame[i][r + 1 + i] = Polynomial::variable(ring, 1);
  }
  for (std::size_t i = r + 1; i <= k; ++i) curve.frame[i][i + r + 1] = Polynomial::constant(ring, 1);
  curve.coords = maximal_minors(curve.frame, ring);
  return curve;
}

}  // namespace fanokit
