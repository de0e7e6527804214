#include "fanokit/family.hpp"

#include <algorithm>

namespace fanokit {

namespace {

std::size_t base_dimension(const Ring& ring) {
  const std::size_t count = ring.size();
  if (count < 2) throw PreconditionError("base variety: needs variables u0, u1, ...");
  for (std::size_t i = 0; i < count; ++i) {
    if (ring.name(i) != "u" + std::to_string(i)) throw PreconditionError("base variety: ring must be u0..u_{r+1}");
  }
  return count - 2;
}

Polynomial shifted(const Polynomial& p, const std::vector<Scalar>& shift, bool inverse) {
  const Ring& ring = p.ring();
  const std::size_t last = ring.size() - 1;
  const Polynomial v = Polynomial::variable(ring, last);
  std::map<std::string, Polynomial, std::less<>> assignment;
  for (std::size_t i = 0; i < last; ++i) {
    const Scalar c = inverse ? -shift[i] : shift[i];
    assignment.emplace(ring.name(i), Polynomial::variable(ring, i) + v * c);
  }
  assignment.emplace(ring.name(last), v);
  return substitute(p, assignment, ring);
}

}  // namespace

Ring base_ring(std::size_t r, const Field& field) { return Ring::indexed(field, "u", 0, r + 1); }

BaseVariety::BaseVariety(Polynomial phi) : phi_(std::move(phi)) {
  r_ = base_dimension(phi_.ring());
  if (phi_.is_zero()) throw PreconditionError("base variety: phi is zero");
  const auto degree = is_homogeneous(phi_);
  if (!degree) throw PreconditionError("base variety: phi is not homogeneous");
  if (*degree == 0) throw PreconditionError("base variety: phi is a nonzero constant");
  degree_ = *degree;
}

bool BaseVariety::contains(std::span<const Scalar> w) const {
  if (w.size() != r_ + 2) throw DimensionError("base variety: point has the wrong length");
  if (std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); })) {
    throw PreconditionError("base variety: the zero vector is not a point");
  }
  return phi_.evaluate(w).is_zero();
}

bool MonicChange::is_identity() const {
  return std::all_of(shift.begin(), shift.end(), [](const Scalar& s) { return s.is_zero(); });
}

Polynomial MonicChange::forward(const Polynomial& p) const { return is_identity() ? p : shifted(p, shift, false); }

Polynomial MonicChange::backward(const Polynomial& p) const { return is_identity() ? p : shifted(p, shift, true); }

MonicChange make_monic(const Polynomial& phi) {
  const Ring& ring = phi.ring();
  const Field& field = ring.field();
  const std::size_t last = ring.size() - 1;
  const auto degree = is_homogeneous(phi);
  if (phi.is_zero() || !degree) throw PreconditionError("make_monic: phi must be a nonzero form");
  // A nonzero form of degree m does not vanish on all of {0..m}^{r+1} x {1}.
  std::uint64_t bound = *degree;
  if (field.is_prime()) bound = std::min<std::uint64_t>(bound, field.modulus() - 1);
  std::vector<std::uint64_t> digits(last, 0);
  while (true) {
    std::vector<Scalar> point;
    for (auto d : digits) point.push_back(field.from_int(static_cast<long>(d)));
    point.push_back(field.one());
    const Scalar lead = phi.evaluate(point);
    if (!lead.is_zero()) {
      MonicChange change{std::vector<Scalar>(point.begin(), point.end() - 1), Polynomial(ring)};
      change.phi = change.forward(phi) * lead.inverse();
      return change;
    }
    std::size_t pos = last;
    while (pos > 0 && ++digits[pos - 1] > bound) digits[--pos] = 0;
    if (pos == 0) break;
  }
  throw PreconditionError("make_monic: phi vanishes at every point with u_{r+1} = 1 over this field");
}

Monomial key_monomial(const HypersurfaceFamily::Key& key, std::size_t n) {
  Monomial m(n + 1, 0);
  for (std::size_t i : key) {
    if (i > n) throw DimensionError("family: coefficient key index out of range");
    ++m[i];
  }
  return m;
}

HypersurfaceFamily::HypersurfaceFamily(BaseVariety base, std::size_t n, unsigned d, unsigned mu,
                                       std::map<Key, Polynomial> coeffs)
    : base_(std::move(base)), n_(n), d_(d), mu_(mu) {
  if (n < 1 || d < 1) throw PreconditionError("family: needs n >= 1 and d >= 1");
  for (auto& [key, c] : coeffs) {
    if (key.size() != d) throw DimensionError("family: coefficient key must have d entries");
    if (!std::is_sorted(key.begin(), key.end())) throw PreconditionError("family: coefficient keys must be sorted");
    key_monomial(key, n);
    if (c.ring() != base_.ring()) throw PreconditionError("family: coefficients must live in the base ring");
    if (c.is_zero()) continue;
    const auto degree = is_homogeneous(c);
    if (!degree || *degree != mu) {
      throw PreconditionError("family: coefficient " + c.to_string() + " is not a form of degree " + std::to_string(mu));
    }
    coeffs_.emplace(key, c);
  }
  const MonicChange change = make_monic(base_.phi());
  const Polynomial& phi = change.phi;
  const std::string last = base_.ring().names().back();
  const bool degenerate = std::all_of(coeffs_.begin(), coeffs_.end(), [&](const auto& kv) {
    return reduce_mod_monic(change.forward(kv.second), phi, last).is_zero();
  });
  if (degenerate) throw PreconditionError("family: every coefficient vanishes on the base");
}

Hypersurface HypersurfaceFamily::total() const {
  const Field& field = base_.field();
  const Ring ring = coordinate_ring(n_, field).extended(base_.ring().names());
  Polynomial form(ring);
  for (const auto& [key, c] : coeffs_) {
    const Monomial xm = key_monomial(key, n_);
    for (const auto& [um, coeff] : c.terms()) {
      Monomial m = xm;
      m.insert(m.end(), um.begin(), um.end());
      form.add_term(m, coeff);
    }
  }
  return Hypersurface(form);
}

HypersurfaceFamily HypersurfaceFamily::transformed(const MonicChange& change) const {
  std::map<Key, Polynomial> coeffs;
  for (const auto& [key, c] : coeffs_) coeffs.emplace(key, change.forward(c));
  return HypersurfaceFamily(BaseVariety(change.phi), n_, d_, mu_, std::move(coeffs));
}

Hypersurface fiber_at(const HypersurfaceFamily& fam, std::span<const Scalar> w) {
  if (!fam.base().contains(w)) throw PreconditionError("fiber_at: the point is not on the base");
  const Ring ring = coordinate_ring(fam.n(), fam.base().field());
  Polynomial form(ring);
  for (const auto& [key, c] : fam.coeffs()) {
    const Scalar value = c.evaluate(w);
    if (!value.is_zero()) form.add_term(key_monomial(key, fam.n()), value);
  }
  if (form.is_zero()) throw PreconditionError("fiber_at: degenerate fiber, every coefficient vanishes");
  return Hypersurface(form);
}

FanoSystem relative_fano_equations(const HypersurfaceFamily& fam, std::size_t k, const MultiIndex& chart) {
  return fano_equations(fam.total(), k, chart);
}

}  // namespace fanokit
