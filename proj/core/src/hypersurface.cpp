#include "fanokit/hypersurface.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "fanokit/combinatorics.hpp"

namespace fanokit {

namespace {

std::size_t count_coordinates(const Ring& ring) {
  std::size_t n = 0;
  while (n < ring.size() && ring.name(n) == "x" + std::to_string(n)) ++n;
  return n;
}

std::vector<std::size_t> iota_indices(std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = i;
  return out;
}

std::vector<std::string> s_names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i <= k; ++i) out.push_back("s" + std::to_string(i));
  return out;
}

// Univariate polynomials as coefficient lists, lowest degree first.
using Univariate = std::vector<Scalar>;

void trim(Univariate& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Univariate remainder(Univariate a, const Univariate& b) {
  trim(a);
  const Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const Scalar factor = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

Univariate gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Scalar evaluate(const Univariate& p, const Scalar& t, const Field& field) {
  Scalar acc = field.zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

/// g(1, t) for a binary form g in s0, s1.
Univariate dehomogenize(const Polynomial& g, const Field& field) {
  Univariate out;
  for (const auto& [m, c] : g.terms()) {
    if (out.size() <= m[1]) out.resize(m[1] + 1, field.zero());
    out[m[1]] += c;
  }
  trim(out);
  return out;
}

std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// A rational zero of p by the rational root test, when the extreme
/// coefficients are small enough to factor by trial division.
std::optional<Scalar> rational_root(const Univariate& p, const Field& field) {
  if (p.front().is_zero()) return field.zero();
  mpz_class lcm_den = 1;
  for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpq_class> a;
  for (const auto& c : p) a.push_back(c.rational() * lcm_den);
  const mpz_class limit = mpz_class(1) << 40;
  const mpz_class a0 = a.front().get_num(), an = a.back().get_num();
  if (abs(a0) > limit || abs(an) > limit) return std::nullopt;
  for (const auto& num : divisors(a0)) {
    for (const auto& den : divisors(an)) {
      for (int sign : {1, -1}) {
        const Scalar t = field.from_mpq(mpq_class(sign * num, den));
        if (evaluate(p, t, field).is_zero()) return t;
      }
    }
  }
  return std::nullopt;
}

std::vector<Scalar> point_on_plane(const Matrix& frame, const std::vector<Scalar>& s) {
  std::vector<Scalar> out(frame.cols(), frame.field().zero());
  for (std::size_t i = 0; i < frame.rows(); ++i)
    for (std::size_t j = 0; j < frame.cols(); ++j) out[j] += s[i] * frame(i, j);
  return normalize_projective(std::move(out));
}

bool all_vanish(const std::vector<Polynomial>& forms, const std::vector<Scalar>& s) {
  return std::all_of(forms.begin(), forms.end(), [&](const Polynomial& g) { return g.evaluate(s).is_zero(); });
}

}  // namespace

Hypersurface::Hypersurface(Polynomial form) : form_(std::move(form)) {
  n_ = count_coordinates(form_.ring());
  if (n_ < 2) throw PreconditionError("hypersurface: the ring must start with x0, x1, ...");
  n_ -= 1;
  if (form_.is_zero()) throw PreconditionError("hypersurface: the form is zero");
  const auto coords = iota_indices(n_ + 1);
  const auto degree = is_homogeneous_in(form_, coords);
  if (!degree) throw PreconditionError("hypersurface: the form is not homogeneous in x");
  d_ = *degree;
  if (d_ == 0) throw PreconditionError("hypersurface: the form has degree 0");
}

Hypersurface Hypersurface::parse(const std::string& text, std::size_t n, const Field& field) {
  return Hypersurface(parse_polynomial(text, coordinate_ring(n, field)));
}

std::vector<std::string> Hypersurface::coordinate_names() const {
  const auto& names = ring().names();
  return {names.begin(), names.begin() + static_cast<std::ptrdiff_t>(n_ + 1)};
}

std::vector<std::string> Hypersurface::parameter_names() const {
  const auto& names = ring().names();
  return {names.begin() + static_cast<std::ptrdiff_t>(n_ + 1), names.end()};
}

Ring coordinate_ring(std::size_t n, const Field& field) { return Ring::indexed(field, "x", 0, n); }

Hypersurface generic_hypersurface(std::size_t n, unsigned d, const Field& field) {
  const auto exponents = exponent_vectors(n + 1, d);
  std::vector<std::string> alphas;
  for (const auto& e : exponents) {
    std::string name = "alpha";
    for (unsigned v : e) name += "_" + std::to_string(v);
    alphas.push_back(std::move(name));
  }
  const Ring ring = coordinate_ring(n, field).extended(alphas);
  Polynomial form(ring);
  for (std::size_t t = 0; t < exponents.size(); ++t) {
    Monomial m(ring.size(), 0);
    std::copy(exponents[t].begin(), exponents[t].end(), m.begin());
    m[n + 1 + t] = 1;
    form.add_term(m, field.one());
  }
  return Hypersurface(form);
}

Polynomial restrict_to_plane(const Hypersurface& h, const PolyMatrix& frame, const Ring& frame_ring) {
  if (frame.empty() || frame.front().size() != h.n() + 1) {
    throw DimensionError("restrict_to_plane: frame has the wrong number of columns");
  }
  const std::size_t k = frame.size() - 1;
  std::vector<std::string> names = s_names(k);
  for (const auto& v : frame_ring.names()) names.push_back(v);
  for (const auto& v : h.parameter_names()) {
    if (frame_ring.find(v)) throw PreconditionError("restrict_to_plane: variable " + v + " is used twice");
    names.push_back(v);
  }
  const Ring target(h.field(), names);
  std::map<std::string, Polynomial, std::less<>> assignment;
  for (std::size_t j = 0; j <= h.n(); ++j) {
    Polynomial image(target);
    for (std::size_t i = 0; i <= k; ++i) {
      image += Polynomial::variable(target, i) * frame[i][j].in_ring(target);
    }
    assignment.emplace("x" + std::to_string(j), std::move(image));
  }
  for (const auto& v : h.parameter_names()) assignment.emplace(v, Polynomial::variable(target, v));
  return substitute(h.form(), assignment, target);
}

Polynomial restrict_to_plane(const Hypersurface& h, const PlaneFrame& frame) {
  if (frame.n() != h.n()) throw DimensionError("restrict_to_plane: ambient dimension mismatch");
  if (frame.field() != h.field()) throw PreconditionError("restrict_to_plane: fields differ");
  const Ring empty(h.field(), {});
  PolyMatrix symbolic;
  for (std::size_t i = 0; i < frame.matrix().rows(); ++i) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < frame.matrix().cols(); ++j) row.push_back(Polynomial::constant(empty, frame.matrix()(i, j)));
    symbolic.push_back(std::move(row));
  }
  const Polynomial restricted = restrict_to_plane(h, symbolic, empty);
  std::vector<std::string> names = s_names(frame.k());
  for (const auto& v : h.parameter_names()) names.push_back(v);
  return restricted.in_ring(Ring(h.field(), names));
}

std::string chart_variable(std::size_t i, std::size_t j) {
  return "a_" + std::to_string(i) + "_" + std::to_string(j);
}

std::vector<Polynomial> fano_equations_on_frame(const Hypersurface& h, const PolyMatrix& frame,
                                                const Ring& frame_ring, std::vector<Monomial>* labels) {
  const std::size_t k = frame.size() - 1;
  const Polynomial restricted = restrict_to_plane(h, frame, frame_ring);
  std::vector<std::string> names = frame_ring.names();
  for (const auto& v : h.parameter_names()) names.push_back(v);
  const Ring eq_ring(h.field(), names);
  const auto coefficients = coefficients_in(restricted, s_names(k));
  std::vector<Polynomial> out;
  if (labels) labels->clear();
  for (const auto& e : exponent_vectors(k + 1, h.d())) {
    const Monomial m(e.begin(), e.end());
    const auto it = coefficients.find(m);
    out.push_back(it == coefficients.end() ? Polynomial(eq_ring) : it->second.in_ring(eq_ring));
    if (labels) labels->push_back(m);
  }
  return out;
}

bool FanoSystem::vanishes_at(const Matrix& a) const {
  if (ring.size() != chart_variables.size()) {
    throw PreconditionError("fano system: cannot evaluate a system with parameters at a chart matrix");
  }
  if (a.rows() != k + 1 || a.rows() * a.cols() != chart_variables.size()) {
    throw DimensionError("fano system: chart matrix has the wrong shape");
  }
  std::vector<Scalar> point;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) point.push_back(a(i, j));
  return std::all_of(equations.begin(), equations.end(),
                     [&](const Polynomial& e) { return e.evaluate(point).is_zero(); });
}

FanoSystem fano_equations(const Hypersurface& h, std::size_t k, const MultiIndex& chart) {
  if (chart.size() != k + 1) throw DimensionError("fano_equations: chart must have k+1 indices");
  if (chart.ambient() != h.n()) throw DimensionError("fano_equations: chart ambient dimension mismatch");
  if (k >= h.n()) throw DimensionError("fano_equations: need k < n");
  const MultiIndex rest = chart.complement();
  FanoSystem sys;
  sys.k = k;
  sys.chart = chart;
  for (std::size_t i = 1; i <= k + 1; ++i)
    for (std::size_t j : rest.indices()) sys.chart_variables.push_back(chart_variable(i, j));
  const Ring frame_ring(h.field(), sys.chart_variables);
  PolyMatrix frame(k + 1, std::vector<Polynomial>(h.n() + 1, Polynomial(frame_ring)));
  for (std::size_t i = 0; i <= k; ++i) {
    frame[i][chart.indices()[i] - 1] = Polynomial::constant(frame_ring, 1);
    for (std::size_t j : rest.indices()) frame[i][j - 1] = Polynomial::variable(frame_ring, chart_variable(i + 1, j));
  }
  sys.equations = fano_equations_on_frame(h, frame, frame_ring, &sys.s_monomials);
  std::vector<std::string> names = sys.chart_variables;
  for (const auto& v : h.parameter_names()) names.push_back(v);
  sys.ring = Ring(h.field(), names);
  return sys;
}

bool contains_plane(const Hypersurface& h, const PluckerPoint& p) {
  if (p.n() != h.n()) throw DimensionError("contains_plane: ambient dimension mismatch");
  return restrict_to_plane(h, frame_of(p)).is_zero();
}

mpz_class enumeration_work(const Hypersurface& h, std::size_t k) {
  mpz_class cells;
  mpz_ui_pow_ui(cells.get_mpz_t(), h.field().modulus(), (k + 1) * (h.n() - k));
  return cells * binomial(static_cast<long>(h.n() + 1), k + 1);
}

std::vector<PluckerPoint> enumerate_planes(const Hypersurface& h, std::size_t k, double budget) {
  if (!h.field().is_prime()) throw PreconditionError("enumerate_planes: needs a prime field");
  if (!h.parameter_names().empty()) throw PreconditionError("enumerate_planes: the form has parameters");
  if (k >= h.n()) throw DimensionError("enumerate_planes: need k < n");
  const mpz_class work = enumeration_work(h, k);
  if (mpz_class(budget) < work) {
    throw BudgetExceeded("enumerate_planes: work estimate " + work.get_str() + " exceeds the budget", work.get_str());
  }
  const Field& field = h.field();
  const std::uint64_t p = field.modulus();
  std::vector<PluckerPoint> found;
  for (const auto& chart : all_multi_indices(k + 1, h.n())) {
    const FanoSystem sys = fano_equations(h, k, chart);
    const MultiIndex complement = chart.complement();
    const auto& rest = complement.indices();
    const std::size_t width = rest.size();
    // Cell coordinates: entries right of the row's pivot; the rest are zero.
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t t = 0; t < width; ++t)
        if (rest[t] > chart.indices()[i]) free.push_back(i * width + t);
    std::vector<std::uint64_t> digits(free.size(), 0);
    std::vector<Scalar> point(sys.chart_variables.size(), field.zero());
    while (true) {
      for (std::size_t f = 0; f < free.size(); ++f) point[free[f]] = field.element(digits[f]);
      const bool on = std::all_of(sys.equations.begin(), sys.equations.end(),
                                  [&](const Polynomial& e) { return e.evaluate(point).is_zero(); });
      if (on) {
        Matrix a(field, k + 1, width);
        for (std::size_t i = 0; i <= k; ++i)
          for (std::size_t t = 0; t < width; ++t) a(i, t) = point[i * width + t];
        found.push_back(plucker_from_matrix(frame_from_chart(a, chart)));
      }
      std::size_t pos = free.size();
      while (pos > 0 && ++digits[pos - 1] == p) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return found;
}

std::string to_string(Smoothness s) {
  switch (s) {
    case Smoothness::smooth: return "smooth";
    case Smoothness::singular: return "singular";
    case Smoothness::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SmoothnessVerdict smooth_along_plane(const Hypersurface& h, const PluckerPoint& p, double budget) {
  if (!h.parameter_names().empty()) throw PreconditionError("smooth_along_plane: the form has parameters");
  if (!contains_plane(h, p)) throw PreconditionError("smooth_along_plane: the plane is not on the hypersurface");
  const PlaneFrame frame = frame_of(p);
  const Matrix& f = frame.matrix();
  const Field& field = h.field();
  const std::size_t k = p.k();
  if (h.d() == 1) return {Smoothness::smooth, std::nullopt, "hyperplanes are smooth"};
  std::vector<Polynomial> g;
  for (const auto& x : h.coordinate_names()) {
    const Polynomial partial = partial_derivative(h.form(), x);
    if (partial.is_zero()) continue;
    const Polynomial r = restrict_to_plane(Hypersurface(partial), frame);
    if (!r.is_zero()) g.push_back(r);
  }
  const auto singular_at = [&](const std::vector<Scalar>& s, std::string reason) {
    return SmoothnessVerdict{Smoothness::singular, point_on_plane(f, s), std::move(reason)};
  };
  std::vector<Scalar> first(k + 1, field.zero());
  first[0] = field.one();
  if (g.empty()) return singular_at(first, "all partial derivatives vanish on the plane");
  for (const auto& gi : g)
    if (gi.is_constant()) return {Smoothness::smooth, std::nullopt, "a partial derivative is a nonzero constant"};

  if (h.d() == 2) {
    Matrix linear(field, g.size(), k + 1);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (const auto& [m, c] : g[i].terms())
        for (std::size_t v = 0; v <= k; ++v)
          if (m[v] == 1) linear(i, v) = c;
    const auto kernel = kernel_basis(linear);
    if (kernel.empty()) return {Smoothness::smooth, std::nullopt, "the restricted partials have no common zero"};
    return singular_at(kernel.front(), "common zero of the restricted partials");
  }

  if (k == 1) {
    std::vector<Scalar> infinity{field.zero(), field.one()};
    if (all_vanish(g, infinity)) return singular_at(infinity, "common zero of the restricted partials");
    Univariate common;
    for (const auto& gi : g) common = gcd(common, dehomogenize(gi, field));
    if (common.size() <= 1) return {Smoothness::smooth, std::nullopt, "the restricted partials have constant gcd"};
    if (common.size() == 2) {
      return singular_at({field.one(), -common[0] / common[1]}, "common zero of the restricted partials");
    }
    if (field.is_prime()) {
      for (std::uint64_t t = 0; t < field.modulus(); ++t) {
        if (evaluate(common, field.element(t), field).is_zero()) {
          return singular_at({field.one(), field.element(t)}, "common zero of the restricted partials");
        }
      }
    } else if (auto t = rational_root(common, field)) {
      return singular_at({field.one(), *t}, "common zero of the restricted partials");
    }
    return {Smoothness::singular, std::nullopt,
            "the restricted partials share a nonconstant factor; no rational zero of it was found"};
  }

  if (!field.is_prime()) {
    return {Smoothness::inconclusive, std::nullopt, "no decision procedure for planes of dimension >= 2 over Q"};
  }
  const std::uint64_t q = field.modulus();
  mpz_class points = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), q, i);
    points += term;
  }
  if (mpz_class(budget) < points) {
    throw BudgetExceeded("smooth_along_plane: point search of size " + points.get_str() + " exceeds the budget", points.get_str());
  }
  // Normalized points of P^k: leading coordinate 1 at position lead.
  for (std::size_t lead = 0; lead <= k; ++lead) {
    const std::size_t tail = k - lead;
    std::vector<std::uint64_t> digits(tail, 0);
    while (true) {
      std::vector<Scalar> s(k + 1, field.zero());
      s[lead] = field.one();
      for (std::size_t t = 0; t < tail; ++t) s[lead + 1 + t] = field.element(digits[t]);
      if (all_vanish(g, s)) return singular_at(s, "common zero of the restricted partials");
      std::size_t pos = tail;
      while (pos > 0 && ++digits[pos - 1] == q) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return {Smoothness::inconclusive, std::nullopt,
          "no rational point of the plane is singular; points over extensions were not examined"};
}

}  // namespace fanokit
