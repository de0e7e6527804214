#include "fanokit/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fanokit {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Ring::Ring(Field field, std::vector<std::string> names) {
  auto impl = std::make_shared<Impl>();
  impl->field = field;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw PreconditionError("empty variable name");
    if (!impl->lookup.emplace(names[i], i).second) {
      throw PreconditionError("duplicate variable name '" + names[i] + "'");
    }
  }
  impl->names = std::move(names);
  impl_ = std::move(impl);
}

Ring Ring::indexed(Field field, std::string_view prefix, std::size_t first, std::size_t last) {
  std::vector<std::string> names;
  for (std::size_t i = first; i <= last; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Ring(field, std::move(names));
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  auto it = impl_->lookup.find(name);
  if (it == impl_->lookup.end()) return std::nullopt;
  return it->second;
}

std::size_t Ring::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw PreconditionError("unknown variable '" + std::string(name) + "'");
}

Ring Ring::extended(const std::vector<std::string>& more) const {
  std::vector<std::string> names = impl_->names;
  names.insert(names.end(), more.begin(), more.end());
  return Ring(impl_->field, std::move(names));
}

bool Ring::operator==(const Ring& other) const {
  return impl_ == other.impl_ || (impl_->field == other.impl_->field && impl_->names == other.impl_->names);
}

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(const Ring& ring, const Scalar& c) {
  return term(ring, Monomial(ring.size(), 0), c);
}

Polynomial Polynomial::constant(const Ring& ring, long c) { return constant(ring, ring.field().from_int(c)); }

Polynomial Polynomial::variable(const Ring& ring, std::string_view name) { return variable(ring, ring.index(name)); }

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  Monomial m(ring.size(), 0);
  m.at(index) = 1;
  return term(ring, std::move(m), ring.field().one());
}

Polynomial Polynomial::term(const Ring& ring, Monomial m, const Scalar& c) {
  if (m.size() != ring.size()) throw DimensionError("monomial length does not match the ring");
  Polynomial p(ring);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && fanokit::total_degree(terms_.begin()->first) == 0);
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ring_.field().zero() : it->second;
}

Scalar Polynomial::constant_term() const { return coefficient(Monomial(ring_.size(), 0)); }

std::optional<unsigned> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return fanokit::total_degree(terms_.begin()->first);
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.at(var));
  return d;
}

unsigned Polynomial::degree_in(std::span<const std::size_t> vars) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (auto v : vars) s += m.at(v);
    d = std::max(d, s);
  }
  return d;
}

unsigned Polynomial::min_degree_in(std::span<const std::size_t> vars) const {
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (auto v : vars) s += m.at(v);
    d = std::min(d, s);
  }
  return terms_.empty() ? 0 : d;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (c.field() != ring_.field()) {
    terms_.erase(it);
    throw PreconditionError("coefficient from " + c.field().to_string() + " in a ring over " +
                            ring_.field().to_string());
  }
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_) throw PreconditionError("polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial out(a.ring_);
  Monomial m(a.ring_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_.size()) throw DimensionError("evaluation point has the wrong length");
  Scalar sum = ring_.field().zero();
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i] != 0) t *= point[i].pow(m[i]);
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::in_ring(const Ring& target) const {
  if (target == ring_) return *this;
  if (target.field() != ring_.field()) throw PreconditionError("in_ring: fields differ");
  std::vector<std::optional<std::size_t>> map(ring_.size());
  for (std::size_t i = 0; i < ring_.size(); ++i) map[i] = target.find(ring_.name(i));
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Monomial t(target.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i]) throw PreconditionError("variable '" + ring_.name(i) + "' is missing from the target ring");
      t[*map[i]] = m[i];
    }
    out.add_term(t, c);
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return ring_ == other.ring_ && terms_ == other.terms_;
}

std::optional<unsigned> is_homogeneous(const Polynomial& p) {
  std::vector<std::size_t> all(p.ring().size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return is_homogeneous_in(p, all);
}

std::optional<unsigned> is_homogeneous_in(const Polynomial& p, std::span<const std::size_t> vars) {
  if (p.is_zero()) return kAnyDegree;
  std::optional<unsigned> degree;
  for (const auto& [m, c] : p.terms()) {
    unsigned s = 0;
    for (auto v : vars) s += m.at(v);
    if (!degree) {
      degree = s;
    } else if (*degree != s) {
      return std::nullopt;
    }
  }
  return degree;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial, std::less<>>& assignment,
                      const Ring& target) {
  const Ring& source = p.ring();
  std::vector<const Polynomial*> image(source.size(), nullptr);
  std::vector<unsigned> max_exp(source.size(), 0);
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i) max_exp[i] = std::max(max_exp[i], m[i]);
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (max_exp[i] == 0) continue;
    auto it = assignment.find(source.name(i));
    if (it == assignment.end()) {
      throw PreconditionError("substitute: no image for variable '" + source.name(i) + "'");
    }
    if (it->second.ring() != target) throw PreconditionError("substitute: images live in different rings");
    image[i] = &it->second;
  }
  if (source.field() != target.field()) throw PreconditionError("substitute: fields differ");

  std::vector<std::vector<Polynomial>> powers(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (max_exp[i] == 0) continue;
    powers[i].push_back(Polynomial::constant(target, 1));
    for (unsigned e = 1; e <= max_exp[i]; ++e) powers[i].push_back(powers[i].back() * *image[i]);
  }
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i] != 0) t *= powers[i][m[i]];
    }
    out += t;
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial, std::less<>>& assignment) {
  if (assignment.empty()) {
    if (p.is_constant()) return p;
    throw PreconditionError("substitute: empty assignment for a non-constant polynomial");
  }
  return substitute(p, assignment, assignment.begin()->second.ring());
}

Polynomial partial_derivative(const Polynomial& p, std::string_view var, unsigned order) {
  if (order == 0) throw PreconditionError("partial_derivative: order must be at least 1");
  const std::size_t v = p.ring().index(var);
  const Field& field = p.ring().field();
  Polynomial out(p.ring());
  for (const auto& [m, c] : p.terms()) {
    if (m[v] < order) continue;
    Scalar factor = c;
    for (unsigned j = 0; j < order; ++j) factor *= field.from_int(static_cast<long>(m[v] - j));
    Monomial t = m;
    t[v] -= order;
    out.add_term(t, factor);
  }
  return out;
}

std::map<Monomial, Polynomial, GrlexGreater> coefficients_in(const Polynomial& p,
                                                             const std::vector<std::string>& vars) {
  std::vector<std::size_t> ids;
  for (const auto& v : vars) ids.push_back(p.ring().index(v));
  std::map<Monomial, Polynomial, GrlexGreater> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial key(ids.size());
    Monomial rest = m;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      key[i] = m[ids[i]];
      rest[ids[i]] = 0;
    }
    auto it = out.try_emplace(key, Polynomial(p.ring())).first;
    it->second.add_term(rest, c);
  }
  return out;
}

Polynomial coefficient_of(const Polynomial& p, const std::vector<std::string>& vars, const Monomial& m) {
  if (m.size() != vars.size()) throw DimensionError("coefficient_of: monomial length differs from variable list");
  auto all = coefficients_in(p, vars);
  auto it = all.find(m);
  return it == all.end() ? Polynomial(p.ring()) : it->second;
}

Polynomial reduce_mod_monic(const Polynomial& p, const Polynomial& phi, std::string_view var) {
  if (p.ring() != phi.ring()) throw PreconditionError("reduce_mod_monic: rings differ");
  if (phi.is_zero()) throw PreconditionError("reduce_mod_monic: division by zero");
  const std::size_t v = phi.ring().index(var);
  const unsigned top = phi.degree_in(v);
  std::vector<std::string> single{std::string(var)};
  Monomial lead_key{top};
  Polynomial lead = coefficient_of(phi, single, lead_key);
  if (!lead.is_constant()) {
    throw PreconditionError("reduce_mod_monic: leading coefficient in " + std::string(var) +
                            " is not a unit: " + lead.to_string());
  }
  const Polynomial monic = phi * lead.constant_term().inverse();

  Polynomial r = p;
  while (true) {
    // Pick a term of highest v-degree; stop once it is below deg_v(phi).
    const Monomial* pick = nullptr;
    for (const auto& [m, c] : r.terms()) {
      if (m[v] >= top && (pick == nullptr || m[v] > (*pick)[v])) pick = &m;
    }
    if (pick == nullptr) break;
    Monomial shift = *pick;
    shift[v] -= top;
    const Scalar c = r.terms().at(*pick);
    r -= Polynomial::term(r.ring(), shift, c) * monic;
  }
  return r;
}

Polynomial homogenize(const Polynomial& p, std::string_view var, unsigned degree) {
  const std::size_t v = p.ring().index(var);
  Polynomial out(p.ring());
  for (const auto& [m, c] : p.terms()) {
    const unsigned d = total_degree(m);
    if (d > degree) throw PreconditionError("homogenize: term degree exceeds the target degree");
    Monomial t = m;
    t[v] += degree - d;
    out.add_term(t, c);
  }
  return out;
}

}  // namespace fanokit
