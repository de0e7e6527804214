#include "fanokit/section.hpp"

#include <algorithm>
#include <random>

#include "fanokit/combinatorics.hpp"
#include "fanokit/semple.hpp"

namespace fanokit {

namespace {

/// F_{p^2} = F_p[t]/(t^2 - c1 t - c0).
class Fp2 {
 public:
  struct Element {
    std::uint64_t a = 0;  // a + b t
    std::uint64_t b = 0;
    bool is_zero() const { return a == 0 && b == 0; }
  };

  explicit Fp2(std::uint64_t p) : p_(p) {
    // t^2 - c1 t - c0 is irreducible iff it has no root in F_p.
    for (std::uint64_t c0 = 0; c0 < p; ++c0) {
      for (std::uint64_t c1 = 0; c1 < p; ++c1) {
        bool root = false;
        for (std::uint64_t x = 0; x < p && !root; ++x) root = sub(sub(mul(x, x), mul(c1, x)), c0) == 0;
        if (!root) {
          c0_ = c0;
          c1_ = c1;
          return;
        }
      }
    }
    throw PreconditionError("no irreducible quadratic over F_p");
  }

  std::uint64_t size() const { return p_ * p_; }
  Element element(std::uint64_t i) const { return {i % p_, i / p_}; }
  Element lift(const Scalar& s) const { return {s.residue(), 0}; }
  Element add(Element x, Element y) const { return {add(x.a, y.a), add(x.b, y.b)}; }
  Element mul(Element x, Element y) const {
    // (x.a + x.b t)(y.a + y.b t) with t^2 = c1 t + c0.
    const std::uint64_t bb = mul(x.b, y.b);
    return {add(mul(x.a, y.a), mul(bb, c0_)), add(add(mul(x.a, y.b), mul(x.b, y.a)), mul(bb, c1_))};
  }
  Element neg(Element x) const { return {sub(0, x.a), sub(0, x.b)}; }
  Element pow(Element x, std::uint64_t e) const {
    Element acc{1, 0};
    while (e) {
      if (e & 1) acc = mul(acc, x);
      x = mul(x, x);
      e >>= 1;
    }
    return acc;
  }
  Element inverse(Element x) const { return pow(x, p_ * p_ - 2); }

  Element evaluate(const Polynomial& poly, const std::vector<Element>& point) const {
    Element acc;
    for (const auto& [m, c] : poly.terms()) {
      Element term = lift(c);
      for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v]) term = mul(term, pow(point[v], m[v]));
      acc = add(acc, term);
    }
    return acc;
  }

  std::size_t rank(std::vector<std::vector<Element>> rows) const {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
      std::size_t pivot = r;
      while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[pivot], rows[r]);
      const Element inv = inverse(rows[r][c]);
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        const Element factor = neg(mul(rows[i][c], inv));
        for (std::size_t j = c; j < cols; ++j) rows[i][j] = add(rows[i][j], mul(factor, rows[r][j]));
      }
      ++r;
    }
    return r;
  }

  std::string to_string(Element x) const {
    return "(" + std::to_string(x.a) + "+" + std::to_string(x.b) + "t)";
  }

 private:
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const { return (x + y) % p_; }
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return (x + p_ - y) % p_; }
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
    __extension__ using Wide = unsigned __int128;
    return static_cast<std::uint64_t>(static_cast<Wide>(x) * y % p_);
  }

  std::uint64_t p_;
  std::uint64_t c0_ = 0;
  std::uint64_t c1_ = 0;
};

std::string lambda_variable(std::size_t i, std::size_t j) {
  return "l_" + std::to_string(i) + "_" + std::to_string(j);
}

/// Normalized representatives of P^{dim-1} over a field with q elements,
/// passed to `visit` as digit vectors (leading digit 1).
template <typename Visit>
void for_each_projective_point(std::size_t dim, std::uint64_t q, Visit visit) {
  for (std::size_t lead = 0; lead < dim; ++lead) {
    std::vector<std::uint64_t> digits(dim, 0);
    digits[lead] = 1;
    while (true) {
      visit(digits);
      std::size_t pos = dim;
      while (pos > lead + 1 && ++digits[pos - 1] == q) digits[--pos] = 0;
      if (pos == lead + 1) break;
    }
  }
}

mpz_class projective_count(std::size_t dim, std::uint64_t q) {
  mpz_class total = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), q, i);
    total += term;
  }
  return total;
}

}  // namespace

std::vector<Polynomial> SectionSystem::section(const std::vector<Scalar>& lambda) const {
  if (lambda.size() != lambda_ring.size()) throw DimensionError("section: wrong number of λ values");
  const Ring& ring = working.base().ring();
  std::vector<Polynomial> out;
  const std::size_t width = basis_psi.size();
  for (std::size_t i = 0; i < coordinate_count(); ++i) {
    Polynomial p(ring);
    for (std::size_t j = 0; j < width; ++j) {
      const Scalar& c = lambda[i * width + j];
      if (!c.is_zero()) p.add_term(basis_psi[j], c);
    }
    out.push_back(change.backward(p));
  }
  return out;
}

bool SectionSystem::satisfied_by(const std::vector<Scalar>& lambda) const {
  return std::all_of(raw_equations.begin(), raw_equations.end(),
                     [&](const Polynomial& e) { return e.evaluate(lambda).is_zero(); });
}

SectionSystem section_system(const HypersurfaceFamily& fam, std::size_t k, unsigned m) {
  const BaseVariety& base = fam.base();
  if (m <= base.degree()) throw PreconditionError("section_system: the ansatz degree m must exceed deg(phi)");
  if (k >= fam.n()) throw DimensionError("section_system: need k < n");
  const Field& field = base.field();
  const std::size_t r = base.r();
  const MonicChange change = make_monic(base.phi());
  const HypersurfaceFamily working = fam.transformed(change);
  const Ring& u_ring = working.base().ring();
  const std::string last = u_ring.names().back();

  std::vector<Monomial> basis;
  for (const auto& e : exponent_vectors(r + 2, m))
    if (e.back() < base.degree()) basis.emplace_back(e.begin(), e.end());

  const std::size_t n = fam.n();
  const Ring semple = semple_ring(k, n, field);
  const auto frame_of_ring = [&](const Ring& ring) {
    PolyMatrix frame(k + 1, std::vector<Polynomial>(n + 1, Polynomial(ring)));
    const Polynomial y = Polynomial::variable(ring, 0);
    for (std::size_t i = 0; i <= k; ++i) {
      frame[i][i] = y;
      for (std::size_t j = k + 1; j <= n; ++j) frame[i][j] = Polynomial::variable(ring, 1 + i * (n - k) + (j - k - 1));
    }
    return frame;
  };
  const PolyMatrix frame = frame_of_ring(semple);
  std::vector<Polynomial> fano_forms = fano_equations_on_frame(fam.total(), frame, semple);
  const std::vector<Polynomial> working_forms = fano_equations_on_frame(working.total(), frame, semple);

  std::vector<std::string> lambda_names;
  for (std::size_t i = 0; i < semple.size(); ++i)
    for (std::size_t j = 1; j <= basis.size(); ++j) lambda_names.push_back(lambda_variable(i, j));
  const Ring lambda_ring(field, lambda_names);
  const Ring target = lambda_ring.extended(u_ring.names());

  std::map<std::string, Polynomial, std::less<>> assignment;
  for (std::size_t i = 0; i < semple.size(); ++i) {
    Polynomial p(target);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Monomial mono(target.size(), 0);
      mono[i * basis.size() + j] = 1;
      std::copy(basis[j].begin(), basis[j].end(), mono.begin() + static_cast<std::ptrdiff_t>(lambda_names.size()));
      p.add_term(mono, field.one());
    }
    assignment.emplace(semple.name(i), std::move(p));
  }
  for (const auto& u : u_ring.names()) assignment.emplace(u, Polynomial::variable(target, u));
  const Polynomial phi = change.phi.in_ring(target);

  std::vector<Polynomial> raw;
  for (const auto& form : working_forms) {
    const Polynomial substituted = substitute(form, assignment, target);
    const Polynomial reduced = reduce_mod_monic(substituted, phi, last);
    for (const auto& [mono, coefficient] : coefficients_in(reduced, u_ring.names())) {
      if (!coefficient.is_zero()) raw.push_back(coefficient.in_ring(lambda_ring));
    }
  }

  const SectionCounts counts = section_lemma_counts(mpz_class(static_cast<unsigned long>(n)), fam.d(),
                                                    static_cast<unsigned>(r), mpz_class(static_cast<unsigned long>(k)),
                                                    mpz_class(m), mpz_class(base.degree()), mpz_class(fam.mu()));
  return SectionSystem{k,           m,       fam,         change, working, std::move(basis), semple,
                       std::move(fano_forms), lambda_ring, std::move(raw), counts};
}

SectionVerification verify_section(const SectionSystem& sys, const std::vector<Polynomial>& section,
                                   double budget) {
  const HypersurfaceFamily& fam = sys.family;
  const Field& field = fam.base().field();
  if (!field.is_prime()) throw PreconditionError("verify_section: needs a prime field");
  const std::uint64_t p = field.modulus();
  const std::size_t dim = fam.base().r() + 2;
  const std::size_t k = sys.k;
  const std::size_t n = fam.n();
  const mpz_class work = projective_count(dim, p * p);
  if (mpz_class(budget) < work) {
    throw BudgetExceeded("verify_section: " + work.get_str() + " base points exceed the budget", work.get_str());
  }
  SectionVerification out;

  for_each_projective_point(dim, p, [&](const std::vector<std::uint64_t>& digits) {
    if (!out.passed) return;
    std::vector<Scalar> w;
    for (auto v : digits) w.push_back(field.element(v));
    if (!fam.base().contains(w)) return;
    std::vector<Scalar> coords;
    bool zero = true;
    for (const auto& s : section) {
      coords.push_back(s.evaluate(w));
      zero = zero && coords.back().is_zero();
    }
    const bool degenerate_fibre = std::all_of(fam.coeffs().begin(), fam.coeffs().end(),
                                              [&](const auto& kv) { return kv.second.evaluate(w).is_zero(); });
    if (zero || degenerate_fibre) {
      ++out.prime_points_skipped;
      return;
    }
    const SempleChartPoint c = SempleChartPoint::from_coordinates(k, n, coords);
    const Matrix frame = semple_matrix(c);
    if (rank(frame) < k + 1) {
      ++out.prime_points_skipped;
      return;
    }
    const PluckerPoint plane = 2 * k < n ? semple_map(c) : plucker_from_matrix(PlaneFrame(frame));
    ++out.prime_points_checked;
    if (!contains_plane(fiber_at(fam, w), plane)) {
      out.passed = false;
      std::string where;
      for (const auto& s : w) where += (where.empty() ? "" : ":") + s.to_string();
      out.failure = "the plane of the section at [" + where + "] is not on the fibre";
    }
  });

  const Fp2 ext(p);
  for_each_projective_point(dim, p * p, [&](const std::vector<std::uint64_t>& digits) {
    if (!out.passed) return;
    std::vector<Fp2::Element> w;
    for (auto v : digits) w.push_back(ext.element(v));
    if (!ext.evaluate(fam.base().phi(), w).is_zero()) return;
    std::vector<Fp2::Element> point;
    bool zero = true;
    for (const auto& s : section) {
      point.push_back(ext.evaluate(s, w));
      zero = zero && point.back().is_zero();
    }
    const bool degenerate_fibre = std::all_of(fam.coeffs().begin(), fam.coeffs().end(),
                                              [&](const auto& kv) { return ext.evaluate(kv.second, w).is_zero(); });
    std::vector<std::vector<Fp2::Element>> rows(k + 1, std::vector<Fp2::Element>(n + 1));
    for (std::size_t i = 0; i <= k; ++i) {
      rows[i][i] = point[0];
      for (std::size_t j = k + 1; j <= n; ++j) rows[i][j] = point[1 + i * (n - k) + (j - k - 1)];
    }
    if (zero || degenerate_fibre || ext.rank(rows) < k + 1) {
      ++out.extension_points_skipped;
      return;
    }
    ++out.extension_points_checked;
    point.insert(point.end(), w.begin(), w.end());
    for (const auto& form : sys.fano_forms) {
      if (!ext.evaluate(form, point).is_zero()) {
        out.passed = false;
        std::string where;
        for (const auto& s : w) where += (where.empty() ? "" : ":") + ext.to_string(s);
        out.failure = "the plane of the section at [" + where + "] over F_p^2 is not on the fibre";
        return;
      }
    }
  });
  return out;
}

SectionSearchResult solve_section_brute(const SectionSystem& sys, const SectionSearchOptions& options) {
  const Field& field = sys.lambda_ring.field();
  if (!field.is_prime()) throw PreconditionError("solve_section_brute: needs a prime field");
  const std::uint64_t p = field.modulus();
  const std::size_t count = sys.lambda_ring.size();
  SectionSearchResult out;
  mpz_ui_pow_ui(out.work.get_mpz_t(), p, count);

  std::vector<std::uint64_t> digits(count, 0);
  std::vector<Scalar> lambda(count, field.zero());
  const auto load = [&] {
    for (std::size_t i = 0; i < count; ++i) lambda[i] = field.element(digits[i]);
  };
  const auto accept = [&] {
    out.lambda = lambda;
    out.section = sys.section(lambda);
    out.verification = verify_section(sys, out.section, options.budget);
  };

  if (options.random) {
    if (mpz_class(options.budget) < mpz_class(static_cast<unsigned long>(options.iterations))) {
      throw BudgetExceeded("solve_section_brute: iteration cap exceeds the budget",
                           std::to_string(options.iterations));
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
    for (std::uint64_t it = 0; it < options.iterations; ++it) {
      for (auto& d : digits) d = pick(rng);
      if (std::all_of(digits.begin(), digits.end(), [](std::uint64_t d) { return d == 0; })) continue;
      load();
      ++out.candidates;
      if (sys.satisfied_by(lambda)) {
        accept();
        return out;
      }
    }
    return out;
  }

  if (mpz_class(options.budget) < out.work) {
    throw BudgetExceeded("solve_section_brute: work estimate " + out.work.get_str() + " exceeds the budget",
                         out.work.get_str());
  }
  while (true) {
    std::size_t pos = count;
    while (pos > 0 && ++digits[pos - 1] == p) digits[--pos] = 0;
    if (pos == 0) break;
    load();
    ++out.candidates;
    if (sys.satisfied_by(lambda)) {
      accept();
      return out;
    }
  }
  return out;
}

}  // namespace fanokit
