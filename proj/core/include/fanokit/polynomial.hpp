#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fanokit/field.hpp"

namespace fanokit {

/// Exponent vector, one entry per ring variable.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order, largest first: higher total degree wins,
/// ties are broken lexicographically in the ring's variable order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// An ordered list of variable names over a field. Cheap to copy; rings with
/// the same field and names compare equal.
class Ring {
 public:
  /// The ring with no variables over Q.
  Ring() : Ring(Field::rationals(), {}) {}
  Ring(Field field, std::vector<std::string> names);

  /// Variables prefix<first>, ..., prefix<last>.
  static Ring indexed(Field field, std::string_view prefix, std::size_t first, std::size_t last);

  const Field& field() const noexcept { return impl_->field; }
  std::size_t size() const noexcept { return impl_->names.size(); }
  const std::vector<std::string>& names() const noexcept { return impl_->names; }
  const std::string& name(std::size_t i) const { return impl_->names.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws PreconditionError for unknown names.
  std::size_t index(std::string_view name) const;

  /// This ring's variables followed by `more`.
  Ring extended(const std::vector<std::string>& more) const;

  bool operator==(const Ring& other) const;
  bool operator!=(const Ring& other) const { return !(*this == other); }

 private:
  struct Impl {
    Field field;
    std::vector<std::string> names;
    std::map<std::string, std::size_t, std::less<>> lookup;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Sparse polynomial: a map from Monomial to nonzero coefficient, kept in
/// GrlexGreater order so the first term is the leading one.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(Ring ring);

  static Polynomial constant(const Ring& ring, const Scalar& c);
  static Polynomial constant(const Ring& ring, long c);
  static Polynomial variable(const Ring& ring, std::string_view name);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial term(const Ring& ring, Monomial m, const Scalar& c);

  const Ring& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of the given monomial (zero when absent).
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;

  /// Maximum total degree; nullopt for the zero polynomial.
  std::optional<unsigned> total_degree() const;
  /// Highest exponent of variable `var` (0 for the zero polynomial).
  unsigned degree_in(std::size_t var) const;
  /// Maximum over terms of the summed exponents of `vars`.
  unsigned degree_in(std::span<const std::size_t> vars) const;
  /// Minimum over terms of the summed exponents of `vars`.
  unsigned min_degree_in(std::span<const std::size_t> vars) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned e) const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Scalar& c);

  /// Evaluates at a full point (one value per ring variable).
  Scalar evaluate(std::span<const Scalar> point) const;

  /// The same polynomial in another ring, matching variables by name. Throws
  /// if a variable that occurs here is missing from `target` or the fields
  /// differ.
  Polynomial in_ring(const Ring& target) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  /// Text form accepted by parse_polynomial.
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;

  Ring ring_;
  Terms terms_;
};

/// Sentinel degree reported for the zero polynomial by is_homogeneous.
inline constexpr unsigned kAnyDegree = std::numeric_limits<unsigned>::max();

/// The common total degree of all terms, kAnyDegree for zero, nullopt if the
/// polynomial is not homogeneous.
std::optional<unsigned> is_homogeneous(const Polynomial& p);
/// Homogeneity counting only the exponents of `vars`.
std::optional<unsigned> is_homogeneous_in(const Polynomial& p, std::span<const std::size_t> vars);

/// Replaces every variable occurring in `p` by its image. All images must
/// live in `target`.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial, std::less<>>& assignment,
                      const Ring& target);
/// As above, taking the target ring from the images.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial, std::less<>>& assignment);

/// Iterated partial derivative d^order p / d var^order.
Polynomial partial_derivative(const Polynomial& p, std::string_view var, unsigned order = 1);

/// Coefficient of the monomial `m` (exponents aligned with `vars`) when `p`
/// is viewed as a polynomial in `vars`; the result involves only the
/// remaining variables and lives in p's ring.
Polynomial coefficient_of(const Polynomial& p, const std::vector<std::string>& vars, const Monomial& m);

/// All coefficients of `p` viewed as a polynomial in `vars`, keyed by the
/// exponent vector on `vars`.
std::map<Monomial, Polynomial, GrlexGreater> coefficients_in(const Polynomial& p,
                                                             const std::vector<std::string>& vars);

/// Remainder of `p` on division by `phi`, viewed as polynomials in `var`.
/// `phi`'s leading coefficient in `var` must be a nonzero constant; it is
/// scaled to 1 first.
Polynomial reduce_mod_monic(const Polynomial& p, const Polynomial& phi, std::string_view var);

/// Multiplies each term by a power of `var` to reach total degree `degree`.
Polynomial homogenize(const Polynomial& p, std::string_view var, unsigned degree);

/// Parses the text grammar: identifiers, integer or p/q literals, + - * ^
/// and parentheses. Unknown identifiers raise ParseError.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// Identifiers occurring in a polynomial text, in first-occurrence order.
std::vector<std::string> scan_identifiers(std::string_view text);

}  // namespace fanokit
