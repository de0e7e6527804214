#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "fanokit/error.hpp"

namespace fanokit {

class Scalar;

/// The base field: either the rationals or a prime field F_p.
class Field {
 public:
  enum class Kind { rationals, prime };

  Field() = default;
  static Field rationals() { return Field{}; }
  /// Throws PreconditionError unless `p` is a prime below 2^62.
  static Field prime(std::uint64_t p);

  Kind kind() const noexcept { return p_ == 0 ? Kind::rationals : Kind::prime; }
  bool is_prime() const noexcept { return p_ != 0; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return p_; }
  /// Number of elements, or 0 for the rationals.
  std::uint64_t size() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_mpz(const mpz_class& value) const;
  Scalar from_mpq(const mpq_class& value) const;
  /// Residue with index `i` in [0, p); only for prime fields.
  Scalar element(std::uint64_t i) const;
  /// Parses "n" or "p/q" (optionally signed).
  Scalar parse(std::string_view text) const;

  /// "Q" or "F_p".
  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(mpq_class value);
  static Scalar residue(std::int64_t value, std::uint64_t p);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Throws PreconditionError for prime-field elements.
  const mpq_class& rational() const;
  /// Throws PreconditionError for rationals.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  /// "p/q", "n" or the residue in decimal.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  void check_same_field(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_;
};

bool is_prime(std::uint64_t n);

}  // namespace fanokit
