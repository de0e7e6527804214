#include "fanokit/field.hpp"

#include <cctype>

namespace fanokit {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic Miller-Rabin witnesses for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 62U) || !fanokit::is_prime(p)) {
    throw PreconditionError("field modulus " + std::to_string(p) + " is not a supported prime");
  }
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  if (p_ == 0) return Scalar(mpq_class(value));
  return Scalar::residue(value, p_);
}

Scalar Field::from_mpz(const mpz_class& value) const {
  if (p_ == 0) return Scalar(mpq_class(value));
  return Scalar::residue(static_cast<std::int64_t>(reduce(value, p_)), p_);
}

Scalar Field::from_mpq(const mpq_class& value) const {
  if (p_ == 0) return Scalar(value);
  Scalar num = from_mpz(value.get_num());
  Scalar den = from_mpz(value.get_den());
  if (den.is_zero()) {
    throw PreconditionError("denominator of " + value.get_str() + " vanishes in " + to_string());
  }
  return num / den;
}

Scalar Field::element(std::uint64_t i) const {
  if (p_ == 0) throw PreconditionError("element(i) requires a prime field");
  return Scalar::residue(static_cast<std::int64_t>(i % p_), p_);
}

Scalar Field::parse(std::string_view text) const {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string body(text.substr(begin, end - begin));
  if (body.empty()) throw ParseError("empty number", begin);
  std::size_t i = 0;
  if (body[0] == '-' || body[0] == '+') i = 1;
  bool seen_slash = false;
  bool digit_run = false;
  for (; i < body.size(); ++i) {
    char c = body[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_run = true;
    } else if (c == '/' && !seen_slash && digit_run) {
      seen_slash = true;
      digit_run = false;
    } else {
      throw ParseError("invalid character '" + std::string(1, c) + "' in number", begin + i);
    }
  }
  if (!digit_run) throw ParseError("incomplete number '" + body + "'", begin + body.size());
  mpq_class q;
  if (q.set_str(body[0] == '+' ? body.substr(1) : body, 10) != 0) {
    throw ParseError("invalid number '" + body + "'", begin);
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + body + "'", begin);
  q.canonicalize();
  return from_mpq(q);
}

std::string Field::to_string() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::residue(std::int64_t value, std::uint64_t p) {
  Scalar s;
  std::int64_t m = value % static_cast<std::int64_t>(p);
  if (m < 0) m += static_cast<std::int64_t>(p);
  s.value_ = Residue{static_cast<std::uint64_t>(m), p};
  return s;
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1 % r->modulus;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw PreconditionError("rational() called on a prime-field element");
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw PreconditionError("residue() called on a rational");
}

void Scalar::check_same_field(const Scalar& other) const {
  if (value_.index() != other.value_.index()) {
    throw PreconditionError("mixing rational and prime-field scalars");
  }
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->modulus != std::get<Residue>(other.value_).modulus) {
      throw PreconditionError("mixing scalars from different prime fields");
    }
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    if (r->value != 0) r->value = r->modulus - r->value;
  } else {
    mpq_class& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = r->value + std::get<Residue>(other.value_).value;
    if (s >= r->modulus) s -= r->modulus;
    r->value = s;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t b = std::get<Residue>(other.value_).value;
    r->value = r->value >= b ? r->value - b : r->value + r->modulus - b;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = mul_mod(r->value, std::get<Residue>(other.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = pow_mod(r->value, r->modulus - 2, r->modulus);
  } else {
    mpq_class& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  }
  return out;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = field().one();
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

bool Scalar::operator==(const Scalar& other) const {
  if (value_.index() != other.value_.index()) return false;
  if (const auto* r = std::get_if<Residue>(&value_)) {
    const auto& o = std::get<Residue>(other.value_);
    return r->modulus == o.modulus && r->value == o.value;
  }
  return std::get<mpq_class>(value_) == std::get<mpq_class>(other.value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace fanokit
