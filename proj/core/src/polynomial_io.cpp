#include <cctype>
#include <set>
#include <sstream>

#include "fanokit/polynomial.hpp"

namespace fanokit {

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool rational = !ring_.field().is_prime();
  for (const auto& [m, c] : terms_) {
    bool negative = rational && c.rational() < 0;
    Scalar magnitude = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool constant = fanokit::total_degree(m) == 0;
    bool wrote = false;
    if (constant || !magnitude.is_one()) {
      os << magnitude.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << ring_.name(i);
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip();
    if (!at_end()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = product();
    while (true) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Polynomial product() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (!at_end() && digit(text_[pos_])) ++pos_;
      if (start == pos_) throw ParseError("expected a non-negative integer exponent", start);
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (digit(c)) return number();
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (!at_end() && ident_char(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto index = ring_.find(name);
      if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring_, *index);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  Polynomial number() {
    const std::size_t start = pos_;
    while (!at_end() && digit(text_[pos_])) ++pos_;
    if (!at_end() && text_[pos_] == '/' && pos_ + 1 < text_.size() && digit(text_[pos_ + 1])) {
      ++pos_;
      while (!at_end() && digit(text_[pos_])) ++pos_;
    }
    const std::string_view literal = text_.substr(start, pos_ - start);
    try {
      return Polynomial::constant(ring_, ring_.field().parse(literal));
    } catch (const ParseError& e) {
      throw ParseError("invalid literal '" + std::string(literal) + "'", start + e.position());
    } catch (const PreconditionError& e) {
      throw ParseError(std::string(e.what()), start);
    }
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

std::vector<std::string> scan_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::set<std::string, std::less<>> seen;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i])) {
      const std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string name(text.substr(start, i - start));
      if (seen.insert(name).second) out.push_back(std::move(name));
    } else if (digit(text[i])) {
      while (i < text.size() && ident_char(text[i])) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace fanokit
