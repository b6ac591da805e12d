#include "cliffpar/rational.hpp"

#include <cctype>

#include "cliffpar/errors.hpp"
#include "cliffpar/intmath.hpp"

namespace cliffpar {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(x.v_ / y.v_));
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ConfigError("empty rational literal");
  auto check_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!check_int(s)) throw ConfigError("malformed rational '" + s + "'");
      return Rational(mpz_class(s), 1);
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
      throw ConfigError("malformed rational '" + s + "'");
    return Rational(mpz_class(num), mpz_class(den));
  } catch (const std::invalid_argument&) {
    throw ConfigError("malformed rational '" + s + "'");
  }
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class squarefree_part(const Rational& x) {
  if (x.is_zero()) throw DomainError("squarefree part of zero is undefined");
  // x = n/d = n*d / d^2, so the squarefree part of x equals that of n*d.
  return squarefree_part_int(x.num() * x.den());
}

bool is_square(const Rational& x) {
  if (x.is_negative()) return false;
  if (x.is_zero()) return true;
  mpz_class n = x.num(), d = x.den();
  return mpz_perfect_square_p(n.get_mpz_t()) &&
         mpz_perfect_square_p(d.get_mpz_t());
}

}  // namespace cliffpar
