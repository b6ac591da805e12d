#ifndef CLIFFPAR_RATIONAL_HPP_
#define CLIFFPAR_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cliffpar {

/// An exact rational number in canonical form: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. Immutable value type.
class Rational {
 public:
  static constexpr bool kCharTwo = false;

  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit for literals
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  /// Parses "p" or "p/q" with an optional leading sign. Throws ConfigError.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return v_ < 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational inverse() const;

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ + y.v_));
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ - y.v_));
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ * y.v_));
  }
  friend Rational operator/(const Rational& x, const Rational& y);

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.v_ == y.v_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) {
    return x.v_ != y.v_;
  }
  friend bool operator<(const Rational& x, const Rational& y) {
    return x.v_ < y.v_;
  }

  std::string str() const;

 private:
  mpq_class v_;
};

/// The unique squarefree integer d with x = d * y^2, y rational. x != 0.
mpz_class squarefree_part(const Rational& x);

/// Whether x is the square of a rational.
bool is_square(const Rational& x);

}  // namespace cliffpar

#endif  // CLIFFPAR_RATIONAL_HPP_
