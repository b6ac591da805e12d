#ifndef CLIFFPAR_F2FIELD_HPP_
#define CLIFFPAR_F2FIELD_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliffpar {

/// Univariate polynomial over GF(2) in the indeterminate t.
/// Coefficient bits packed into 64-bit words; bit i of word k is the
/// coefficient of t^(64k+i). The top word is nonzero (trimmed).
class Gf2Poly {
 public:
  Gf2Poly() = default;
  explicit Gf2Poly(std::vector<std::uint64_t> words) : w_(std::move(words)) {
    trim();
  }
  static Gf2Poly one() { return Gf2Poly({1}); }
  static Gf2Poly monomial(int deg);

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return w_.empty(); }
  bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
  bool coeff(int i) const {
    std::size_t k = static_cast<std::size_t>(i) / 64;
    return i >= 0 && k < w_.size() && ((w_[k] >> (i % 64)) & 1);
  }

  friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b);
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) {
    return a.w_ == b.w_;
  }

  /// Quotient and remainder; b must be nonzero.
  static std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a,
                                            const Gf2Poly& b);
  /// Exact quotient; throws if b does not divide a.
  static Gf2Poly exact_div(const Gf2Poly& a, const Gf2Poly& b);
  static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

 private:
  void trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
  }
  std::vector<std::uint64_t> w_;
};

/// Bivariate polynomial over GF(2): dense in the s-degree, with GF(2)[t]
/// coefficients.
class Gf2BiPoly {
 public:
  Gf2BiPoly() = default;
  explicit Gf2BiPoly(std::vector<Gf2Poly> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static Gf2BiPoly one();
  static Gf2BiPoly monomial(int sdeg, int tdeg);  // s^sdeg * t^tdeg
  static Gf2BiPoly constant(const Gf2Poly& p);

  int degree_s() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const Gf2Poly& coeff_s(int i) const;

  friend Gf2BiPoly operator+(const Gf2BiPoly& a, const Gf2BiPoly& b);
  friend Gf2BiPoly operator*(const Gf2BiPoly& a, const Gf2BiPoly& b);
  friend bool operator==(const Gf2BiPoly& a, const Gf2BiPoly& b) {
    return a.c_ == b.c_;
  }

  /// gcd of all s-coefficients, an element of GF(2)[t].
  Gf2Poly content() const;
  Gf2BiPoly primitive_part() const;
  static Gf2BiPoly gcd(const Gf2BiPoly& a, const Gf2BiPoly& b);
  /// Exact quotient; throws if b does not divide a.
  static Gf2BiPoly exact_div(const Gf2BiPoly& a, const Gf2BiPoly& b);

  /// Monomials (s-exponent, t-exponent) with nonzero coefficient, in the
  /// canonical print order: total degree descending, then s-degree
  /// descending.
  std::vector<std::pair<int, int>> monomials() const;

  /// All exponents even in both variables, i.e. a square in GF(2)[s,t].
  bool is_frobenius_square() const;
  /// Halves every exponent; requires is_frobenius_square().
  Gf2BiPoly frobenius_sqrt() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Gf2Poly> c_;
};

/// An element of GF(2)(s,t): a reduced fraction of bivariate polynomials.
/// Canonical form: denominator nonzero, gcd(num, den) = 1 (the only unit
/// of GF(2)[s,t] is 1, so no further normalisation is needed).
class F2RatFun {
 public:
  static constexpr bool kCharTwo = true;

  F2RatFun() : num_(), den_(Gf2BiPoly::one()) {}
  F2RatFun(Gf2BiPoly num, Gf2BiPoly den);

  static F2RatFun zero() { return F2RatFun(); }
  static F2RatFun one();
  static F2RatFun s();  // the indeterminate s
  static F2RatFun t();  // the indeterminate t
  static F2RatFun from_poly(const Gf2BiPoly& p);

  /// Parses "poly", "term/term", or "(poly)/(poly)"; see str().
  static F2RatFun parse(std::string_view text);

  const Gf2BiPoly& num() const { return num_; }
  const Gf2BiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  F2RatFun operator-() const { return *this; }  // characteristic two
  F2RatFun inverse() const;

  friend F2RatFun operator+(const F2RatFun& x, const F2RatFun& y);
  friend F2RatFun operator-(const F2RatFun& x, const F2RatFun& y) {
    return x + y;
  }
  friend F2RatFun operator*(const F2RatFun& x, const F2RatFun& y);
  friend F2RatFun operator/(const F2RatFun& x, const F2RatFun& y);
  friend bool operator==(const F2RatFun& x, const F2RatFun& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const F2RatFun& x, const F2RatFun& y) {
    return !(x == y);
  }

  /// Canonical text form. Monomial order: total degree descending, then
  /// s-degree descending. A fraction with a multi-term numerator or
  /// denominator parenthesises that side, e.g. "(s^2*t + 1)/(s + t)".
  std::string str() const;

 private:
  Gf2BiPoly num_, den_;
};

/// Frobenius criterion: a reduced fraction is a square in GF(2)(s,t) iff
/// numerator and denominator have only even exponents.
bool is_square(const F2RatFun& x);

}  // namespace cliffpar

#endif  // CLIFFPAR_F2FIELD_HPP_
