#include <array>

#include "cliffpar/algebra.hpp"
#include "cliffpar/intmath.hpp"

namespace cliffpar {

bool is_division(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero())
    throw DomainError("structure constants must be nonzero");
  if (!a.is_integer() || !b.is_integer())
    throw DomainError("division check requires integer structure constants");
  return quaternion_algebra_is_division(a.num(), b.num());
}

QuatAlgebra make_quaternion_algebra(const Rational& a, const Rational& b) {
  if (!is_division(a, b))
    throw DomainError("(" + a.str() + ", " + b.str() +
                      ") is not a division algebra over the rationals");
  return QuatAlgebra(a, b);
}

namespace {

// Coordinates of f over the subfield of squares w.r.t. the basis
// {1, s, t, st}: f = P/Q = PQ/Q^2, and PQ splits by exponent parity.
std::array<F2RatFun, 4> square_subfield_coordinates(const F2RatFun& f) {
  Gf2BiPoly n = f.num() * f.den();
  Gf2BiPoly den2 = f.den() * f.den();
  std::array<Gf2BiPoly, 4> parts;  // 1, s, t, st
  for (const auto& [i, j] : n.monomials()) {
    int x = i % 2, y = j % 2;
    parts[x + 2 * y] = parts[x + 2 * y] + Gf2BiPoly::monomial(i - x, j - y);
  }
  std::array<F2RatFun, 4> out;
  for (int m = 0; m < 4; ++m) out[m] = F2RatFun(parts[m], den2);
  return out;
}

}  // namespace

bool validate_case_b(const F2RatFun& a, const F2RatFun& b) {
  if (a.is_zero() || b.is_zero())
    throw DomainError("structure constants must be nonzero");
  // {1, a, b, ab} is independent over GF(2)(s^2,t^2) iff the matrix of
  // coordinates w.r.t. {1, s, t, st} has full rank; all entries lie in the
  // subfield, so the rank may be computed in GF(2)(s,t).
  std::array<F2RatFun, 4> elements = {F2RatFun::one(), a, b, a * b};
  Matrix<F2RatFun> rows;
  for (const auto& e : elements) {
    auto coords = square_subfield_coordinates(e);
    rows.push_back({coords[0], coords[1], coords[2], coords[3]});
  }
  return rref_in_place(rows).size() == 4;
}

QuarticAlgebra make_quartic_field(const F2RatFun& a, const F2RatFun& b) {
  if (!validate_case_b(a, b))
    throw DomainError("(" + a.str() + ", " + b.str() +
                      ") does not generate a quartic extension of GF(2)(s,t)");
  return QuarticAlgebra(a, b);
}

}  // namespace cliffpar
