#include <doctest.h>

#include "cliffpar/sampling.hpp"
#include "cliffpar/subspace.hpp"

using namespace cliffpar;

namespace {

using Q = Quat<Rational>;
using S = Subspace<Rational>;

QuatAlgebra hamilton() { return make_quaternion_algebra(Rational(-1), Rational(-1)); }

const Q one = Q::one();
const Q i = Q::basis(1);
const Q j = Q::basis(2);
const Q k = Q::basis(3);

}  // namespace

TEST_CASE("span canonical form") {
  S l = S::span({one + i, i});
  CHECK(l.dim() == 2);
  CHECK(l == S::span({one, i}));
  CHECK(l.row(0) == one);
  CHECK(l.row(1) == i);

  CHECK(S::span({}).dim() == 0);
  CHECK(S::span({one, i, j}).dim() == 3);
  CHECK(S::span({Q::zero()}).dim() == 0);

  // Invertibly recombined bases span the same canonical subspace.
  SplitMix64 rng(31);
  for (int n = 0; n < 100; ++n) {
    Q x = sample_quat<Rational>(rng, 6);
    Q y = sample_quat<Rational>(rng, 6);
    Rational c = sample_rational(rng, 6);
    CHECK(S::span({x, y}) == S::span({y, x + c * y}));
  }
}

TEST_CASE("intersection and the Grassmann identity") {
  CHECK(intersect(S::span({j, k}), S::span({one, i})).dim() == 0);
  CHECK(intersect(S::span({one, i, j}), S::span({one, i, k})) ==
        S::span({one, i}));
  S l = S::span({one + j, i - k});
  CHECK(intersect(l, l) == l);

  SplitMix64 rng(33);
  for (int n = 0; n < 200; ++n) {
    std::vector<Q> gens1, gens2;
    for (std::uint64_t m = rng.below(4); m > 0; --m)
      gens1.push_back(sample_quat<Rational>(rng, 5));
    for (std::uint64_t m = rng.below(4); m > 0; --m)
      gens2.push_back(sample_quat<Rational>(rng, 5));
    S s1 = S::span(gens1), s2 = S::span(gens2);
    CHECK(join(s1, s2).dim() + intersect(s1, s2).dim() == s1.dim() + s2.dim());
    CHECK(join(s1, s2).contains(s1));
    CHECK(s1.contains(intersect(s1, s2)));
  }
}

TEST_CASE("incidence") {
  CHECK(incident(S::point(one), S::span({one, i})));
  CHECK(!incident(S::span({one, i}), S::span({j, k})));
  S s = S::span({one, i + j});
  CHECK(incident(s, s));
}

TEST_CASE("trace bilinear form") {
  QuatAlgebra alg = hamilton();
  CHECK(bilinear(alg, one, one) == Rational(2));
  CHECK(bilinear(alg, i, j) == Rational(0));
  CHECK(bilinear(alg, i, i) == Rational(2));
  SplitMix64 rng(35);
  for (int n = 0; n < 100; ++n) {
    Q x = sample_quat<Rational>(rng, 6);
    Q y = sample_quat<Rational>(rng, 6);
    CHECK(bilinear(alg, x, y) == bilinear(alg, y, x));
    CHECK(bilinear(alg, x, x) == Rational(2) * alg.norm(x));
  }
  QuarticAlgebra b = make_quartic_field(F2RatFun::s(), F2RatFun::t());
  CHECK_THROWS_AS(bilinear(b, Quat<F2RatFun>::one(), Quat<F2RatFun>::one()),
                  UnsupportedCaseError);
}

TEST_CASE("polarity") {
  QuatAlgebra alg = hamilton();
  CHECK(perp(alg, S::point(one)) == S::span({i, j, k}));
  CHECK(perp(alg, S::span({one, i})) == S::span({j, k}));
  CHECK(perp(alg, perp(alg, S::span({one, j}))) == S::span({one, j}));

  SplitMix64 rng(37);
  for (int n = 0; n < 150; ++n) {
    S s1 = sample_line<Rational>(rng, 5);
    S s2 = join(s1, sample_point<Rational>(rng, 5));
    CHECK(s1.dim() + perp(alg, s1).dim() == 4);
    CHECK(perp(alg, perp(alg, s1)) == s1);
    // Inclusion-reversing.
    CHECK(perp(alg, s2).dim() <= perp(alg, s1).dim());
    CHECK(perp(alg, s1).contains(perp(alg, s2)));
  }
}

TEST_CASE("star membership") {
  CHECK(star_membership(S::span({one, i})));
  CHECK(!star_membership(S::span({j, k})));
  CHECK(!star_membership(S::span({one + j, i - k})));
  CHECK(!star_membership(S::point(one)));
}

TEST_CASE("star lines are closed under the algebra operations") {
  QuatAlgebra alg = hamilton();
  SplitMix64 rng(39);
  for (int n = 0; n < 100; ++n) {
    S l = sample_star_line<Rational>(rng, 6);
    Q q = l.row(1);
    CHECK(l.contains_vector(alg.mul(q, q)));
    CHECK(l.contains_vector(alg.inverse(q)));
    Q p = l.row(0) + alg.mul(q, q);
    CHECK(l.contains_vector(alg.mul(p, q)));
  }
}

TEST_CASE("subspaces over the rational function field") {
  using SF = Subspace<F2RatFun>;
  using QF = Quat<F2RatFun>;
  F2RatFun s = F2RatFun::s(), t = F2RatFun::t();
  QF x(s, F2RatFun::one(), F2RatFun::zero(), F2RatFun::zero());
  QF y(F2RatFun::zero(), t, F2RatFun::one(), F2RatFun::zero());
  SF l = SF::span({x, y});
  CHECK(l.dim() == 2);
  CHECK(l.contains_vector(x + y));
  CHECK(intersect(l, l) == l);
  SplitMix64 rng(41);
  for (int n = 0; n < 50; ++n) {
    SF s1 = sample_line<F2RatFun>(rng, 1);
    SF s2 = sample_line<F2RatFun>(rng, 1);
    CHECK(join(s1, s2).dim() + intersect(s1, s2).dim() ==
          s1.dim() + s2.dim());
  }
}
