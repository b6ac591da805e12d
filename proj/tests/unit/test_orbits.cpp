#include <doctest.h>

#include "cliffpar/orbits.hpp"

using namespace cliffpar;

namespace {

using Q = Quat<Rational>;
using S = Subspace<Rational>;

QuatAlgebra hamilton() { return make_quaternion_algebra(Rational(-1), Rational(-1)); }

const Q one = Q::one();
const Q i = Q::basis(1);
const Q j = Q::basis(2);
const Q k = Q::basis(3);

TagMap proper_tagging() {
  TagMap tags;
  tags.default_tag = Side::right;
  tags.exceptional[mpz_class(-1)] = Side::left;
  return tags;
}

}  // namespace

TEST_CASE("orbit quadric values") {
  QuatAlgebra alg = hamilton();
  Q q = one + i;
  CHECK(omega(alg, q, alg.conj(q)) == Rational(0));
  CHECK(omega(alg, q, q) == Rational(0));
  CHECK(omega(alg, q, one) == Rational(-4));
  CHECK_THROWS_AS(omega(alg, i, one), DomainError);
}

TEST_CASE("orbit membership of points") {
  QuatAlgebra alg = hamilton();
  CHECK(point_in_orbit(alg, one + i, S::point(one - i)));
  CHECK(!point_in_orbit(alg, one + i, S::point(one)));
  // The orbit of a central point is the single unit point.
  CHECK(point_in_orbit(alg, Rational(3) * one, S::point(Rational(3) * one)));
  SplitMix64 rng(61);
  for (int n = 0; n < 150; ++n) {
    Q q = sample_noncentral_quat<Rational>(rng, 6);
    if (alg.trace(q).is_zero()) q = q + one;
    Q h = sample_unit(alg, rng, 6);
    Q moved = alg.mul(alg.mul(alg.inverse(h), q), h);
    CHECK(point_in_orbit(alg, q, S::point(moved)));
    CHECK(omega(alg, q, moved) == Rational(0));
  }
}

TEST_CASE("orbit keys of star lines") {
  QuatAlgebra alg = hamilton();
  CHECK(line_orbit_key(alg, S::span({one, i})) == -1);
  CHECK(line_orbit_key(alg, S::span({one, i + j})) == -2);
  CHECK(line_orbit_key(alg, S::span({one, Rational(3) * i + Rational(4) * j})) ==
        -1);
  CHECK_THROWS_AS(line_orbit_key(alg, S::span({j, k})), DomainError);

  SUBCASE("independence of the spanning point") {
    SplitMix64 rng(63);
    for (int n = 0; n < 150; ++n) {
      Q q = sample_noncentral_quat<Rational>(rng, 6);
      Rational alpha = sample_rational(rng, 6);
      Rational beta = sample_rational(rng, 6);
      if (beta.is_zero()) beta = Rational(1);
      S l1 = S::span({one, q});
      S l2 = S::span({one, Q::scalar(alpha) + beta * q});
      CHECK(l1 == l2);
      CHECK(line_orbit_key(alg, l1) == line_orbit_key(alg, l2));
    }
  }
  SUBCASE("keys over a=b=-1 are negative") {
    SplitMix64 rng(65);
    for (int n = 0; n < 100; ++n) {
      S l = sample_star_line<Rational>(rng, 8);
      CHECK(line_orbit_key(alg, l) < 0);
    }
  }
}

TEST_CASE("line conjugacy matches the square-ratio criterion") {
  QuatAlgebra alg = hamilton();
  S li = S::span({one, i});
  CHECK(lines_conjugate(alg, li, S::span({one, Rational(3) * i + Rational(4) * j})));
  CHECK(!lines_conjugate(alg, li, S::span({one, i + j})));
  CHECK(lines_conjugate(alg, li, li));

  // Dual route: the ratio of pure-part norms must be a square exactly when
  // the keys agree; and conjugate lines admit an element conjugator.
  SplitMix64 rng(67);
  for (int n = 0; n < 150; ++n) {
    S l1 = sample_star_line<Rational>(rng, 6);
    S l2 = sample_star_line<Rational>(rng, 6);
    Rational ratio = alg.norm(l1.row(1)) / alg.norm(l2.row(1));
    CHECK(lines_conjugate(alg, l1, l2) == is_square(ratio));
  }
  SUBCASE("orbit coherence under inner automorphisms") {
    SplitMix64 rng2(69);
    for (int n = 0; n < 100; ++n) {
      S l = sample_star_line<Rational>(rng2, 6);
      Q h = sample_unit(alg, rng2, 6);
      S moved = image(inner_automorphism_matrix(alg, h), l);
      CHECK(lines_conjugate(alg, l, moved));
    }
  }
}

TEST_CASE("orbit lines inside a plane") {
  QuatAlgebra alg = hamilton();
  S li = S::span({one, i});
  S plane = S::span({one, i, j});
  SUBCASE("seed first") {
    auto lines = orbit_lines_in_plane(alg, li, plane, 1);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == li);
  }
  SUBCASE("three smallest") {
    auto lines = orbit_lines_in_plane(alg, li, plane, 3);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == li);
    CHECK(lines[1] == S::span({one, j}));
    CHECK(lines[2] == S::span({one, Rational(3) * i + Rational(4) * j}));
  }
  SUBCASE("many, all distinct, same orbit, in the plane") {
    auto lines = orbit_lines_in_plane(alg, li, plane, 30);
    REQUIRE(lines.size() == 30);
    for (std::size_t a = 0; a < lines.size(); ++a) {
      CHECK(star_membership(lines[a]));
      CHECK(plane.contains(lines[a]));
      CHECK(line_orbit_key(alg, lines[a]) == -1);
      for (std::size_t b = a + 1; b < lines.size(); ++b)
        CHECK(lines[a] != lines[b]);
    }
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(orbit_lines_in_plane(alg, S::span({j, k}), plane, 2),
                    DomainError);
    CHECK_THROWS_AS(orbit_lines_in_plane(alg, li, S::span({one, j, k}), 2),
                    DomainError);
  }
}

TEST_CASE("quadric intersection counts for star lines") {
  QuatAlgebra alg = hamilton();
  Q q = one + i;
  CHECK(star_line_quadric_intersections(alg, q, S::span({one, i})) == 2);
  CHECK(star_line_quadric_intersections(alg, q, S::span({one, i + j})) == 0);
  CHECK(!omega_polar_gram_det(alg, q).is_zero());
  SplitMix64 rng(71);
  for (const Q& qq : {one + i, Rational(2) * one + j, one + i + j + k}) {
    CHECK(!omega_polar_gram_det(alg, qq).is_zero());
    for (int n = 0; n < 100; ++n) {
      S l = sample_star_line<Rational>(rng, 6);
      int cuts = star_line_quadric_intersections(alg, qq, l);
      CHECK((cuts == 0 || cuts == 2));
    }
  }
}

TEST_CASE("building Clifford-like parallelisms") {
  QuatAlgebra alg = hamilton();
  TagMap bad;
  bad.exceptional[mpz_class(4)] = Side::left;
  CHECK_THROWS_AS(build_parallelism(alg, bad), DomainError);
  TagMap bad1;
  bad1.exceptional[mpz_class(1)] = Side::left;
  CHECK_THROWS_AS(build_parallelism(alg, bad1), DomainError);

  CliffordLikeParallelism proper = build_parallelism(alg, proper_tagging());
  CliffordLikeParallelism all_left =
      build_parallelism(alg, TagMap{Side::left, {}});
  CliffordLikeParallelism all_right =
      build_parallelism(alg, TagMap{Side::right, {}});

  S li = S::span({one, i});
  S translated = S::span({one + j, i - k});  // (1+j) * span(1,i): left class
  CHECK(is_parallel(proper, li, translated));
  CHECK(!is_parallel(all_right, li, translated));
  CHECK(is_parallel(all_left, li, translated));
  CHECK(is_parallel(proper, translated, translated));

  // Key -2 lines follow the default (right) tag under the proper tagging.
  S l2 = S::span({one, i + j});
  S right_translated = translate(alg, one + j, l2, Side::right);
  CHECK(is_parallel(proper, l2, right_translated));

  SUBCASE("tag coherence between the two star representatives") {
    SplitMix64 rng(73);
    for (int n = 0; n < 120; ++n) {
      S m = sample_line<Rational>(rng, 6);
      CHECK(line_orbit_key(alg, star_rep(alg, m, Side::left)) ==
            line_orbit_key(alg, star_rep(alg, m, Side::right)));
    }
  }
  SUBCASE("clifford-like implies left-or-right parallel") {
    SplitMix64 rng(75);
    for (int n = 0; n < 120; ++n) {
      S m = sample_line<Rational>(rng, 5);
      S p = parallel_line_through(proper, sample_point<Rational>(rng, 5), m);
      CHECK(is_parallel(proper, m, p));
      CHECK((is_parallel_side(alg, m, p, Side::left) ||
             is_parallel_side(alg, m, p, Side::right)));
    }
  }
}

TEST_CASE("stability of all classes under translations") {
  QuatAlgebra alg = hamilton();
  CliffordLikeParallelism proper = build_parallelism(alg, proper_tagging());
  CliffordLikeParallelism all_left =
      build_parallelism(alg, TagMap{Side::left, {}});
  CliffordLikeParallelism all_right =
      build_parallelism(alg, TagMap{Side::right, {}});

  CHECK(lambda_fixes_all_classes(all_left, i).fixes_all);
  CHECK(rho_fixes_all_classes(all_right, i).fixes_all);
  CHECK(lambda_fixes_all_classes(proper, Rational(5) * one).fixes_all);
  CHECK(rho_fixes_all_classes(proper, Rational(5) * one).fixes_all);

  auto res = lambda_fixes_all_classes(proper, i);
  CHECK(!res.fixes_all);
  REQUIRE(res.witness.has_value());
  CHECK(audit_stability_witness(proper, i, *res.witness, Side::left));
  // The witness is right-tagged and sits outside both allowed families.
  CHECK(line_orbit_key(alg, *res.witness) != -1);
  CHECK(*res.witness != S::span({one, i}));

  auto res2 = rho_fixes_all_classes(proper, i);
  CHECK(!res2.fixes_all);
  REQUIRE(res2.witness.has_value());
  CHECK(audit_stability_witness(proper, i, *res2.witness, Side::right));

  auto res3 = lambda_fixes_all_classes(all_right, one + i);
  CHECK(!res3.fixes_all);
  CHECK(audit_stability_witness(all_right, one + i, *res3.witness, Side::left));

  CHECK_THROWS_AS(lambda_fixes_all_classes(proper, Q::zero()), DomainError);
}

TEST_CASE("single stabilised class of a trace-nonzero translation") {
  QuatAlgebra alg = hamilton();
  SplitMix64 rng(77);
  SingleClassReport rep = single_class_fixer_profile(alg, one + i, rng, 10);
  CHECK(rep.ok);
  CHECK(rep.class_line == S::span({one, i}));

  SingleClassReport rep2 = single_class_fixer_profile(
      alg, one + Rational(2) * i + Rational(3) * j, rng, 10);
  CHECK(rep2.ok);
  CHECK(rep2.class_line ==
        S::span({one, Rational(2) * i + Rational(3) * j}));

  CHECK_THROWS_AS(single_class_fixer_profile(alg, i, rng, 5), DomainError);
  CHECK_THROWS_AS(single_class_fixer_profile(alg, Rational(2) * one, rng, 5),
                  DomainError);
}

TEST_CASE("shared classes force equal multiplications") {
  QuatAlgebra alg = hamilton();
  GenericMult<Rational> mult = as_mult(alg);
  SplitMix64 rng(79);
  auto family = star_line_family(alg.unit(), rng, 5, 10);

  CHECK(prop_two_check(mult, mult, family).verdict == PropTwoVerdict::identical);

  // Pullback along an inner automorphism: same multiplication table.
  Q h = one + j;
  GenericMult<Rational> via_auto =
      transported_mult(alg, inner_automorphism_matrix(alg, h));
  CHECK(prop_two_check(mult, via_auto, family).verdict ==
        PropTwoVerdict::identical);

  // Pullback along a unit-fixing non-automorphism: few shared classes,
  // never a violation.
  Mat4<Rational> t = Mat4<Rational>::identity();
  t.a[3][2] = Rational(1);
  GenericMult<Rational> skewed = transported_mult(alg, t);
  auto rep = prop_two_check(mult, skewed, family);
  CHECK(rep.verdict == PropTwoVerdict::inconclusive);
  CHECK(rep.shared_classes < 2);

  // Different units are rejected outright.
  CHECK_THROWS_AS(prop_two_check(mult, altered_mult(alg, i), family),
                  DomainError);
}

TEST_CASE("altered algebras induce the same double space") {
  QuatAlgebra alg = hamilton();
  SplitMix64 rng(81);
  for (const Q& e : {one, i, one + j}) {
    auto rep = he_double_space_check(alg, e, rng, 40, 5);
    CHECK(rep.identities_ok);
    CHECK(rep.ok());
  }
  CHECK_THROWS_AS(he_double_space_check(alg, Q::zero(), rng, 1, 5),
                  DomainError);
}
