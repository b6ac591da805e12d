// Acceptance suite: end-to-end verification of every guaranteed property at
// its contracted sample count, with zero arithmetic tolerance. Default
// algebra: quaternions with a = b = -1 over the rationals; seed 42.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cliffpar/orbits.hpp"
#include "cliffpar/suites.hpp"
#include "cliffpar/textio.hpp"

using namespace cliffpar;

namespace {

using Q = Quat<Rational>;
using S = Subspace<Rational>;
using QF = Quat<F2RatFun>;
using SF = Subspace<F2RatFun>;

constexpr std::uint64_t kSeed = 42;
constexpr long kHeight = 8;

struct Criterion {
  int id;
  std::string title;
  std::function<void(std::vector<std::string>&)> run;
};

#define REQUIRE_THAT(cond, message)                       \
  do {                                                    \
    if (!(cond)) {                                        \
      failures.push_back(message);                        \
      return;                                             \
    }                                                     \
  } while (0)

QuatAlgebra hamilton() {
  return make_quaternion_algebra(Rational(-1), Rational(-1));
}

TagMap proper_tagging() {
  TagMap tags;
  tags.default_tag = Side::right;
  tags.exceptional[mpz_class(-1)] = Side::left;
  return tags;
}

const Q one = Q::one();
const Q qi = Q::basis(1);
const Q qj = Q::basis(2);
const Q qk = Q::basis(3);

// ---------------------------------------------------------------------------

std::string points_textify(const S& a, const S& b, const S& c) {
  return subspace_str(a) + " / " + subspace_str(b) + " / " + subspace_str(c);
}

void criterion_ds(std::vector<std::string>& failures) {
  QuatAlgebra alg = hamilton();
  auto worked = ds_check(alg, S::point(one), S::point(qi), S::point(qj));
  REQUIRE_THAT(worked.common && *worked.common == S::point(qk),
               "worked triangle (F1, Fi, Fj) did not meet at Fk");
  SplitMix64 rng = suite_stream(kSeed, "acceptance-ds");
  for (int n = 0; n < 1000; ++n) {
    auto tri = sample_triangle<Rational>(rng, kHeight);
    auto out = ds_check(alg, tri[0], tri[1], tri[2]);
    REQUIRE_THAT(out.common.has_value(),
                 "axiom violated at triangle " +
                     points_textify(tri[0], tri[1], tri[2]));
  }
}

void criterion_parallel_axioms(std::vector<std::string>& failures) {
  QuatAlgebra alg = hamilton();
  CliffordLikeParallelism cl = build_parallelism(alg, proper_tagging());
  SplitMix64 rng = suite_stream(kSeed, "acceptance-parallel");
  for (int n = 0; n < 200; ++n) {
    S p = sample_point<Rational>(rng, kHeight);
    S l = sample_star_line<Rational>(rng, kHeight);
    Side side = cl.side_of(l);
    S t = line_through_in_class(alg, p, l, side);
    REQUIRE_THAT(t.contains(p) && is_parallel(cl, t, l),
                 "through-line failed for p = " + subspace_str(p) +
                     ", L = " + subspace_str(l));
    int competitors = 0;
    while (competitors < 20) {
      S cand = join(p, sample_point<Rational>(rng, kHeight));
      if (!cand.is_line()) continue;
      ++competitors;
      if (competitors == 20) {
        // Make the last competitor adversarial: the other-side
        // through-line of the same star line.
        cand = line_through_in_class(alg, p, star_rep(alg, l, other(side)),
                                     other(side));
      }
      REQUIRE_THAT(!(cand != t && is_parallel(cl, cand, l)),
                   "uniqueness failed: second parallel through " +
                       subspace_str(p));
    }
  }
  for (int n = 0; n < 200; ++n) {
    S m = sample_line<Rational>(rng, kHeight);
    S nn = parallel_line_through(cl, sample_point<Rational>(rng, kHeight), m);
    S pp = parallel_line_through(cl, sample_point<Rational>(rng, kHeight), nn);
    bool equivalence = is_parallel(cl, m, m) && is_parallel(cl, m, nn) &&
                       is_parallel(cl, nn, m) && is_parallel(cl, nn, pp) &&
                       is_parallel(cl, m, pp);
    REQUIRE_THAT(equivalence,
                 "equivalence relation failed at M = " + subspace_str(m));
    S r = sample_line<Rational>(rng, kHeight);
    REQUIRE_THAT(is_parallel(cl, m, r) == is_parallel(cl, r, m),
                 "symmetry failed at M = " + subspace_str(m));
  }
}

void criterion_invariant_classes(std::vector<std::string>& failures) {
  QuatAlgebra alg = hamilton();
  std::vector<Q> gs = {qi, one + qi,
                       Q(Rational(1), Rational(2), Rational(3), Rational(0)),
                       qj + qk};
  SplitMix64 rng = suite_stream(kSeed, "acceptance-invariant");
  for (const Q& g : gs) {
    InvariantClassProfile profile = invariant_right_classes(alg, g);
    for (int n = 0; n < 500; ++n) {
      S l = sample_star_line<Rational>(rng, kHeight);
      bool direct = is_invariant_right_class(alg, g, l);
      bool conditions = profile_allows(profile, l);
      REQUIRE_THAT(direct == conditions,
                   "mismatch at g = " + quat_str(g) +
                       ", L = " + subspace_str(l));
    }
  }
}

void criterion_conjugacy(std::vector<std::string>& failures) {
  QuatAlgebra alg = hamilton();
  SplitMix64 rng = suite_stream(kSeed, "acceptance-conjugacy");
  for (int n = 0; n < 300; ++n) {
    Q q = sample_quat<Rational>(rng, kHeight);
    Q h = sample_unit(alg, rng, kHeight);
    Q q2 = alg.mul(alg.mul(alg.inverse(h), q), h);
    auto c = conjugator(alg, q, q2);
    REQUIRE_THAT(c.has_value(), "conjugate pair refused: q = " + quat_str(q));
    REQUIRE_THAT(alg.mul(alg.mul(alg.inverse(*c), q), *c) == q2,
                 "conjugator failed verification: q = " + quat_str(q));
  }
  for (int n = 0; n < 300; ++n) {
    Q q = sample_quat<Rational>(rng, kHeight);
    Q h = sample_unit(alg, rng, kHeight);
    Q q2 = alg.mul(alg.mul(alg.inverse(h), q), h);
    Q bad = (n % 2 == 0) ? q2 + one : Rational(2) * q2;  // trace or norm moves
    REQUIRE_THAT(!are_conjugate(alg, q, bad) && !conjugator(alg, q, bad),
                 "perturbed pair accepted: q = " + quat_str(q));
  }
}

void criterion_orbit_quadric(std::vector<std::string>& failures) {
  QuatAlgebra alg = hamilton();
  std::vector<Q> qs = {one + qi, Rational(2) * one + qj, one + qi + qj + qk};
  SplitMix64 rng = suite_stream(kSeed, "acceptance-quadric");
  for (const Q& q : qs) {
    REQUIRE_THAT(!omega(alg, q, one).is_zero(),
                 "unit point on the quadric of " + quat_str(q));
    REQUIRE_THAT(!omega_polar_gram_det(alg, q).is_zero(),
                 "degenerate polar form at " + quat_str(q));
    for (int n = 0; n < 100; ++n) {
      Q h = sample_unit(alg, rng, kHeight);
      Q x = alg.mul(alg.mul(alg.inverse(h), q), h);
      REQUIRE_THAT(omega(alg, q, x).is_zero(),
                   "orbit point off the quadric at q = " + quat_str(q));
    }
    for (int n = 0; n < 100; ++n) {
      S l = sample_star_line<Rational>(rng, kHeight);
      int cuts = star_line_quadric_intersections(alg, q, l);
      REQUIRE_THAT(cuts == 0 || cuts == 2,
                   "tangent star line at q = " + quat_str(q) +
                       ", L = " + subspace_str(l));
    }
  }
}

void criterion_orbit_density(std::vector<std::string>& failures) {
  QuatAlgebra alg = hamilton();
  const S base = S::span({one, qi});
  SplitMix64 rng = suite_stream(kSeed, "acceptance-density");
  for (int n = 0; n < 20; ++n) {
    Q h = sample_unit(alg, rng, kHeight);
    Mat4<Rational> fwd = inner_automorphism_matrix(alg, h);
    Mat4<Rational> back = inner_automorphism_matrix(alg, alg.inverse(h));
    S moved = image(fwd, base);
    S plane_through_moved = sample_plane_through(rng, kHeight, moved);
    S plane = image(back, plane_through_moved);
    auto lines = orbit_lines_in_plane(alg, base, plane, 25);
    REQUIRE_THAT(lines.size() == 25, "too few orbit lines produced");
    for (std::size_t a = 0; a < lines.size(); ++a) {
      S in_random_plane = image(fwd, lines[a]);
      REQUIRE_THAT(plane_through_moved.contains(in_random_plane) &&
                       lines_conjugate(alg, in_random_plane, moved),
                   "produced line leaves the plane or the orbit");
      for (std::size_t b = a + 1; b < lines.size(); ++b)
        REQUIRE_THAT(lines[a] != lines[b], "orbit lines not distinct");
    }
  }
}

void criterion_altered_double_space(std::vector<std::string>& failures) {
  QuatAlgebra alg = hamilton();
  SplitMix64 rng = suite_stream(kSeed, "acceptance-altered");
  for (const Q& e : {qi, one + qj}) {
    auto rep = he_double_space_check(alg, e, rng, 200, kHeight);
    REQUIRE_THAT(rep.identities_ok,
                 "translation identities failed at e = " + quat_str(e));
    REQUIRE_THAT(rep.ok() && rep.agreements >= 200,
                 "parallel relations disagree at e = " + quat_str(e) + ": " +
                     rep.failure);
  }
  GenericMult<Rational> mult = as_mult(alg);
  auto family = star_line_family(alg.unit(), rng, kHeight, 16);
  REQUIRE_THAT(prop_two_check(mult, mult, family).verdict ==
                   PropTwoVerdict::identical,
               "an algebra does not share two classes with itself");
}

void criterion_class_stability(std::vector<std::string>& failures) {
  QuatAlgebra alg = hamilton();
  CliffordLikeParallelism all_left = build_parallelism(alg, {Side::left, {}});
  CliffordLikeParallelism all_right = build_parallelism(alg, {Side::right, {}});
  CliffordLikeParallelism proper = build_parallelism(alg, proper_tagging());
  SplitMix64 rng = suite_stream(kSeed, "acceptance-stability");
  for (int n = 0; n < 50; ++n) {
    Q g = sample_noncentral_quat<Rational>(rng, kHeight);
    REQUIRE_THAT(lambda_fixes_all_classes(all_left, g).fixes_all,
                 "left translation moved a left class: g = " + quat_str(g));
    REQUIRE_THAT(rho_fixes_all_classes(all_right, g).fixes_all,
                 "right translation moved a right class: g = " + quat_str(g));
    auto res = lambda_fixes_all_classes(proper, g);
    REQUIRE_THAT(!res.fixes_all && res.witness.has_value(),
                 "proper parallelism reported stable under g = " + quat_str(g));
    REQUIRE_THAT(audit_stability_witness(proper, g, *res.witness, Side::left),
                 "witness failed audit at g = " + quat_str(g) +
                     ", witness = " + subspace_str(*res.witness));
  }
  for (int n = 0; n < 10; ++n) {
    Rational c = sample_rational(rng, kHeight);
    if (c.is_zero()) c = Rational(1);
    Q g = Q::scalar(c);
    REQUIRE_THAT(lambda_fixes_all_classes(proper, g).fixes_all &&
                     rho_fixes_all_classes(proper, g).fixes_all,
                 "central translation failed to fix classes: g = " +
                     quat_str(g));
  }
}

void criterion_single_class(std::vector<std::string>& failures) {
  QuatAlgebra alg = hamilton();
  SplitMix64 rng = suite_stream(kSeed, "acceptance-single");
  for (int n = 0; n < 50; ++n) {
    Q g = sample_noncentral_quat<Rational>(rng, kHeight);
    if (alg.trace(g).is_zero()) g = g + one;
    SingleClassReport rep = single_class_fixer_profile(alg, g, rng, 10);
    REQUIRE_THAT(rep.ok, "single-class profile failed at g = " + quat_str(g) +
                             ": " + rep.failure);
    REQUIRE_THAT(rep.class_line == S::span({one, g}),
                 "wrong stabilised class at g = " + quat_str(g));
  }
}

void criterion_case_b(std::vector<std::string>& failures) {
  QuarticAlgebra alg = make_quartic_field(F2RatFun::s(), F2RatFun::t());
  SplitMix64 rng = suite_stream(kSeed, "acceptance-case-b");
  const long hb = 2;
  for (int n = 0; n < 500; ++n) {
    QF h = sample_quat<F2RatFun>(rng, hb);
    QF sq = alg.mul(h, h);
    REQUIRE_THAT(sq.is_central_scalar() && sq[0] == alg.norm(h),
                 "square left the centre at h = " + quat_str(h));
  }
  for (int n = 0; n < 200; ++n) {
    SF m = sample_line<F2RatFun>(rng, hb);
    SF p = (n % 2 == 0)
               ? translate(alg, sample_unit(alg, rng, hb), m,
                           n % 4 == 0 ? Side::left : Side::right)
               : sample_line<F2RatFun>(rng, hb);
    REQUIRE_THAT(is_parallel_side(alg, m, p, Side::left) ==
                     is_parallel_side(alg, m, p, Side::right),
                 "left/right parallel tests disagree at M = " +
                     subspace_str(m));
  }
  for (int n = 0; n < 200; ++n) {
    auto tri = sample_triangle<F2RatFun>(rng, hb);
    REQUIRE_THAT(ds_check(alg, tri[0], tri[1], tri[2]).common.has_value(),
                 "axiom violated over the quartic field");
  }
}

void criterion_decomposition(std::vector<std::string>& failures) {
  QuatAlgebra alg = hamilton();
  SplitMix64 rng = suite_stream(kSeed, "acceptance-decompose");
  for (int n = 0; n < 100; ++n) {
    Q g = sample_quat<Rational>(rng, kHeight);
    Q h = sample_quat<Rational>(rng, kHeight);
    Mat4<Rational> beta = translation_matrix(alg, g, Side::left) *
                          inner_automorphism_matrix(alg, h);
    SkolemNoetherParts parts = skolem_noether_decompose(alg, beta);
    REQUIRE_THAT(parts.g == g,
                 "translation part not recovered at g = " + quat_str(g));
    REQUIRE_THAT(S::span({parts.h, h}).dim() == 1,
                 "inner part off by more than a scalar at h = " + quat_str(h));
    REQUIRE_THAT(translation_matrix(alg, parts.g, Side::left) *
                         inner_automorphism_matrix(alg, parts.h) ==
                     beta,
                 "recomposition mismatch at g = " + quat_str(g));
  }
  int rejected = 0;
  while (rejected < 10) {
    // Random invertible maps are essentially never multiplicative; the
    // library must reject them with a membership error.
    Mat4<Rational> t;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) t.a[r][c] = sample_rational(rng, 4);
    if (mat4_rank(t) != 4) continue;
    try {
      skolem_noether_decompose(alg, t);
      REQUIRE_THAT(false, "a random map decomposed unexpectedly");
    } catch (const MembershipError&) {
      ++rejected;
    }
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "double-space axiom on 1000 seeded triangles", criterion_ds},
      {2, "parallel axioms for the proper tagging", criterion_parallel_axioms},
      {3, "invariant right classes: test vs conditions", criterion_invariant_classes},
      {4, "element conjugacy and conjugators", criterion_conjugacy},
      {5, "point-orbit quadrics", criterion_orbit_quadric},
      {6, "orbit lines dense in planes", criterion_orbit_density},
      {7, "altered multiplication, same double space", criterion_altered_double_space},
      {8, "class stability under one-sided translations", criterion_class_stability},
      {9, "single stabilised class", criterion_single_class},
      {10, "purely inseparable quartic case", criterion_case_b},
      {11, "decomposition of linear class automorphisms", criterion_decomposition},
  };
  int failed = 0;
  for (auto& c : criteria) {
    std::vector<std::string> failures;
    try {
      c.run(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    if (failures.empty()) {
      std::printf("criterion %2d: PASS  %s\n", c.id, c.title.c_str());
    } else {
      ++failed;
      std::printf("criterion %2d: FAIL  %s\n", c.id, c.title.c_str());
      for (const auto& f : failures)
        std::printf("              %s\n", f.c_str());
    }
    std::fflush(stdout);
  }
  if (failed == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failed);
  return 1;
}
