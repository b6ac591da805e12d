#include "cliffpar/parallelism.hpp"

namespace cliffpar {

namespace {

using Q = Quat<Rational>;
using S = Subspace<Rational>;

void require_noncentral(const Q& g) {
  if (g.is_zero()) throw DomainError("translation element must be nonzero");
  if (g.is_central_scalar())
    throw DomainError("central g acts as the identical collineation");
}

}  // namespace

InvariantClassProfile invariant_right_classes(const QuatAlgebra& alg,
                                              const Q& g) {
  require_noncentral(g);
  InvariantClassProfile out;
  out.exceptional_line = S::span({Q::one(), g});
  out.pencil_present = alg.trace(g).is_zero();
  if (out.pencil_present) {
    S unit_perp = perp(alg, S::point(Q::one()));
    out.pencil_plane = translate(alg, alg.inverse(g), unit_perp, Side::left);
  }
  return out;
}

InvariantClassProfile invariant_left_classes(const QuatAlgebra& alg,
                                             const Q& g) {
  require_noncentral(g);
  InvariantClassProfile out;
  out.exceptional_line = S::span({Q::one(), g});
  out.pencil_present = alg.trace(g).is_zero();
  if (out.pencil_present) {
    S unit_perp = perp(alg, S::point(Q::one()));
    out.pencil_plane = translate(alg, alg.inverse(g), unit_perp, Side::right);
  }
  return out;
}

bool is_invariant_right_class(const QuatAlgebra& alg, const Q& g,
                              const S& star_line) {
  require_noncentral(g);
  if (!star_membership(star_line))
    throw DomainError("expected a line of the star");
  S moved = translate(alg, g, star_line, Side::left);
  return is_parallel_side(alg, moved, star_line, Side::right);
}

bool is_invariant_left_class(const QuatAlgebra& alg, const Q& g,
                             const S& star_line) {
  require_noncentral(g);
  if (!star_membership(star_line))
    throw DomainError("expected a line of the star");
  S moved = translate(alg, g, star_line, Side::right);
  return is_parallel_side(alg, moved, star_line, Side::left);
}

bool profile_allows(const InvariantClassProfile& profile, const S& star_line) {
  if (star_line == profile.exceptional_line) return true;
  return profile.pencil_present && profile.pencil_plane->contains(star_line);
}

TranslationConfigReport remark_cases_profile(const QuatAlgebra& alg,
                                             const Q& g) {
  require_noncentral(g);
  TranslationConfigReport r;
  auto fail = [&](const std::string& what) { r.failures.push_back(what); };

  const S unit_point = S::point(Q::one());
  const S g_point = S::point(g);
  r.trace_zero = alg.trace(g).is_zero();
  r.exceptional_line = S::span({Q::one(), g});
  r.unit_perp_plane = perp(alg, unit_point);
  r.shifted_plane = translate(alg, alg.inverse(g), r.unit_perp_plane, Side::left);

  if (unit_point == g_point) fail("F1 and Fg coincide");
  if (r.unit_perp_plane == r.shifted_plane)
    fail("(F1)^perp and g^-1(F1)^perp coincide");
  if (intersect(r.unit_perp_plane, r.shifted_plane) !=
      perp(alg, r.exceptional_line))
    fail("plane meet is not the polar line of F1+Fg");

  S meet1 = intersect(r.exceptional_line, r.unit_perp_plane);
  S meet2 = intersect(r.exceptional_line, r.shifted_plane);
  if (!meet1.is_point() || !meet2.is_point()) {
    fail("line meets a plane in unexpected dimension");
    return r;
  }
  r.meet_with_unit_perp = meet1;
  r.meet_with_shifted_plane = meet2;

  Q pure = g - alg.conj(g);  // g - conj(g), a trace-zero element
  if (r.trace_zero) {
    if (meet1 != g_point) fail("expected F1+Fg to meet (F1)^perp at Fg");
    if (meet2 != unit_point)
      fail("expected F1+Fg to meet g^-1(F1)^perp at F1");
  } else {
    if (meet1 != S::point(pure))
      fail("expected F1+Fg to meet (F1)^perp at F(g - conj g)");
    if (meet2 != S::point(alg.mul(alg.inverse(g), pure)))
      fail("expected F1+Fg to meet g^-1(F1)^perp at F(g^-1(g - conj g))");
    // Fg and the second meet point coincide exactly when tr(g)^2 = 2N(g)
    // (e.g. g = 1+i over a = b = -1), so no blanket distinctness is
    // asserted for the marked points beyond the ones below.
    if (meet1 == unit_point || meet1 == g_point)
      fail("meet with (F1)^perp collides with F1 or Fg");
    if (meet2 == unit_point) fail("meet with the shifted plane passes F1");
    if (meet1 == meet2) fail("the two meet points coincide");
  }
  if (intersect(r.exceptional_line, perp(alg, r.exceptional_line)).dim() != 0)
    fail("F1+Fg is not skew to its polar line");

  // lambda_g is a projective involution iff g^2 is central, i.e. tr(g) = 0.
  Mat4<Rational> sq = translation_matrix(alg, alg.mul(g, g), Side::left);
  r.involution = sq.is_scalar_multiple_of_identity();
  if (r.involution != r.trace_zero)
    fail("involution criterion disagrees with tr(g) = 0");
  return r;
}

}  // namespace cliffpar
