#ifndef CLIFFPAR_PARALLELISM_HPP_
#define CLIFFPAR_PARALLELISM_HPP_

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "cliffpar/algebra.hpp"
#include "cliffpar/subspace.hpp"

namespace cliffpar {

/// The unique line through the unit point in the left (right) parallel
/// class of `line`: m^{-1} * line (line * m^{-1}) for the first basis row m.
template <Multiplication M>
Subspace<typename M::Scalar> star_rep(const M& mult,
                                      const Subspace<typename M::Scalar>& line,
                                      Side side) {
  using K = typename M::Scalar;
  if (!line.is_line()) throw DomainError("star representative needs a line");
  Quat<K> m0 = line.row(0);
  Quat<K> minv = mult.inverse(m0);
  Subspace<K> rep = translate(mult, minv, line, side);
#ifndef NDEBUG
  // Well-definedness: any other nonzero element of the line gives the same
  // class representative.
  Quat<K> m1 = line.row(1);
  assert(translate(mult, mult.inverse(m1), line, side) == rep);
#endif
  return rep;
}

template <Multiplication M>
bool is_parallel_side(const M& mult, const Subspace<typename M::Scalar>& m,
                      const Subspace<typename M::Scalar>& n, Side side) {
  return star_rep(mult, m, side) == star_rep(mult, n, side);
}

/// The line through point p in the left (right) class of the star line L:
/// q*L (L*q) for a representative q of p.
template <Multiplication M>
Subspace<typename M::Scalar> line_through_in_class(
    const M& mult, const Subspace<typename M::Scalar>& p,
    const Subspace<typename M::Scalar>& star_line, Side side) {
  using K = typename M::Scalar;
  if (!p.is_point()) throw DomainError("through-line needs a point");
  if (!star_line.is_line() || !star_line.contains_vector(mult.unit()))
    throw DomainError("through-line needs a line through the unit point");
  Quat<K> q = p.row(0);
  return translate(mult, q, star_line, side);
}

/// Outcome of the double-space axiom instance on a triangle: the two
/// constructed lines and their common point. An empty `common` field
/// reports a falsified instance (it must never occur); it is data, not an
/// exception, so harnesses can aggregate attempts.
template <FieldScalar K>
struct DsOutcome {
  Subspace<K> m1, m2;
  std::optional<Subspace<K>> common;
};

template <Multiplication M>
DsOutcome<typename M::Scalar> ds_check(const M& mult,
                                       const Subspace<typename M::Scalar>& p0,
                                       const Subspace<typename M::Scalar>& p1,
                                       const Subspace<typename M::Scalar>& p2) {
  using K = typename M::Scalar;
  if (!p0.is_point() || !p1.is_point() || !p2.is_point())
    throw DomainError("the double-space axiom applies to three points");
  Subspace<K> all = join(join(p0, p1), p2);
  if (all.dim() != 3)
    throw DomainError("the three points must form a triangle");
  // M1: through p2, left parallel to p0 v p1. M2: through p1, right
  // parallel to p0 v p2.
  Subspace<K> j01 = join(p0, p1);
  Subspace<K> j02 = join(p0, p2);
  Subspace<K> m1 =
      line_through_in_class(mult, p2, star_rep(mult, j01, Side::left), Side::left);
  Subspace<K> m2 = line_through_in_class(mult, p1, star_rep(mult, j02, Side::right),
                                         Side::right);
  DsOutcome<K> out{m1, m2, std::nullopt};
  Subspace<K> common = intersect(m1, m2);
  if (common.dim() == 1) out.common = common;
  return out;
}

/// Kernel line of a right parallel class: the star line right parallel to
/// `line`; every left translation by one of its nonzero elements fixes each
/// line of the class.
template <Multiplication M>
Subspace<typename M::Scalar> right_class_kernel(
    const M& mult, const Subspace<typename M::Scalar>& line) {
  return star_rep(mult, line, Side::right);
}

/// Mirror image: the kernel of a left class consists of right translations
/// by the star line left parallel to `line`.
template <Multiplication M>
Subspace<typename M::Scalar> left_class_kernel(
    const M& mult, const Subspace<typename M::Scalar>& line) {
  return star_rep(mult, line, Side::left);
}

// ---------------------------------------------------------------------------
// Translation-invariant parallel classes (quaternion case).

/// The classes of the opposite parallelism invariant under a translation by
/// g on the given side. For side = left: the right classes invariant under
/// lambda_g are S_r(F1+Fg) and, exactly when tr(g) = 0, the classes of the
/// pencil of star lines inside the plane g^{-1}(F1)^perp.
struct InvariantClassProfile {
  Subspace<Rational> exceptional_line;
  bool pencil_present = false;
  std::optional<Subspace<Rational>> pencil_plane;
};

InvariantClassProfile invariant_right_classes(const QuatAlgebra& alg,
                                              const Quat<Rational>& g);

/// Mirror: left classes invariant under rho_g; the pencil plane becomes
/// (F1)^perp * g^{-1}.
InvariantClassProfile invariant_left_classes(const QuatAlgebra& alg,
                                             const Quat<Rational>& g);

/// Direct decision: lambda_g(S_r(L)) = S_r(L), i.e. g*L right parallel to L.
bool is_invariant_right_class(const QuatAlgebra& alg, const Quat<Rational>& g,
                              const Subspace<Rational>& star_line);

/// Direct decision: rho_g(S_l(L)) = S_l(L), i.e. L*g left parallel to L.
bool is_invariant_left_class(const QuatAlgebra& alg, const Quat<Rational>& g,
                             const Subspace<Rational>& star_line);

/// Whether a star line satisfies the profile conditions (exceptional line,
/// or inside the pencil plane when present). Must agree with the direct
/// decision on every star line.
bool profile_allows(const InvariantClassProfile& profile,
                    const Subspace<Rational>& star_line);

/// Incidence configuration of the objects F1, Fg, (F1)^perp, g^{-1}(F1)^perp
/// attached to a left translation, with every claimed incidence re-verified.
struct TranslationConfigReport {
  bool trace_zero = false;
  bool involution = false;  // lambda_g projectively involutory
  Subspace<Rational> exceptional_line;          // F1 + Fg
  Subspace<Rational> unit_perp_plane;           // (F1)^perp
  Subspace<Rational> shifted_plane;             // g^{-1}(F1)^perp
  Subspace<Rational> meet_with_unit_perp;       // point on (F1)^perp
  Subspace<Rational> meet_with_shifted_plane;   // point on g^{-1}(F1)^perp
  std::vector<std::string> failures;            // empty iff verified
  bool verified() const { return failures.empty(); }
};

TranslationConfigReport remark_cases_profile(const QuatAlgebra& alg,
                                             const Quat<Rational>& g);

}  // namespace cliffpar

#endif  // CLIFFPAR_PARALLELISM_HPP_
