#include "cliffpar/orbits.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

#include "cliffpar/intmath.hpp"

namespace cliffpar {

namespace {

using Q = Quat<Rational>;
using S = Subspace<Rational>;

void require_trace_nonzero(const QuatAlgebra& alg, const Q& q) {
  if (alg.trace(q).is_zero())
    throw DomainError(
        "orbit quadric is defined away from the trace-zero plane");
}

/// Small-height rationals in the deterministic order 0, 1, -1, 1/2, -1/2,
/// 2, -2, 1/3, -1/3, 2/3, -2/3, 3/2, -3/2, 3, -3, ...
class RationalEnumerator {
 public:
  Rational next() {
    if (first_) {
      first_ = false;
      return Rational(0);
    }
    while (buffer_.empty()) refill();
    Rational r = buffer_.front();
    buffer_.pop_front();
    return r;
  }

 private:
  void refill() {
    ++height_;
    const long h = height_;
    auto emit = [&](long p, long q) {
      if (std::gcd(p, q) != 1) return;
      Rational r{mpz_class(p), mpz_class(q)};
      buffer_.push_back(r);
      buffer_.push_back(-r);
    };
    for (long p = 1; p <= h; ++p) emit(p, h);
    for (long q = h - 1; q >= 1; --q) emit(h, q);
  }

  bool first_ = true;
  long height_ = 0;
  std::deque<Rational> buffer_;
};

}  // namespace

Rational omega(const QuatAlgebra& alg, const Q& q, const Q& x) {
  require_trace_nonzero(alg, q);
  Rational tq = alg.trace(q), tx = alg.trace(x);
  return tq * tq * alg.norm(x) - alg.norm(q) * (tx * tx);
}

bool point_in_orbit(const QuatAlgebra& alg, const Q& q, const S& p) {
  if (!p.is_point()) throw DomainError("orbit membership applies to points");
  return omega(alg, q, p.row(0)).is_zero();
}

mpz_class line_orbit_key(const QuatAlgebra& alg, const S& star_line) {
  if (!star_membership(star_line))
    throw DomainError("orbit key applies to lines of the star");
  Q q = star_line.row(1);  // second echelon row: independent of 1
  // Integer primitive representative: scaling q by F* moves the
  // discriminant by squares only, and small inputs keep the squarefree
  // part cheap to certify.
  mpz_class scale = 1;
  for (int m = 0; m < 4; ++m) scale = lcm(scale, q[m].den());
  mpz_class content = 0;
  for (int m = 0; m < 4; ++m)
    content = gcd(content, q[m].num() * (scale / q[m].den()));
  q = Rational(scale, content) * q;
  Rational t = alg.trace(q);
  Rational disc = t * t - Rational(4) * alg.norm(q);
  if (disc.is_zero())
    throw DomainError("degenerate discriminant: algebra is not division");
  mpz_class key = squarefree_part(disc);
  if (key == 1)
    throw DomainError(
        "square discriminant: star line is not a field line (algebra is "
        "not division)");
  return key;
}

bool lines_conjugate(const QuatAlgebra& alg, const S& l1, const S& l2) {
  return line_orbit_key(alg, l1) == line_orbit_key(alg, l2);
}

Rational omega_polar_gram_det(const QuatAlgebra& alg, const Q& q) {
  require_trace_nonzero(alg, q);
  auto form = [&](const Q& x) { return omega(alg, q, x); };
  Mat4<Rational> gram;
  std::array<Q, 4> basis = {Q::basis(0), Q::basis(1), Q::basis(2),
                            Q::basis(3)};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      gram.a[i][j] =
          form(basis[i] + basis[j]) - form(basis[i]) - form(basis[j]);
    }
  }
  return mat4_det(gram);
}

int star_line_quadric_intersections(const QuatAlgebra& alg, const Q& q,
                                    const S& star_line) {
  require_trace_nonzero(alg, q);
  if (q.is_central_scalar())
    throw DomainError("the orbit of a central point is a single point");
  if (!star_membership(star_line))
    throw DomainError("intersection count applies to star lines");
  // Points of the line are alpha*1 + beta*r; omega restricts to
  // A alpha^2 + B alpha beta + C beta^2 with A = omega(1) != 0, so all
  // intersection points have beta != 0 and the count is the number of
  // rational roots of A x^2 + B x + C.
  Q r = star_line.row(1);
  Rational a_coef = omega(alg, q, Q::one());
  Rational c_coef = omega(alg, q, r);
  Rational b_coef = omega(alg, q, Q::one() + r) - a_coef - c_coef;
  if (a_coef.is_zero())
    throw DomainError("unit point lies on the orbit quadric");
  Rational disc = b_coef * b_coef - Rational(4) * a_coef * c_coef;
  if (disc.is_zero()) return 1;
  return is_square(disc) ? 2 : 0;
}

std::vector<S> orbit_lines_in_plane(const QuatAlgebra& alg, const S& star_line,
                                    const S& plane, int k) {
  if (!star_membership(star_line))
    throw DomainError("orbit line generation starts from a star line");
  if (!plane.is_plane() || !plane.contains(star_line))
    throw DomainError("the plane must contain the star line");
  if (k < 0) throw DomainError("negative count");
  std::vector<S> out;
  if (k == 0) return out;
  out.push_back(star_line);
  if (k == 1) return out;

  // A point of the line away from F1 and the trace-zero plane.
  Q q = Q::one() + star_line.row(1);

  auto quadric = [&](const Q& x) { return omega(alg, q, x); };
  auto polar = [&](const Q& x, const Q& y) {
    return quadric(x + y) - quadric(x) - quadric(y);
  };

  // Coordinates of q in the echelon basis of the plane: read off pivots.
  std::array<Rational, 3> zq;
  std::array<int, 3> pivots;
  for (int r = 0; r < 3; ++r) {
    Q row = plane.row(r);
    int p = 0;
    while (row[p].is_zero()) ++p;
    pivots[r] = p;
    zq[r] = q[p];
  }
  auto lift = [&](const std::array<Rational, 3>& z) {
    Q x;
    for (int r = 0; r < 3; ++r) x = x + z[r] * plane.row(r);
    return x;
  };
  if (lift(zq) != q)
    throw DomainError("internal: point does not lie in the plane");

  int lead = 0;
  while (zq[lead].is_zero()) ++lead;
  std::array<Rational, 3> d1{}, d2{};
  d1[(lead + 1) % 3] = Rational(1);
  d2[(lead + 2) % 3] = Rational(1);

  auto push_conic_point = [&](const Q& point_rep) {
    S line = S::span({Q::one(), point_rep});
    if (!line.is_line()) return;  // F1 itself cannot be on the quadric
    for (const auto& seen : out) {
      if (seen == line) return;
    }
    out.push_back(line);
  };

  // Second intersection of the conic with the line through q in direction v.
  auto chord = [&](const Q& v) {
    Rational qv = quadric(v);
    if (qv.is_zero()) {
      push_conic_point(v);
      return;
    }
    Rational bv = polar(q, v);
    if (bv.is_zero()) return;  // tangent direction at Fq
    push_conic_point(q - (bv / qv) * v);
  };

  chord(lift(d2));
  RationalEnumerator params;
  const long budget = 1000 + 64L * k;
  for (long step = 0; step < budget && static_cast<int>(out.size()) < k;
       ++step) {
    Rational t = params.next();
    std::array<Rational, 3> d;
    for (int r = 0; r < 3; ++r) d[r] = d1[r] + t * d2[r];
    chord(lift(d));
  }
  if (static_cast<int>(out.size()) < k)
    throw ResourceError("conic parameter budget exhausted");
  return out;
}

// ---------------------------------------------------------------------------

Side CliffordLikeParallelism::side_of(const S& line) const {
  S rep = star_rep(alg_, line, Side::left);
  return tags_.tag_of(line_orbit_key(alg_, rep));
}

CliffordLikeParallelism build_parallelism(const QuatAlgebra& alg,
                                          const TagMap& tags) {
  for (const auto& [key, side] : tags.exceptional) {
    if (key == 0) throw DomainError("orbit key 0 is invalid");
    if (key == 1)
      throw DomainError(
          "orbit key 1 is excluded: star lines have nonsquare discriminant");
    if (squarefree_part_int(key) != key)
      throw DomainError("orbit key " + key.get_str() + " is not squarefree");
  }
  return CliffordLikeParallelism(alg, tags);
}

bool is_parallel(const CliffordLikeParallelism& cl, const S& m, const S& n) {
  return is_parallel_side(cl.algebra(), m, n, cl.side_of(m));
}

S parallel_line_through(const CliffordLikeParallelism& cl, const S& p,
                        const S& line) {
  Side side = cl.side_of(line);
  return line_through_in_class(cl.algebra(), p,
                               star_rep(cl.algebra(), line, side), side);
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kWitnessSearchHeight = 16;

/// Deterministic enumeration of star lines F1 + F(0,c1,c2,c3) by height;
/// returns the first line whose orbit key carries `moved_tag` and which
/// violates both invariance conditions of `profile`.
std::optional<S> search_moved_class(const CliffordLikeParallelism& cl,
                                    const InvariantClassProfile& profile,
                                    Side moved_tag) {
  const QuatAlgebra& alg = cl.algebra();
  for (int h = 1; h <= kWitnessSearchHeight; ++h) {
    for (long c1 = -h; c1 <= h; ++c1) {
      for (long c2 = -h; c2 <= h; ++c2) {
        for (long c3 = -h; c3 <= h; ++c3) {
          if (std::max({std::abs(c1), std::abs(c2), std::abs(c3)}) != h)
            continue;
          if (std::gcd(std::gcd(std::abs(c1), std::abs(c2)), std::abs(c3)) !=
              1)
            continue;
          // One representative per projective class.
          long first = c1 != 0 ? c1 : (c2 != 0 ? c2 : c3);
          if (first < 0) continue;
          Q pure(Rational(0), Rational(c1), Rational(c2), Rational(c3));
          S line = S::span({Q::one(), pure});
          if (cl.tags().tag_of(line_orbit_key(alg, line)) != moved_tag)
            continue;
          if (profile_allows(profile, line)) continue;
          return line;
        }
      }
    }
  }
  return std::nullopt;
}

ClassStabilityResult fixes_all_classes(const CliffordLikeParallelism& cl,
                                       const Q& g, Side translation_side) {
  if (g.is_zero()) throw DomainError("translation element must be nonzero");
  ClassStabilityResult out;
  if (g.is_central_scalar()) {  // the projective identity
    out.fixes_all = true;
    return out;
  }
  // A left translation stabilises every left class; only right-tagged
  // classes can move (and mirrored for right translations).
  const Side moved_tag = other(translation_side);
  bool has_moved_tag = cl.tags().default_tag == moved_tag;
  for (const auto& [key, side] : cl.tags().exceptional) {
    has_moved_tag = has_moved_tag || side == moved_tag;
  }
  if (!has_moved_tag) {
    out.fixes_all = true;
    return out;
  }
  InvariantClassProfile profile =
      translation_side == Side::left
          ? invariant_right_classes(cl.algebra(), g)
          : invariant_left_classes(cl.algebra(), g);
  std::optional<S> witness = search_moved_class(cl, profile, moved_tag);
  if (witness) {
    out.fixes_all = false;
    out.witness = witness;
    return out;
  }
  // Tagged orbits may be empty (unrealizable keys), but that cannot be
  // certified within the bounded search.
  throw ResourceError(
      "no moved class found within the search bound; stability not "
      "certified");
}

}  // namespace

ClassStabilityResult lambda_fixes_all_classes(const CliffordLikeParallelism& cl,
                                              const Q& g) {
  return fixes_all_classes(cl, g, Side::left);
}

ClassStabilityResult rho_fixes_all_classes(const CliffordLikeParallelism& cl,
                                           const Q& g) {
  return fixes_all_classes(cl, g, Side::right);
}

bool audit_stability_witness(const CliffordLikeParallelism& cl, const Q& g,
                             const S& witness, Side translation_side) {
  const QuatAlgebra& alg = cl.algebra();
  if (!star_membership(witness)) return false;
  Side moved_tag = other(translation_side);
  if (cl.tags().tag_of(line_orbit_key(alg, witness)) != moved_tag)
    return false;
  InvariantClassProfile profile = translation_side == Side::left
                                      ? invariant_right_classes(alg, g)
                                      : invariant_left_classes(alg, g);
  if (profile_allows(profile, witness)) return false;
  // Direct re-check that the class really moves.
  bool invariant = translation_side == Side::left
                       ? is_invariant_right_class(alg, g, witness)
                       : is_invariant_left_class(alg, g, witness);
  return !invariant;
}

SingleClassReport single_class_fixer_profile(const QuatAlgebra& alg, const Q& g,
                                             SplitMix64& rng,
                                             std::uint64_t samples) {
  if (g.is_zero() || g.is_central_scalar())
    throw DomainError("g must generate a nontrivial translation");
  if (alg.trace(g).is_zero())
    throw DomainError("g must lie outside the trace-zero plane");
  SingleClassReport out;
  out.class_line = S::span({Q::one(), g});

  InvariantClassProfile profile = invariant_right_classes(alg, g);
  if (profile.pencil_present) {
    out.failure = "unexpected pencil for trace-nonzero g";
    return out;
  }
  // Exactness: with no pencil, the exceptional line is the only candidate,
  // so S_r(F1+Fg) is the unique invariant right class. Samples re-verify.
  if (!is_invariant_right_class(alg, g, out.class_line)) {
    out.failure = "the exceptional class is not invariant";
    return out;
  }
  const long hb = 5;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Q c = sample_unit(alg, rng, hb);
    S member = translate(alg, c, out.class_line, Side::right);
    if (translate(alg, g, member, Side::left) != member) {
      out.failure = "a line of the exceptional class moved";
      return out;
    }
    ++out.fixed_line_samples;
    S otherline = sample_star_line<Rational>(rng, hb);
    if (otherline == out.class_line) continue;
    if (is_invariant_right_class(alg, g, otherline)) {
      out.failure = "a second right class is invariant";
      return out;
    }
    ++out.moved_other_classes;
  }
  out.ok = true;
  return out;
}

}  // namespace cliffpar
