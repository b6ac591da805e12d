#include "cliffpar/suites.hpp"

#include <chrono>

#include "cliffpar/textio.hpp"

namespace cliffpar {

namespace {

using QR = Quat<Rational>;
using SR = Subspace<Rational>;

// --- small conveniences -----------------------------------------------------

template <FieldScalar K>
std::string points_text(const Subspace<K>& p0, const Subspace<K>& p1,
                        const Subspace<K>& p2) {
  return "p0 = " + subspace_str(p0) + " | p1 = " + subspace_str(p1) +
         " | p2 = " + subspace_str(p2);
}

const QuatAlgebra* require_case_a(const SuiteConfig& cfg, CheckRecord& rec) {
  if (cfg.quaternion_algebra) return &*cfg.quaternion_algebra;
  rec.verdict = Verdict::inconclusive;
  rec.reason = "requires the quaternion case";
  return nullptr;
}

QR adjusted_trace_nonzero(const QuatAlgebra& alg, QR g) {
  if (alg.trace(g).is_zero()) g = g + QR::one();
  return g;
}

// --- ds ---------------------------------------------------------------------

template <Multiplication M>
void ds_core(const M& mult, SplitMix64& rng, long hb, std::uint64_t n,
             CheckRecord& rec) {
  using K = typename M::Scalar;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto tri = sample_triangle<K>(rng, hb);
    DsOutcome<K> out = ds_check(mult, tri[0], tri[1], tri[2]);
    if (!out.common) {
      rec.verdict = Verdict::fail;
      rec.reason = "double-space axiom violated";
      rec.counterexample = points_text(tri[0], tri[1], tri[2]);
      return;
    }
    ++rec.samples;
  }
  rec.verdict = Verdict::pass;
}

void ds_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t n = cfg.samples_for(rec.name);
  if (cfg.quaternion_algebra) {
    ds_core(*cfg.quaternion_algebra, rng, cfg.height_bound, n, rec);
  } else {
    ds_core(*cfg.quartic_algebra, rng, cfg.height_bound, n, rec);
  }
}

// --- parallel-axioms ---------------------------------------------------------

void parallel_axioms_case_a(const QuatAlgebra& alg,
                            const CliffordLikeParallelism& cl,
                            SplitMix64& rng, long hb, std::uint64_t n,
                            CheckRecord& rec) {
  for (std::uint64_t i = 0; i < n; ++i) {
    SR p = sample_point<Rational>(rng, hb);
    SR l = sample_star_line<Rational>(rng, hb);
    Side side = cl.side_of(l);
    SR t = line_through_in_class(alg, p, l, side);
    if (!t.contains(p) || !is_parallel(cl, t, l)) {
      rec.verdict = Verdict::fail;
      rec.reason = "through-line misses the point or its class";
      rec.counterexample =
          "p = " + subspace_str(p) + " | L = " + subspace_str(l);
      return;
    }
    // Uniqueness among sampled competitors through p, including the
    // opposite-side through-line.
    std::vector<SR> competitors;
    for (int c = 0; c < 4; ++c) {
      SR cand = join(p, sample_point<Rational>(rng, hb));
      if (cand.is_line()) competitors.push_back(cand);
    }
    competitors.push_back(
        line_through_in_class(alg, p, star_rep(alg, l, other(side)), other(side)));
    for (const SR& cand : competitors) {
      if (cand != t && is_parallel(cl, cand, l)) {
        rec.verdict = Verdict::fail;
        rec.reason = "two distinct parallels through one point";
        rec.counterexample =
            "p = " + subspace_str(p) + " | L = " + subspace_str(l) +
            " | competitor = " + subspace_str(cand);
        return;
      }
    }
    // Equivalence-relation samples.
    SR m = sample_line<Rational>(rng, hb);
    SR nn = parallel_line_through(cl, sample_point<Rational>(rng, hb), m);
    SR pp = parallel_line_through(cl, sample_point<Rational>(rng, hb), nn);
    SR rr = sample_line<Rational>(rng, hb);
    bool ok = is_parallel(cl, m, m) && is_parallel(cl, m, nn) &&
              is_parallel(cl, nn, m) && is_parallel(cl, m, pp) &&
              (is_parallel(cl, m, rr) == is_parallel(cl, rr, m));
    if (!ok) {
      rec.verdict = Verdict::fail;
      rec.reason = "parallelism is not an equivalence relation";
      rec.counterexample = "M = " + subspace_str(m) + " | N = " +
                           subspace_str(nn) + " | P = " + subspace_str(pp);
      return;
    }
    ++rec.samples;
  }
  rec.verdict = Verdict::pass;
}

void parallel_axioms_case_b(const QuarticAlgebra& alg, SplitMix64& rng,
                            long hb, std::uint64_t n, CheckRecord& rec) {
  using SF = Subspace<F2RatFun>;
  // The unique Clifford-like parallelism: both sides coincide.
  for (std::uint64_t i = 0; i < n; ++i) {
    SF p = sample_point<F2RatFun>(rng, hb);
    SF l = sample_star_line<F2RatFun>(rng, hb);
    SF t = line_through_in_class(alg, p, l, Side::left);
    if (!t.contains(p) || !is_parallel_side(alg, t, l, Side::left)) {
      rec.verdict = Verdict::fail;
      rec.reason = "through-line misses the point or its class";
      rec.counterexample =
          "p = " + subspace_str(p) + " | L = " + subspace_str(l);
      return;
    }
    SF m = sample_line<F2RatFun>(rng, hb);
    SF nn = translate(alg, sample_unit(alg, rng, hb), m, Side::left);
    bool ok = is_parallel_side(alg, m, m, Side::left) &&
              is_parallel_side(alg, m, nn, Side::left) &&
              is_parallel_side(alg, nn, m, Side::left);
    if (!ok) {
      rec.verdict = Verdict::fail;
      rec.reason = "parallelism is not an equivalence relation";
      rec.counterexample = "M = " + subspace_str(m);
      return;
    }
    ++rec.samples;
  }
  rec.verdict = Verdict::pass;
}

void parallel_axioms_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t n = cfg.samples_for(rec.name);
  if (cfg.quaternion_algebra) {
    CliffordLikeParallelism cl =
        build_parallelism(*cfg.quaternion_algebra, cfg.taggings.front());
    parallel_axioms_case_a(*cfg.quaternion_algebra, cl, rng,
                           cfg.height_bound, n, rec);
  } else {
    parallel_axioms_case_b(*cfg.quartic_algebra, rng, cfg.height_bound, n,
                           rec);
  }
}

// --- conjugacy ----------------------------------------------------------------

void conjugacy_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  const QuatAlgebra* alg = require_case_a(cfg, rec);
  if (!alg) return;
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t n = cfg.samples_for(rec.name);
  long hb = cfg.height_bound;
  for (std::uint64_t i = 0; i < n; ++i) {
    QR q = sample_quat<Rational>(rng, hb);
    QR h = sample_unit(*alg, rng, hb);
    QR q2 = alg->mul(alg->mul(alg->inverse(h), q), h);
    bool positive_case = (i % 2 == 0);
    if (positive_case) {
      auto c = conjugator(*alg, q, q2);
      bool ok = are_conjugate(*alg, q, q2) && c.has_value() &&
                alg->mul(alg->mul(alg->inverse(*c), q), *c) == q2;
      if (!ok) {
        rec.verdict = Verdict::fail;
        rec.reason = "conjugate pair refused or conjugator wrong";
        rec.counterexample =
            "q1 = " + quat_str(q) + " | q2 = " + quat_str(q2);
        return;
      }
    } else {
      // Perturb trace or norm; either way (tr, N) changes.
      QR bad = (i % 4 == 1) ? q2 + QR::one() : Rational(2) * q2;
      if (are_conjugate(*alg, q, bad) || conjugator(*alg, q, bad)) {
        rec.verdict = Verdict::fail;
        rec.reason = "non-conjugate pair accepted";
        rec.counterexample =
            "q1 = " + quat_str(q) + " | q2 = " + quat_str(bad);
        return;
      }
    }
    ++rec.samples;
  }
  rec.verdict = Verdict::pass;
}

// --- orbit-quadric -------------------------------------------------------------

void orbit_quadric_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  const QuatAlgebra* alg = require_case_a(cfg, rec);
  if (!alg) return;
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t n = cfg.samples_for(rec.name);
  long hb = cfg.height_bound;
  for (std::uint64_t i = 0; i < n; ++i) {
    QR q = adjusted_trace_nonzero(*alg,
                                  sample_noncentral_quat<Rational>(rng, hb));
    QR h = sample_unit(*alg, rng, hb);
    QR x = alg->mul(alg->mul(alg->inverse(h), q), h);
    Rational scale = sample_rational(rng, hb);
    if (scale.is_zero()) scale = Rational(1);
    bool ok = omega(*alg, q, x).is_zero() &&
              point_in_orbit(*alg, q, SR::point(scale * x)) &&
              !omega(*alg, q, QR::one()).is_zero() &&
              !omega_polar_gram_det(*alg, q).is_zero();
    if (ok) {
      SR l = sample_star_line<Rational>(rng, hb);
      int cuts = star_line_quadric_intersections(*alg, q, l);
      ok = (cuts == 0 || cuts == 2);
      if (!ok) rec.counterexample = "q = " + quat_str(q) + " | L = " + subspace_str(l);
    } else {
      rec.counterexample = "q = " + quat_str(q) + " | h = " + quat_str(h);
    }
    if (!ok) {
      rec.verdict = Verdict::fail;
      rec.reason = "orbit quadric property violated";
      return;
    }
    ++rec.samples;
  }
  rec.verdict = Verdict::pass;
}

// --- line-orbit-density ---------------------------------------------------------

void line_orbit_density_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  const QuatAlgebra* alg = require_case_a(cfg, rec);
  if (!alg) return;
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t planes = cfg.samples_for(rec.name);
  long hb = cfg.height_bound;
  const SR base = SR::span({QR::one(), QR::basis(1)});
  const int want = 25;
  for (std::uint64_t i = 0; i < planes; ++i) {
    QR h = sample_unit(*alg, rng, hb);
    Mat4<Rational> fwd = inner_automorphism_matrix(*alg, h);
    Mat4<Rational> back = inner_automorphism_matrix(*alg, alg->inverse(h));
    SR moved = image(fwd, base);
    SR plane_through_moved = sample_plane_through(rng, hb, moved);
    SR plane = image(back, plane_through_moved);
    std::vector<SR> lines = orbit_lines_in_plane(*alg, base, plane, want);
    std::vector<SR> mapped;
    for (const SR& l : lines) mapped.push_back(image(fwd, l));
    bool ok = static_cast<int>(mapped.size()) == want;
    for (std::size_t a = 0; a < mapped.size() && ok; ++a) {
      ok = plane_through_moved.contains(mapped[a]) &&
           lines_conjugate(*alg, mapped[a], moved);
      for (std::size_t b = a + 1; b < mapped.size() && ok; ++b) {
        ok = !(mapped[a] == mapped[b]);
      }
    }
    if (!ok) {
      rec.verdict = Verdict::fail;
      rec.reason = "orbit lines in plane are not as claimed";
      rec.counterexample = "h = " + quat_str(h) +
                           " | plane = " + subspace_str(plane_through_moved);
      return;
    }
    ++rec.samples;
  }
  rec.verdict = Verdict::pass;
}

// --- invariant-classes ----------------------------------------------------------

void invariant_classes_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  const QuatAlgebra* alg = require_case_a(cfg, rec);
  if (!alg) return;
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t n = cfg.samples_for(rec.name);
  long hb = cfg.height_bound;
  std::vector<QR> gs = {
      QR::basis(1),                                            // i
      QR::one() + QR::basis(1),                                // 1+i
      QR(Rational(1), Rational(2), Rational(3), Rational(0)),  // 1+2i+3j
      QR::basis(2) + QR::basis(3),                             // j+k
      sample_noncentral_quat<Rational>(rng, hb),
      sample_noncentral_quat<Rational>(rng, hb),
  };
  for (const QR& g : gs) {
    InvariantClassProfile right_profile = invariant_right_classes(*alg, g);
    InvariantClassProfile left_profile = invariant_left_classes(*alg, g);
    for (std::uint64_t i = 0; i < n; ++i) {
      SR l = sample_star_line<Rational>(rng, hb);
      bool direct_r = is_invariant_right_class(*alg, g, l);
      bool direct_l = is_invariant_left_class(*alg, g, l);
      if (direct_r != profile_allows(right_profile, l) ||
          direct_l != profile_allows(left_profile, l)) {
        rec.verdict = Verdict::fail;
        rec.reason = "direct invariance test disagrees with the conditions";
        rec.counterexample = "g = " + quat_str(g) + " | L = " + subspace_str(l);
        return;
      }
      ++rec.samples;
    }
  }
  rec.verdict = Verdict::pass;
}

// --- kernel ----------------------------------------------------------------------

template <FieldScalar K>
void kernel_core(const AlgebraSpec<K>& alg, SplitMix64& rng, long hb,
                 std::uint64_t n, CheckRecord& rec) {
  using SS = Subspace<K>;
  for (std::uint64_t i = 0; i < n; ++i) {
    SS m = sample_line<K>(rng, hb);
    SS right_kernel = right_class_kernel(alg, m);
    SS left_kernel = left_class_kernel(alg, m);
    // Element of the kernel line.
    Quat<K> g;
    do {
      g = sample_scalar<K>(rng, hb) * right_kernel.row(0) +
          sample_scalar<K>(rng, hb) * right_kernel.row(1);
    } while (g.is_zero());
    Quat<K> c = sample_unit(alg, rng, hb);
    SS member = translate(alg, c, m, Side::right);  // a line of S_r(M)
    if (translate(alg, g, member, Side::left) != member) {
      rec.verdict = Verdict::fail;
      rec.reason = "kernel translation moved a class line";
      rec.counterexample = "M = " + subspace_str(m) + " | g = " + quat_str(g);
      return;
    }
    // Any unit outside the kernel line moves every line of the class.
    Quat<K> outside = sample_unit(alg, rng, hb);
    if (!right_kernel.contains_vector(outside)) {
      if (translate(alg, outside, member, Side::left) == member) {
        rec.verdict = Verdict::fail;
        rec.reason = "translation outside the kernel fixed a class line";
        rec.counterexample =
            "M = " + subspace_str(m) + " | g = " + quat_str(outside);
        return;
      }
    }
    // Mirror: right translations along the left kernel fix left classes.
    Quat<K> g2;
    do {
      g2 = sample_scalar<K>(rng, hb) * left_kernel.row(0) +
           sample_scalar<K>(rng, hb) * left_kernel.row(1);
    } while (g2.is_zero());
    SS member2 = translate(alg, c, m, Side::left);
    if (translate(alg, g2, member2, Side::right) != member2) {
      rec.verdict = Verdict::fail;
      rec.reason = "mirrored kernel translation moved a class line";
      rec.counterexample = "M = " + subspace_str(m) + " | g = " + quat_str(g2);
      return;
    }
    ++rec.samples;
  }
  rec.verdict = Verdict::pass;
}

void kernel_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t n = cfg.samples_for(rec.name);
  if (cfg.quaternion_algebra) {
    kernel_core(*cfg.quaternion_algebra, rng, cfg.height_bound, n, rec);
  } else {
    kernel_core(*cfg.quartic_algebra, rng, cfg.height_bound, n, rec);
  }
}

// --- he-double-space ---------------------------------------------------------------

template <FieldScalar K>
void he_core(const AlgebraSpec<K>& alg, SplitMix64& rng, long hb,
             std::uint64_t n, CheckRecord& rec) {
  std::vector<Quat<K>> es = {Quat<K>::basis(1),
                             Quat<K>::one() + Quat<K>::basis(2),
                             sample_unit(alg, rng, hb)};
  std::uint64_t per = n / es.size() + 1;
  for (const auto& e : es) {
    AlteredAlgebraReport rep = he_double_space_check(alg, e, rng, per, hb);
    rec.samples += rep.agreements;
    if (!rep.ok()) {
      rec.verdict = Verdict::fail;
      rec.reason = rep.failure;
      rec.counterexample = "e = " + quat_str(e);
      return;
    }
  }
  rec.verdict = Verdict::pass;
}

void he_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t n = cfg.samples_for(rec.name);
  if (cfg.quaternion_algebra) {
    he_core(*cfg.quaternion_algebra, rng, cfg.height_bound, n, rec);
  } else {
    he_core(*cfg.quartic_algebra, rng, cfg.height_bound, n, rec);
  }
}

// --- prop-two ------------------------------------------------------------------------

template <FieldScalar K>
void prop_two_core(const AlgebraSpec<K>& alg, SplitMix64& rng, long hb,
                   std::uint64_t n, CheckRecord& rec) {
  GenericMult<K> mult = as_mult(alg);
  auto family = star_line_family(alg.unit(), rng, hb, static_cast<int>(n));
  PropTwoReport same = prop_two_check(mult, mult, family);
  if (same.verdict != PropTwoVerdict::identical) {
    rec.verdict = Verdict::fail;
    rec.reason = "an algebra does not share classes with itself";
    return;
  }
  rec.samples += family.size();
  // Pullback along a unit-fixing non-automorphism: never a violation.
  Mat4<K> t = Mat4<K>::identity();
  t.a[3][2] = K::one();  // j -> j + k (u -> u + w), fixes 1 and i pointwise
  PropTwoReport skewed = prop_two_check(mult, transported_mult(alg, t), family);
  if (skewed.verdict == PropTwoVerdict::violation) {
    rec.verdict = Verdict::fail;
    rec.reason = "shared classes without equal tables (theorem violation)";
    return;
  }
  rec.verdict = Verdict::pass;
}

void prop_two_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t n = cfg.samples_for(rec.name);
  if (cfg.quaternion_algebra) {
    const QuatAlgebra& alg = *cfg.quaternion_algebra;
    prop_two_core(alg, rng, cfg.height_bound, n, rec);
    if (rec.verdict != Verdict::pass) return;
    // Pullback along an inner automorphism: tables agree identically.
    GenericMult<Rational> mult = as_mult(alg);
    QR h = sample_unit(alg, rng, cfg.height_bound);
    auto family =
        star_line_family(alg.unit(), rng, cfg.height_bound, static_cast<int>(n));
    PropTwoReport moved = prop_two_check(
        mult, transported_mult(alg, inner_automorphism_matrix(alg, h)),
        family);
    if (moved.verdict != PropTwoVerdict::identical) {
      rec.verdict = Verdict::fail;
      rec.reason = "automorphism pullback not recognised as identical";
      rec.counterexample = "h = " + quat_str(h);
    }
  } else {
    prop_two_core(*cfg.quartic_algebra, rng, cfg.height_bound, n, rec);
  }
}

// --- thm-main (stability of all classes) ----------------------------------------------

void thm_main_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  const QuatAlgebra* alg = require_case_a(cfg, rec);
  if (!alg) return;
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t n = cfg.samples_for(rec.name);
  long hb = cfg.height_bound;
  CliffordLikeParallelism all_left =
      build_parallelism(*alg, TagMap{Side::left, {}});
  CliffordLikeParallelism all_right =
      build_parallelism(*alg, TagMap{Side::right, {}});
  std::vector<CliffordLikeParallelism> proper;
  for (const auto& tags : cfg.taggings) proper.push_back(build_parallelism(*alg, tags));

  for (std::uint64_t i = 0; i < n; ++i) {
    QR g = sample_noncentral_quat<Rational>(rng, hb);
    if (!lambda_fixes_all_classes(all_left, g).fixes_all ||
        !rho_fixes_all_classes(all_right, g).fixes_all) {
      rec.verdict = Verdict::fail;
      rec.reason = "a Clifford parallelism's own translations moved a class";
      rec.counterexample = "g = " + quat_str(g);
      return;
    }
    for (const auto& cl : proper) {
      for (Side ts : {Side::left, Side::right}) {
        ClassStabilityResult res = ts == Side::left
                                       ? lambda_fixes_all_classes(cl, g)
                                       : rho_fixes_all_classes(cl, g);
        if (!res.fixes_all &&
            !audit_stability_witness(cl, g, *res.witness, ts)) {
          rec.verdict = Verdict::fail;
          rec.reason = "stability witness failed its audit";
          rec.counterexample =
              "g = " + quat_str(g) + " | witness = " + subspace_str(*res.witness);
          return;
        }
        if (res.fixes_all) {
          // Sampled soundness cross-check: no tagged class may move.
          for (int s = 0; s < 10; ++s) {
            SR l = sample_star_line<Rational>(rng, hb);
            if (cl.side_of(l) != other(ts)) continue;
            bool invariant = ts == Side::left
                                 ? is_invariant_right_class(*alg, g, l)
                                 : is_invariant_left_class(*alg, g, l);
            if (!invariant) {
              rec.verdict = Verdict::fail;
              rec.reason = "claimed stability contradicted by a sample";
              rec.counterexample =
                  "g = " + quat_str(g) + " | L = " + subspace_str(l);
              return;
            }
          }
        }
      }
    }
    ++rec.samples;
  }
  // Central elements fix everything.
  for (int i = 0; i < 5; ++i) {
    QR g = QR::scalar(sample_rational(rng, hb));
    while (g.is_zero()) g = QR::scalar(sample_rational(rng, hb));
    for (const auto& cl : proper) {
      if (!lambda_fixes_all_classes(cl, g).fixes_all ||
          !rho_fixes_all_classes(cl, g).fixes_all) {
        rec.verdict = Verdict::fail;
        rec.reason = "a central translation failed to fix all classes";
        rec.counterexample = "g = " + quat_str(g);
        return;
      }
    }
    ++rec.samples;
  }
  rec.verdict = Verdict::pass;
}

// --- thm-new1 (single stabilised class) -------------------------------------------------

void thm_new1_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  const QuatAlgebra* alg = require_case_a(cfg, rec);
  if (!alg) return;
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t n = cfg.samples_for(rec.name);
  long hb = cfg.height_bound;
  for (std::uint64_t i = 0; i < n; ++i) {
    QR g = adjusted_trace_nonzero(*alg,
                                  sample_noncentral_quat<Rational>(rng, hb));
    SingleClassReport rep = single_class_fixer_profile(*alg, g, rng, 8);
    if (!rep.ok) {
      rec.verdict = Verdict::fail;
      rec.reason = rep.failure;
      rec.counterexample = "g = " + quat_str(g);
      return;
    }
    ++rec.samples;
  }
  rec.verdict = Verdict::pass;
}

// --- thm-new2 (linewise fixing vs stabilising everything) -------------------------------

void thm_new2_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t n = cfg.samples_for(rec.name);
  long hb = cfg.height_bound;
  if (cfg.quaternion_algebra) {
    const QuatAlgebra& alg = *cfg.quaternion_algebra;
    CliffordLikeParallelism all_right =
        build_parallelism(alg, TagMap{Side::right, {}});
    for (std::uint64_t i = 0; i < n; ++i) {
      QR g = sample_noncentral_quat<Rational>(rng, hb);
      SR lg = SR::span({QR::one(), g});
      QR c = sample_unit(alg, rng, hb);
      SR member = translate(alg, c, lg, Side::right);
      if (translate(alg, g, member, Side::left) != member) {
        rec.verdict = Verdict::fail;
        rec.reason = "lambda_g does not fix its own right class linewise";
        rec.counterexample = "g = " + quat_str(g);
        return;
      }
      ClassStabilityResult res = lambda_fixes_all_classes(all_right, g);
      if (res.fixes_all ||
          !audit_stability_witness(all_right, g, *res.witness, Side::left)) {
        rec.verdict = Verdict::fail;
        rec.reason =
            "a noncentral translation stabilised every right class (skew "
            "case)";
        rec.counterexample = "g = " + quat_str(g);
        return;
      }
      ++rec.samples;
    }
  } else {
    const QuarticAlgebra& alg = *cfg.quartic_algebra;
    using SF = Subspace<F2RatFun>;
    using QF = Quat<F2RatFun>;
    for (std::uint64_t i = 0; i < n; ++i) {
      QF g = sample_noncentral_quat<F2RatFun>(rng, hb);
      if (alg.norm(g).is_zero()) continue;  // stay in the unit group
      SF m = sample_line<F2RatFun>(rng, hb);
      SF moved = translate(alg, g, m, Side::left);
      if (!is_parallel_side(alg, moved, m, Side::left) ||
          !is_parallel_side(alg, moved, m, Side::right)) {
        rec.verdict = Verdict::fail;
        rec.reason = "translation failed to stabilise a class (field case)";
        rec.counterexample = "g = " + quat_str(g) + " | M = " + subspace_str(m);
        return;
      }
      SF lg = SF::span({QF::one(), g});
      QF c = sample_unit(alg, rng, hb);
      SF member = translate(alg, c, lg, Side::left);
      if (translate(alg, g, member, Side::left) != member) {
        rec.verdict = Verdict::fail;
        rec.reason = "translation does not fix its own class linewise";
        rec.counterexample = "g = " + quat_str(g);
        return;
      }
      ++rec.samples;
    }
  }
  rec.verdict = Verdict::pass;
}

// --- case-b ------------------------------------------------------------------------------

void case_b_suite(const SuiteConfig& cfg, CheckRecord& rec) {
  SplitMix64 rng = suite_stream(cfg.seed, rec.name);
  std::uint64_t n = cfg.samples_for(rec.name);
  long hb = cfg.quartic_algebra ? cfg.height_bound : 2;
  QuarticAlgebra alg = cfg.quartic_algebra
                           ? *cfg.quartic_algebra
                           : make_quartic_field(F2RatFun::s(), F2RatFun::t());
  using QF = Quat<F2RatFun>;
  using SF = Subspace<F2RatFun>;
  for (std::uint64_t i = 0; i < n; ++i) {
    QF h = sample_quat<F2RatFun>(rng, hb);
    QF sq = alg.mul(h, h);
    if (!sq.is_central_scalar() || !(sq[0] == alg.norm(h))) {
      rec.verdict = Verdict::fail;
      rec.reason = "square of an element left the centre";
      rec.counterexample = "h = " + quat_str(h);
      return;
    }
    ++rec.samples;
  }
  std::uint64_t pairs = n / 2 + 1;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    SF m = sample_line<F2RatFun>(rng, hb);
    SF p = rng.coin() ? translate(alg, sample_unit(alg, rng, hb), m,
                                  rng.coin() ? Side::left : Side::right)
                      : sample_line<F2RatFun>(rng, hb);
    if (is_parallel_side(alg, m, p, Side::left) !=
        is_parallel_side(alg, m, p, Side::right)) {
      rec.verdict = Verdict::fail;
      rec.reason = "left and right parallelisms differ (field case)";
      rec.counterexample = "M = " + subspace_str(m) + " | N = " + subspace_str(p);
      return;
    }
    ++rec.samples;
  }
  std::uint64_t triangles = n / 2 + 1;
  CheckRecord sub;
  sub.name = rec.name;
  ds_core(alg, rng, hb, triangles, sub);
  rec.samples += sub.samples;
  if (sub.verdict != Verdict::pass) {
    rec.verdict = sub.verdict;
    rec.reason = sub.reason;
    rec.counterexample = sub.counterexample;
    return;
  }
  rec.verdict = Verdict::pass;
}

}  // namespace

CheckRecord run_ds_suite_on(const GenericMult<Rational>& mult,
                            std::uint64_t seed, long height_bound,
                            std::uint64_t samples) {
  CheckRecord rec;
  rec.name = "ds";
  SplitMix64 rng = suite_stream(seed, rec.name);
  ds_core(mult, rng, height_bound, samples, rec);
  return rec;
}

CheckRecord run_check(const SuiteConfig& cfg, const std::string& name) {
  CheckRecord rec;
  rec.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    if (name == "ds") {
      ds_suite(cfg, rec);
    } else if (name == "parallel-axioms") {
      parallel_axioms_suite(cfg, rec);
    } else if (name == "conjugacy") {
      conjugacy_suite(cfg, rec);
    } else if (name == "orbit-quadric") {
      orbit_quadric_suite(cfg, rec);
    } else if (name == "line-orbit-density") {
      line_orbit_density_suite(cfg, rec);
    } else if (name == "invariant-classes") {
      invariant_classes_suite(cfg, rec);
    } else if (name == "kernel") {
      kernel_suite(cfg, rec);
    } else if (name == "he-double-space") {
      he_suite(cfg, rec);
    } else if (name == "prop-two") {
      prop_two_suite(cfg, rec);
    } else if (name == "thm-main") {
      thm_main_suite(cfg, rec);
    } else if (name == "thm-new1") {
      thm_new1_suite(cfg, rec);
    } else if (name == "thm-new2") {
      thm_new2_suite(cfg, rec);
    } else if (name == "case-b") {
      case_b_suite(cfg, rec);
    } else {
      throw ConfigError("unknown check '" + name + "'");
    }
  } catch (const ResourceError& e) {
    rec.verdict = Verdict::inconclusive;
    rec.reason = std::string("resource guard: ") + e.what();
  } catch (const Error& e) {
    rec.verdict = Verdict::fail;
    rec.reason = std::string("error: ") + e.what();
  }
  rec.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rec;
}

Report run_suites(const SuiteConfig& cfg) {
  Report report;
  report.seed = cfg.seed;
  report.algebra = cfg.algebra_description();
  for (const std::string& name : cfg.checks) {
    report.checks.push_back(run_check(cfg, name));
  }
  return report;
}

}  // namespace cliffpar
