#include <doctest.h>

#include "cliffpar/suites.hpp"
#include "cliffpar/textio.hpp"

using namespace cliffpar;

namespace {

using Q = Quat<Rational>;
using S = Subspace<Rational>;

const char* kSmallConfig =
    "kind = caseA\n"
    "a = -1\n"
    "b = -1\n"
    "seed = 42\n"
    "height_bound = 5\n"
    "checks = ds, kernel, conjugacy\n"
    "\n"
    "[samples]\n"
    "ds = 40\n"
    "kernel = 10\n"
    "conjugacy = 20\n";

}  // namespace

TEST_CASE("quaternion and subspace text syntax") {
  QuatAlgebra alg = make_quaternion_algebra(Rational(-1), Rational(-1));
  Q q = parse_quat<Rational>("1 + 2*i - 3/4*j");
  CHECK(q == Q(Rational(1), Rational(2), Rational(mpz_class(-3), mpz_class(4)),
               Rational(0)));
  CHECK(quat_str(q) == "1 + 2*i - 3/4*j");
  CHECK(parse_quat<Rational>(quat_str(q)) == q);
  CHECK(quat_str(Q::zero()) == "0");
  CHECK(parse_quat<Rational>("-i") == -Q::basis(1));
  CHECK(parse_quat<Rational>("i + i") == Rational(2) * Q::basis(1));
  CHECK_THROWS_AS(parse_quat<Rational>("1 + *i"), ConfigError);
  CHECK_THROWS_AS(parse_quat<Rational>("i j"), ConfigError);

  S l = parse_subspace<Rational>("1; i");
  CHECK(l == S::span({Q::one(), Q::basis(1)}));
  CHECK(subspace_str(l) == "1; i");
  CHECK(parse_subspace<Rational>("0").dim() == 0);
  CHECK(subspace_str(S()) == "0");

  // Round trips on random data.
  SplitMix64 rng(83);
  for (int n = 0; n < 150; ++n) {
    Q x = sample_quat<Rational>(rng, 9);
    CHECK(parse_quat<Rational>(quat_str(x)) == x);
    S sp = sample_line<Rational>(rng, 6);
    CHECK(parse_subspace<Rational>(subspace_str(sp)) == sp);
  }

  using QF = Quat<F2RatFun>;
  QF u = QF::basis(1);
  QF f = QF(F2RatFun::parse("s"), F2RatFun::parse("(s + 1)/t"),
            F2RatFun::zero(), F2RatFun::one());
  CHECK(quat_str(f) == "s + ((s + 1)/t)*u + w");
  CHECK(parse_quat<F2RatFun>(quat_str(f)) == f);
  CHECK(parse_quat<F2RatFun>("u") == u);
  SplitMix64 rng2(85);
  for (int n = 0; n < 80; ++n) {
    QF x = sample_quat<F2RatFun>(rng2, 2);
    CHECK(parse_quat<F2RatFun>(quat_str(x)) == x);
  }
}

TEST_CASE("configuration parsing") {
  SUBCASE("defaults applied") {
    SuiteConfig cfg = parse_config("kind = caseA\na = -1\nb = -1\nseed = 7\n");
    CHECK(cfg.seed == 7);
    CHECK(cfg.kind == AlgebraKind::case_a);
    CHECK(cfg.quaternion_algebra.has_value());
    CHECK(cfg.checks == all_suite_names());
    CHECK(cfg.taggings.size() == 1);
    CHECK(cfg.samples_for("ds") == 500);
  }
  SUBCASE("full config") {
    SuiteConfig cfg = parse_config(kSmallConfig);
    CHECK(cfg.checks == std::vector<std::string>{"ds", "kernel", "conjugacy"});
    CHECK(cfg.samples_for("ds") == 40);
    CHECK(cfg.height_bound == 5);
  }
  SUBCASE("split algebra refused") {
    CHECK_THROWS_WITH_AS(parse_config("kind = caseA\na = 1\nb = 1\n"),
                         doctest::Contains("not a division algebra"),
                         ConfigError);
  }
  SUBCASE("non-squarefree tagging key") {
    CHECK_THROWS_WITH_AS(
        parse_config("kind = caseA\n[tagging]\n4 = left\n"),
        doctest::Contains("not squarefree"), ConfigError);
  }
  SUBCASE("diagnostics carry line numbers and accumulate") {
    try {
      parse_config("kind = caseX\nbogus = 1\nseed = -3\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      std::string msg = e.what();
      CHECK(msg.find("line 1") != std::string::npos);
      CHECK(msg.find("line 2") != std::string::npos);
      CHECK(msg.find("line 3") != std::string::npos);
    }
  }
  SUBCASE("caseB rejects nontrivial taggings") {
    CHECK_THROWS_WITH_AS(
        parse_config("kind = caseB\na = s\nb = t\n[tagging]\n-1 = left\n"),
        doctest::Contains("trivial tagging"), ConfigError);
  }
  SUBCASE("caseB default structure constants") {
    SuiteConfig cfg = parse_config("kind = caseB\n");
    CHECK(cfg.quartic_algebra.has_value());
    CHECK(cfg.a_text == "s");
    CHECK(cfg.b_text == "t");
  }
}

TEST_CASE("sampler contracts") {
  SplitMix64 a(42), b(42);
  for (int n = 0; n < 100; ++n) CHECK(a.next() == b.next());

  SplitMix64 rng(42);
  Q first = sample_quat<Rational>(rng, 8);
  SplitMix64 rng2(42);
  CHECK(sample_quat<Rational>(rng2, 8) == first);

  SplitMix64 rng3(1);
  for (int n = 0; n < 1000; ++n) {
    Q q = sample_quat<Rational>(rng3, 1);
    CHECK(!q.is_zero());
    for (int m = 0; m < 4; ++m) {
      Rational c = q[m];
      CHECK((c == Rational(0) || c == Rational(1) || c == Rational(-1)));
    }
  }
}

TEST_CASE("reports are deterministic and round-trip") {
  SuiteConfig cfg = parse_config(kSmallConfig);
  Report r1 = run_suites(cfg);
  Report r2 = run_suites(cfg);
  std::string m1 = emit_machine(r1);
  CHECK(m1 == emit_machine(r2));
  CHECK(r1.overall() == Verdict::pass);
  CHECK(r1.exit_code() == 0);

  Report parsed = parse_machine(m1);
  CHECK(emit_machine(parsed) == m1);
  std::string text = emit_text(r1);
  CHECK(text.find("overall: pass") != std::string::npos);
  CHECK(text.find("ds") != std::string::npos);

  Report failing = r1;
  failing.checks[0].verdict = Verdict::fail;
  CHECK(failing.exit_code() == 1);
}

TEST_CASE("negative control: corrupted multiplication fails ds with replay") {
  QuatAlgebra alg = make_quaternion_algebra(Rational(-1), Rational(-1));
  GenericMult<Rational> good = as_mult(alg);
  auto table = good.table();
  table[1][2] = table[1][2] + Q::one();  // poison i*j
  GenericMult<Rational> corrupted(table, good.unit_value());

  CheckRecord rec = run_ds_suite_on(corrupted, 42, 5, 60);
  CHECK(rec.verdict == Verdict::fail);
  REQUIRE(!rec.counterexample.empty());

  // Replay the reported counterexample through the library operation.
  std::vector<S> pts;
  std::string ce = rec.counterexample;
  std::size_t pos = 0;
  for (int n = 0; n < 3; ++n) {
    std::size_t eq = ce.find("= ", pos);
    std::size_t bar = ce.find(" | ", eq);
    std::string part = ce.substr(eq + 2, (bar == std::string::npos ? ce.size() : bar) - eq - 2);
    pts.push_back(parse_subspace<Rational>(part));
    pos = bar;
  }
  auto replay = ds_check(corrupted, pts[0], pts[1], pts[2]);
  CHECK(!replay.common.has_value());
  // The honest algebra passes on the same triangle.
  CHECK(ds_check(alg, pts[0], pts[1], pts[2]).common.has_value());

  CheckRecord healthy = run_ds_suite_on(good, 42, 5, 60);
  CHECK(healthy.verdict == Verdict::pass);
}

TEST_CASE("full default run passes every suite") {
  SuiteConfig cfg = parse_config(
      "kind = caseA\nseed = 42\nheight_bound = 5\n[samples]\nds = "
      "60\nparallel-axioms = 25\nconjugacy = 40\norbit-quadric = "
      "25\nline-orbit-density = 2\ninvariant-classes = 30\nkernel = "
      "12\nhe-double-space = 20\nprop-two = 8\nthm-main = 4\nthm-new1 = "
      "5\nthm-new2 = 5\ncase-b = 30\n");
  Report report = run_suites(cfg);
  for (const auto& c : report.checks) {
    INFO(c.name, ": ", c.reason, " ", c.counterexample);
    CHECK(c.verdict == Verdict::pass);
  }
  CHECK(report.overall() == Verdict::pass);
}

TEST_CASE("caseB configuration runs the generic suites") {
  SuiteConfig cfg = parse_config(
      "kind = caseB\nseed = 11\nheight_bound = 1\nchecks = ds, kernel, "
      "parallel-axioms, case-b, thm-new2, conjugacy\n[samples]\nds = "
      "15\nkernel = 5\nparallel-axioms = 8\ncase-b = 15\nthm-new2 = 5\n");
  Report report = run_suites(cfg);
  for (const auto& c : report.checks) {
    INFO(c.name, ": ", c.reason);
    if (c.name == "conjugacy") {
      CHECK(c.verdict == Verdict::inconclusive);  // quaternion-only suite
    } else {
      CHECK(c.verdict == Verdict::pass);
    }
  }
}
