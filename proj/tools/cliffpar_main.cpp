// Command line front end: configuration-driven verification runs plus
// one-shot queries in the library's text syntaxes.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cliffpar/orbits.hpp"
#include "cliffpar/suites.hpp"
#include "cliffpar/textio.hpp"

namespace {

using namespace cliffpar;
using Q = Quat<Rational>;
using S = Subspace<Rational>;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

QuatAlgebra algebra_from(const std::string& a, const std::string& b) {
  return make_quaternion_algebra(Rational::parse(a), Rational::parse(b));
}

struct VerifyArgs {
  std::string config_path;
  std::string format = "text";
  std::string out_path;
};

int run_verify(const VerifyArgs& args) {
  SuiteConfig cfg = parse_config(read_file(args.config_path));
  Report report = run_suites(cfg);
  std::string rendered =
      args.format == "machine" ? emit_machine(report) : emit_text(report);
  if (args.out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + args.out_path + "'");
    out << rendered;
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cliffpar: exact verification of quaternionic double spaces and their "
      "line parallelisms"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "run the checks described by a configuration file");
  verify->add_option("config", verify_args.config_path, "configuration file")
      ->required();
  verify->add_option("--format", verify_args.format, "text | machine")
      ->check(CLI::IsMember({"text", "machine"}));
  verify->add_option("--out", verify_args.out_path, "write the report here");

  std::string opt_a = "-1", opt_b = "-1";
  std::string arg1, arg2, arg3;

  auto add_algebra_opts = [&](CLI::App* cmd) {
    cmd->add_option("--a", opt_a, "structure constant a (default -1)");
    cmd->add_option("--b", opt_b, "structure constant b (default -1)");
  };

  auto* orbit_key = app.add_subcommand(
      "orbit-key", "orbit invariant of a star line, e.g. \"1; i\"");
  orbit_key->add_option("line", arg1, "line through F1")->required();
  add_algebra_opts(orbit_key);

  auto* conjugate = app.add_subcommand(
      "conjugate", "find h with h^-1 q1 h = q2, e.g. \"i\" \"j\"");
  conjugate->add_option("q1", arg1)->required();
  conjugate->add_option("q2", arg2)->required();
  add_algebra_opts(conjugate);

  auto* invariant = app.add_subcommand(
      "invariant-classes",
      "right classes invariant under the left translation by g");
  invariant->add_option("g", arg1)->required();
  add_algebra_opts(invariant);

  auto* ds = app.add_subcommand(
      "ds", "common point guaranteed by the double-space axiom");
  std::string ds_kind = "caseA";
  ds->add_option("p0", arg1)->required();
  ds->add_option("p1", arg2)->required();
  ds->add_option("p2", arg3)->required();
  ds->add_option("--kind", ds_kind, "caseA | caseB")
      ->check(CLI::IsMember({"caseA", "caseB"}));
  add_algebra_opts(ds);

  auto* division = app.add_subcommand(
      "division-check", "is the quaternion algebra (a,b | Q) a skew field?");
  division->add_option("a", arg1)->required();
  division->add_option("b", arg2)->required();

  std::string report_path;
  auto* report_cmd = app.add_subcommand(
      "report", "re-render a machine report as text");
  report_cmd->add_option("file", report_path, "machine report (JSON)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(verify_args);

    if (orbit_key->parsed()) {
      QuatAlgebra alg = algebra_from(opt_a, opt_b);
      S line = parse_subspace<Rational>(arg1);
      std::cout << line_orbit_key(alg, line).get_str() << "\n";
      return kExitPass;
    }
    if (conjugate->parsed()) {
      QuatAlgebra alg = algebra_from(opt_a, opt_b);
      Q q1 = parse_quat<Rational>(arg1);
      Q q2 = parse_quat<Rational>(arg2);
      auto h = conjugator(alg, q1, q2);
      if (!h) {
        std::cout << "not conjugate (trace or norm differ)\n";
        return kExitPass;
      }
      std::cout << quat_str(*h) << "\n";
      return kExitPass;
    }
    if (invariant->parsed()) {
      QuatAlgebra alg = algebra_from(opt_a, opt_b);
      Q g = parse_quat<Rational>(arg1);
      InvariantClassProfile profile = invariant_right_classes(alg, g);
      std::cout << "exceptional line: "
                << subspace_str(profile.exceptional_line) << "\n";
      if (profile.pencil_present) {
        std::cout << "pencil plane: " << subspace_str(*profile.pencil_plane)
                  << "\n";
      } else {
        std::cout << "pencil: absent (tr(g) != 0)\n";
      }
      return kExitPass;
    }
    if (ds->parsed()) {
      if (ds_kind == "caseB") {
        QuarticAlgebra alg = make_quartic_field(
            F2RatFun::parse(opt_a == "-1" ? "s" : opt_a),
            F2RatFun::parse(opt_b == "-1" ? "t" : opt_b));
        auto out = ds_check(alg, Subspace<F2RatFun>::point(parse_quat<F2RatFun>(arg1)),
                            Subspace<F2RatFun>::point(parse_quat<F2RatFun>(arg2)),
                            Subspace<F2RatFun>::point(parse_quat<F2RatFun>(arg3)));
        if (!out.common) {
          std::cout << "VIOLATION: lines " << subspace_str(out.m1) << " and "
                    << subspace_str(out.m2) << " do not meet\n";
          return kExitFail;
        }
        std::cout << subspace_str(*out.common) << "\n";
        return kExitPass;
      }
      QuatAlgebra alg = algebra_from(opt_a, opt_b);
      auto out = ds_check(alg, S::point(parse_quat<Rational>(arg1)),
                          S::point(parse_quat<Rational>(arg2)),
                          S::point(parse_quat<Rational>(arg3)));
      if (!out.common) {
        std::cout << "VIOLATION: lines " << subspace_str(out.m1) << " and "
                  << subspace_str(out.m2) << " do not meet\n";
        return kExitFail;
      }
      std::cout << subspace_str(*out.common) << "\n";
      return kExitPass;
    }
    if (division->parsed()) {
      bool division_algebra =
          is_division(Rational::parse(arg1), Rational::parse(arg2));
      std::cout << (division_algebra ? "division" : "split") << "\n";
      return kExitPass;
    }
    if (report_cmd->parsed()) {
      Report report = parse_machine(read_file(report_path));
      std::cout << emit_text(report);
      return report.exit_code();
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
