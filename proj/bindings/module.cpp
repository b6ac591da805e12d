// Python bindings for the main operations. Scalars, quaternions and
// subspaces cross the boundary in the library's text syntaxes, so Python
// callers see exact values as strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cliffpar/orbits.hpp"
#include "cliffpar/suites.hpp"
#include "cliffpar/textio.hpp"

namespace py = pybind11;

namespace {

using namespace cliffpar;
using Q = Quat<Rational>;
using S = Subspace<Rational>;

QuatAlgebra algebra(const std::string& a, const std::string& b) {
  return make_quaternion_algebra(Rational::parse(a), Rational::parse(b));
}

Q quat(const std::string& text) { return parse_quat<Rational>(text); }
S subspace(const std::string& text) { return parse_subspace<Rational>(text); }

Side side_from(const std::string& name) {
  if (name == "left") return Side::left;
  if (name == "right") return Side::right;
  throw ConfigError("side must be 'left' or 'right'");
}

TagMap tags_from(const py::dict& tagging, const std::string& default_tag) {
  TagMap tags;
  tags.default_tag = side_from(default_tag);
  for (auto item : tagging) {
    tags.exceptional[mpz_class(py::cast<std::string>(py::str(item.first)))] =
        side_from(py::cast<std::string>(item.second));
  }
  return tags;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact-arithmetic toolkit for quaternionic double spaces and their "
      "line parallelisms";

  py::register_exception<Error>(m, "CliffparError");

  // --- scalars ---------------------------------------------------------
  m.def("rational_add", [](const std::string& x, const std::string& y) {
    return (Rational::parse(x) + Rational::parse(y)).str();
  });
  m.def("rational_mul", [](const std::string& x, const std::string& y) {
    return (Rational::parse(x) * Rational::parse(y)).str();
  });
  m.def("squarefree_part", [](const std::string& x) {
    return squarefree_part(Rational::parse(x)).get_str();
  });
  m.def("rational_is_square",
        [](const std::string& x) { return is_square(Rational::parse(x)); });
  m.def("f2_add", [](const std::string& x, const std::string& y) {
    return (F2RatFun::parse(x) + F2RatFun::parse(y)).str();
  });
  m.def("f2_mul", [](const std::string& x, const std::string& y) {
    return (F2RatFun::parse(x) * F2RatFun::parse(y)).str();
  });
  m.def("f2_is_square",
        [](const std::string& x) { return is_square(F2RatFun::parse(x)); });

  // --- algebra ---------------------------------------------------------
  m.def("is_division", [](const std::string& a, const std::string& b) {
    return is_division(Rational::parse(a), Rational::parse(b));
  });
  m.def("validate_case_b", [](const std::string& a, const std::string& b) {
    return validate_case_b(F2RatFun::parse(a), F2RatFun::parse(b));
  });
  m.def(
      "mul",
      [](const std::string& x, const std::string& y, const std::string& a,
         const std::string& b) {
        return quat_str(algebra(a, b).mul(quat(x), quat(y)));
      },
      py::arg("x"), py::arg("y"), py::arg("a") = "-1", py::arg("b") = "-1");
  m.def(
      "inverse",
      [](const std::string& x, const std::string& a, const std::string& b) {
        return quat_str(algebra(a, b).inverse(quat(x)));
      },
      py::arg("x"), py::arg("a") = "-1", py::arg("b") = "-1");
  m.def(
      "conjugate_trace_norm",
      [](const std::string& x, const std::string& a, const std::string& b) {
        QuatAlgebra alg = algebra(a, b);
        Q q = quat(x);
        return py::make_tuple(quat_str(alg.conj(q)), alg.trace(q).str(),
                              alg.norm(q).str());
      },
      py::arg("x"), py::arg("a") = "-1", py::arg("b") = "-1");
  m.def(
      "kinematic_witness",
      [](const std::string& x, const std::string& a, const std::string& b) {
        auto [s, t] = algebra(a, b).kinematic_witness(quat(x));
        return py::make_tuple(s.str(), t.str());
      },
      py::arg("x"), py::arg("a") = "-1", py::arg("b") = "-1");
  m.def(
      "conjugator",
      [](const std::string& q1, const std::string& q2, const std::string& a,
         const std::string& b) -> py::object {
        auto h = conjugator(algebra(a, b), quat(q1), quat(q2));
        if (!h) return py::none();
        return py::str(quat_str(*h));
      },
      py::arg("q1"), py::arg("q2"), py::arg("a") = "-1", py::arg("b") = "-1");

  // --- projective geometry ---------------------------------------------
  m.def("span", [](const std::vector<std::string>& rows) {
    std::vector<Q> gens;
    for (const auto& r : rows) gens.push_back(quat(r));
    return subspace_str(S::span(gens));
  });
  m.def("intersect", [](const std::string& s1, const std::string& s2) {
    return subspace_str(intersect(subspace(s1), subspace(s2)));
  });
  m.def("incident", [](const std::string& s1, const std::string& s2) {
    return incident(subspace(s1), subspace(s2));
  });
  m.def(
      "perp",
      [](const std::string& s, const std::string& a, const std::string& b) {
        return subspace_str(perp(algebra(a, b), subspace(s)));
      },
      py::arg("s"), py::arg("a") = "-1", py::arg("b") = "-1");
  m.def("star_membership",
        [](const std::string& s) { return star_membership(subspace(s)); });

  // --- parallelisms ------------------------------------------------------
  m.def(
      "is_parallel_side",
      [](const std::string& m1, const std::string& n1, const std::string& side,
         const std::string& a, const std::string& b) {
        return is_parallel_side(algebra(a, b), subspace(m1), subspace(n1),
                                side_from(side));
      },
      py::arg("m"), py::arg("n"), py::arg("side"), py::arg("a") = "-1",
      py::arg("b") = "-1");
  m.def(
      "line_through_in_class",
      [](const std::string& p, const std::string& star_line,
         const std::string& side, const std::string& a, const std::string& b) {
        QuatAlgebra alg = algebra(a, b);
        return subspace_str(line_through_in_class(
            alg, subspace(p), subspace(star_line), side_from(side)));
      },
      py::arg("p"), py::arg("star_line"), py::arg("side"), py::arg("a") = "-1",
      py::arg("b") = "-1");
  m.def(
      "ds_common_point",
      [](const std::string& p0, const std::string& p1, const std::string& p2,
         const std::string& a, const std::string& b) -> py::object {
        auto out = ds_check(algebra(a, b), subspace(p0), subspace(p1),
                            subspace(p2));
        if (!out.common) return py::none();
        return py::str(subspace_str(*out.common));
      },
      py::arg("p0"), py::arg("p1"), py::arg("p2"), py::arg("a") = "-1",
      py::arg("b") = "-1");
  m.def(
      "right_class_kernel",
      [](const std::string& line, const std::string& a, const std::string& b) {
        return subspace_str(right_class_kernel(algebra(a, b), subspace(line)));
      },
      py::arg("line"), py::arg("a") = "-1", py::arg("b") = "-1");

  // --- orbits and Clifford-like parallelisms -----------------------------
  m.def(
      "line_orbit_key",
      [](const std::string& line, const std::string& a, const std::string& b) {
        return line_orbit_key(algebra(a, b), subspace(line)).get_str();
      },
      py::arg("line"), py::arg("a") = "-1", py::arg("b") = "-1");
  m.def(
      "lines_conjugate",
      [](const std::string& l1, const std::string& l2, const std::string& a,
         const std::string& b) {
        return lines_conjugate(algebra(a, b), subspace(l1), subspace(l2));
      },
      py::arg("l1"), py::arg("l2"), py::arg("a") = "-1", py::arg("b") = "-1");
  m.def(
      "orbit_lines_in_plane",
      [](const std::string& line, const std::string& plane, int k,
         const std::string& a, const std::string& b) {
        std::vector<std::string> out;
        for (const auto& l :
             orbit_lines_in_plane(algebra(a, b), subspace(line),
                                  subspace(plane), k))
          out.push_back(subspace_str(l));
        return out;
      },
      py::arg("line"), py::arg("plane"), py::arg("k"), py::arg("a") = "-1",
      py::arg("b") = "-1");
  m.def(
      "is_parallel",
      [](const std::string& m1, const std::string& n1, const py::dict& tagging,
         const std::string& default_tag, const std::string& a,
         const std::string& b) {
        CliffordLikeParallelism cl = build_parallelism(
            algebra(a, b), tags_from(tagging, default_tag));
        return is_parallel(cl, subspace(m1), subspace(n1));
      },
      py::arg("m"), py::arg("n"), py::arg("tagging") = py::dict(),
      py::arg("default_tag") = "right", py::arg("a") = "-1",
      py::arg("b") = "-1");
  m.def(
      "lambda_fixes_all_classes",
      [](const std::string& g, const py::dict& tagging,
         const std::string& default_tag, const std::string& a,
         const std::string& b) {
        CliffordLikeParallelism cl = build_parallelism(
            algebra(a, b), tags_from(tagging, default_tag));
        auto res = lambda_fixes_all_classes(cl, quat(g));
        return py::make_tuple(res.fixes_all,
                              res.witness ? py::object(py::str(subspace_str(
                                                *res.witness)))
                                          : py::none());
      },
      py::arg("g"), py::arg("tagging") = py::dict(),
      py::arg("default_tag") = "right", py::arg("a") = "-1",
      py::arg("b") = "-1");

  // --- verification harness ----------------------------------------------
  m.def("run_config", [](const std::string& config_text) {
    return emit_machine(run_suites(parse_config(config_text)));
  });
  m.def("suite_names", [] { return all_suite_names(); });
}
