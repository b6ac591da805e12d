"""Smoke tests for the compiled module: thin checks that the bindings wire
through to the exact kernels."""

import pytest

import cliffpar


def test_rational_arithmetic():
    assert cliffpar.rational_add("1/2", "1/3") == "5/6"
    assert cliffpar.squarefree_part("-8") == "-2"
    assert cliffpar.rational_is_square("25/4")
    assert not cliffpar.rational_is_square("-1")


def test_f2_arithmetic():
    assert cliffpar.f2_add("s", "s") == "0"
    assert cliffpar.f2_mul("s + t", "s + t") == "s^2 + t^2"
    assert cliffpar.f2_is_square("s^2*t^2")
    assert not cliffpar.f2_is_square("s")


def test_algebra():
    assert cliffpar.mul("i", "j") == "k"
    assert cliffpar.mul("1 + i", "1 - i") == "2"
    assert cliffpar.inverse("1 + i") == "1/2 - 1/2*i"
    assert cliffpar.conjugate_trace_norm("1 + i") == ("1 - i", "2", "2")
    assert cliffpar.kinematic_witness("1 + i") == ("-2", "2")
    assert cliffpar.is_division("-1", "-1")
    assert not cliffpar.is_division("1", "1")
    assert cliffpar.validate_case_b("s", "t")
    assert not cliffpar.validate_case_b("s", "s")


def test_geometry():
    assert cliffpar.span(["1 + i", "i"]) == "1; i"
    assert cliffpar.intersect("1; i; j", "1; i; k") == "1; i"
    assert cliffpar.incident("1", "1; i")
    assert cliffpar.perp("1") == "i; j; k"
    assert cliffpar.star_membership("1; i")
    assert not cliffpar.star_membership("j; k")


def test_parallelisms():
    assert cliffpar.ds_common_point("1", "i", "j") == "k"
    assert cliffpar.is_parallel_side("j; k", "1; i", "left")
    assert cliffpar.line_through_in_class("j", "1; i", "left") == "j; k"
    assert cliffpar.right_class_kernel("j; k") == "1; i"


def test_orbits():
    assert cliffpar.line_orbit_key("1; i") == "-1"
    assert cliffpar.line_orbit_key("1; i + j") == "-2"
    assert cliffpar.lines_conjugate("1; i", "1; 3*i + 4*j")
    lines = cliffpar.orbit_lines_in_plane("1; i", "1; i; j", 3)
    assert lines == ["1; i", "1; j", "1; i + 4/3*j"]
    assert cliffpar.is_parallel("1; i", "1 + j; i - k", {"-1": "left"})
    fixes, witness = cliffpar.lambda_fixes_all_classes("i", {"-1": "left"})
    assert not fixes and witness is not None


def test_conjugator():
    h = cliffpar.conjugator("i", "j")
    assert h == "i + j"
    assert cliffpar.conjugator("i", "1 + i") is None


def test_errors_are_python_exceptions():
    with pytest.raises(cliffpar.CliffparError):
        cliffpar.inverse("0")


def test_run_config():
    report = cliffpar.run_config(
        "kind = caseA\nseed = 42\nheight_bound = 4\nchecks = ds\n"
        "[samples]\nds = 25\n"
    )
    assert '"overall": "pass"' in report
    assert '"check": "ds"' in report
