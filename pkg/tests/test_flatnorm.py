"""Flat norm, minimal fillings, and the isoperimetric report, cross-checked
against exhaustive enumeration oracles."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from mcur import (Chain1, Chain2, MetricComplex, boundary2, flat_norm,
                  isoperimetric_report, minimal_filling, normal_mass,
                  total_mass)
from mcur.errors import NonZeroBoundary

from conftest import (filling_bruteforce, flat_norm_bruteforce, make_annulus,
                      make_triangle, make_two_triangles, random_chain1)


def assert_witness(t, result):
    assert t == result.r + boundary2(result.s)
    assert result.value == total_mass(result.r) + total_mass(result.s)
    assert result.value <= total_mass(t)


def test_flat_norm_fills_unit_cycle(triangle):
    t = Chain1(triangle, {"ab": 1, "bc": 1, "ca": 1})
    assert flat_norm_bruteforce(t) == 1
    result = flat_norm(t)
    assert result.value == 1
    assert result.r.is_zero
    assert result.s in (Chain2(triangle, {"F": 1}), Chain2(triangle, {"F": -1}))
    assert_witness(t, result)


def test_flat_norm_zero_chain(triangle):
    result = flat_norm(Chain1(triangle))
    assert result.value == 0
    assert result.r.is_zero and result.s.is_zero


def test_flat_norm_keeps_single_edge(triangle):
    t = Chain1(triangle, {"ab": 1})
    # oracle: s in {-1, 0, 1}; s = +-1 costs |1 -+ 1| + 2 + 1 >= 3 > 1
    assert flat_norm_bruteforce(t) == 1
    result = flat_norm(t)
    assert result.value == 1
    assert result.r == t and result.s.is_zero


def test_flat_norm_no_faces(figure_eight):
    t = Chain1(figure_eight, {"bc": 2, "cd": -1})
    result = flat_norm(t)
    assert result.value == total_mass(t) == 3
    assert result.r == t and result.s.is_zero
    assert result.relaxation_integral


def test_flat_norm_matches_bruteforce_random():
    rng = random.Random(11)
    for cx in (make_triangle(), make_two_triangles()):
        for _ in range(30):
            t = random_chain1(cx, rng, max_edges=4, max_coeff=3)
            result = flat_norm(t)
            assert result.value == flat_norm_bruteforce(t)
            assert_witness(t, result)


def test_flat_norm_subadditive():
    rng = random.Random(13)
    cx = make_two_triangles()
    for _ in range(25):
        a = random_chain1(cx, rng, max_edges=3, max_coeff=2)
        b = random_chain1(cx, rng, max_edges=3, max_coeff=2)
        assert flat_norm(a + b).value <= flat_norm(a).value + flat_norm(b).value


def repeated_edge_face(extra_face=False):
    """A face whose boundary walk triples one self-loop: its boundary column
    is 3, so the relaxation optimum lands at s = 1/3."""
    faces = [("G1", (("L", 1), ("L", 1), ("L", 1)), "1/4")]
    if extra_face:
        faces.append(("G2", (("L", 1), ("L", 1), ("L", 1)), "1/3"))
    return MetricComplex(vertices=["a"], edges=[("L", "a", "a", 1)], faces=faces)


def test_flat_norm_fractional_relaxation_single_face():
    cx = repeated_edge_face()
    t = Chain1(cx, {"L": 1})
    result = flat_norm(t)
    assert result.value == flat_norm_bruteforce(t) == 1
    assert result.s.is_zero
    assert not result.relaxation_integral  # LP would take s = 1/3


def test_flat_norm_fractional_relaxation_two_faces():
    cx = repeated_edge_face(extra_face=True)
    t = Chain1(cx, {"L": 1})
    result = flat_norm(t)
    assert result.value == flat_norm_bruteforce(t) == 1
    assert not result.relaxation_integral


def test_flat_norm_triple_loop_uses_face():
    cx = repeated_edge_face()
    t = Chain1(cx, {"L": 3})
    assert flat_norm_bruteforce(t) == Fraction(1, 4)
    result = flat_norm(t)
    assert result.value == Fraction(1, 4)
    assert result.s == Chain2(cx, {"G1": 1})
    assert result.relaxation_integral


# -- minimal filling ---------------------------------------------------------

def test_filling_unit_cycle(triangle):
    t = Chain1(triangle, {"ab": 1, "bc": 1, "ca": 1})
    assert filling_bruteforce(t, 2) == 1
    result = minimal_filling(t)
    assert result.feasible
    assert result.fill_mass == 1
    assert result.s == Chain2(triangle, {"F": 1})


def test_filling_infeasible_on_annulus():
    cx = make_annulus()
    t = Chain1(cx, {"e1": 1, "e2": 1, "e3": 1, "e4": 1})
    result = minimal_filling(t)
    assert not result.feasible
    assert result.s.is_zero and result.fill_mass == 0


def test_filling_zero_chain(triangle):
    result = minimal_filling(Chain1(triangle))
    assert result.feasible and result.fill_mass == 0


def test_filling_requires_zero_boundary(triangle):
    with pytest.raises(NonZeroBoundary):
        minimal_filling(Chain1(triangle, {"ab": 1}))


def test_filling_integer_gap():
    # b2(s) = 3s on the loop: t = L has no integer filling though 1/3 works
    # over the rationals
    cx = repeated_edge_face()
    assert not minimal_filling(Chain1(cx, {"L": 1})).feasible
    result = minimal_filling(Chain1(cx, {"L": 3}))
    assert result.feasible and result.fill_mass == Fraction(1, 4)


def test_filling_matches_bruteforce_random():
    rng = random.Random(17)
    cx = make_two_triangles()
    for _ in range(30):
        s0 = Chain2(cx, {f: rng.randint(-2, 2) for f in cx.faces})
        t = boundary2(s0)
        result = minimal_filling(t)
        assert result.feasible
        assert result.fill_mass == filling_bruteforce(t, 3)
        assert boundary2(result.s) == t


# -- isoperimetric report ------------------------------------------------------

def test_report_unit_cycle(triangle):
    t = Chain1(triangle, {"ab": 1, "bc": 1, "ca": 1})
    report = isoperimetric_report(t)
    assert (report.F, report.M, report.N) == (1, 3, 3)
    assert report.ratio_FN2 == Fraction(1, 9)


def test_report_zero_chain(triangle):
    report = isoperimetric_report(Chain1(triangle))
    assert (report.F, report.M, report.N, report.ratio_FN2) == (0, 0, 0, 0)


def test_report_single_edge(triangle):
    report = isoperimetric_report(Chain1(triangle, {"ab": 1}))
    assert (report.F, report.M, report.N) == (1, 1, 3)
    assert report.ratio_FN2 == Fraction(1, 9)


def test_report_orders_f_m_n():
    rng = random.Random(19)
    cx = make_two_triangles()
    for _ in range(20):
        t = random_chain1(cx, rng, max_edges=4, max_coeff=3)
        report = isoperimetric_report(t)
        assert report.F <= report.M <= report.N
        assert report.N == normal_mass(t)
