"""Shared fixture complexes and independent brute-force oracles."""
from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from mcur import (Chain1, Chain2, MetricComplex, boundary2, total_mass)


def make_triangle() -> MetricComplex:
    """Unit triangle with one unit-area face."""
    return MetricComplex(
        vertices=[("a", (0.0, 0.0)), ("b", (1.0, 0.0)), ("c", (0.5, 1.0))],
        edges=[("ab", "a", "b", 1), ("bc", "b", "c", 1), ("ca", "c", "a", 1)],
        faces=[("F", ("+ab", "+bc", "+ca"), 1)])


def make_two_triangles() -> MetricComplex:
    """Two unit triangles glued along bc; rational lengths off the spine."""
    return MetricComplex(
        vertices=[("a", (0.0, 0.0)), ("b", (1.0, 0.0)), ("c", (1.0, 1.0)),
                  ("d", (2.0, 0.5))],
        edges=[("ab", "a", "b", 1), ("bc", "b", "c", 1), ("ca", "c", "a", "3/2"),
               ("bd", "b", "d", "1/2"), ("dc", "d", "c", "1/2")],
        faces=[("F1", ("+ab", "+bc", "+ca"), 1),
               ("F2", ("+bd", "+dc", "-bc"), "1/2")])


def make_figure_eight() -> MetricComplex:
    """Two cycles of lengths 3 and 4 sharing the vertex b (no faces)."""
    return MetricComplex(
        vertices=[("b", (0.0, 0.0)), ("c", (-1.0, 1.0)), ("d", (-1.0, -1.0)),
                  ("e", (1.0, 1.0)), ("f", (2.0, 1.0)), ("g", (2.0, -1.0))],
        edges=[("bc", "b", "c", 1), ("cd", "c", "d", 1), ("db", "d", "b", 1),
               ("be", "b", "e", 1), ("ef", "e", "f", 1), ("fg", "f", "g", 1),
               ("gb", "g", "b", 1)])


def make_lollipop() -> MetricComplex:
    """Path a-b plus cycle b-c-d-b, unit lengths."""
    return MetricComplex(
        vertices=[("a", (0.0, 0.0)), ("b", (1.0, 0.0)), ("c", (2.0, 1.0)),
                  ("d", (2.0, -1.0))],
        edges=[("ab", "a", "b", 1), ("bc", "b", "c", 1), ("cd", "c", "d", 1),
               ("db", "d", "b", 1)])


def make_multigraph() -> MetricComplex:
    """Parallel edges a=b, a self-loop at a, and a tail b-c-d."""
    return MetricComplex(
        vertices=[("a", (0.0, 0.0)), ("b", (1.0, 0.0)), ("c", (2.0, 0.0)),
                  ("d", (3.0, 0.0))],
        edges=[("m1", "a", "b", 1), ("m2", "a", "b", 2), ("aa", "a", "a", 1),
               ("bc", "b", "c", 1), ("cd", "c", "d", 1)])


def make_walk_complex() -> MetricComplex:
    """Six vertices: two triangles sharing bc, plus a tail c-e-f."""
    return MetricComplex(
        vertices=[("a", (0.0, 0.0)), ("b", (1.0, 0.0)), ("c", (1.0, 1.0)),
                  ("d", (2.0, 0.0)), ("e", (1.0, 2.0)), ("f", (2.0, 2.0))],
        edges=[("ab", "a", "b", 1), ("bc", "b", "c", 1), ("ca", "c", "a", 1),
               ("bd", "b", "d", 1), ("dc", "d", "c", 1), ("ce", "c", "e", 1),
               ("ef", "e", "f", 1)])


def make_eight_edge() -> MetricComplex:
    """Unit triangle with a face plus five pendant tree edges (8 edges)."""
    return MetricComplex(
        vertices=[("a", (0.0, 0.0)), ("b", (1.0, 0.0)), ("c", (0.5, 1.0)),
                  ("d", (-1.0, 0.0)), ("e", (2.0, 0.0)), ("f", (0.5, 2.0)),
                  ("g", (-2.0, 0.0)), ("h", (3.0, 0.0))],
        edges=[("ab", "a", "b", 1), ("bc", "b", "c", 1), ("ca", "c", "a", 1),
               ("ad", "a", "d", 1), ("be", "b", "e", 1), ("cf", "c", "f", 1),
               ("dg", "d", "g", 1), ("eh", "e", "h", 1)],
        faces=[("F", ("+ab", "+bc", "+ca"), 1)])


def make_annulus() -> MetricComplex:
    """Two nested square cycles joined by nothing fillable: the inner cycle
    is not a 2-boundary (the single face spans only one outer corner)."""
    return MetricComplex(
        vertices=[("i1", (1.0, 1.0)), ("i2", (2.0, 1.0)), ("i3", (2.0, 2.0)),
                  ("i4", (1.0, 2.0))],
        edges=[("e1", "i1", "i2", 1), ("e2", "i2", "i3", 1),
               ("e3", "i3", "i4", 1), ("e4", "i4", "i1", 1)])


@pytest.fixture
def triangle():
    return make_triangle()


@pytest.fixture
def two_triangles():
    return make_two_triangles()


@pytest.fixture
def figure_eight():
    return make_figure_eight()


@pytest.fixture
def lollipop():
    return make_lollipop()


@pytest.fixture
def multigraph():
    return make_multigraph()


@pytest.fixture
def walk_complex():
    return make_walk_complex()


@pytest.fixture
def eight_edge():
    return make_eight_edge()


# -- independent oracles ----------------------------------------------------

def flat_norm_bruteforce(t: Chain1) -> Fraction:
    """Exhaustive minimum of M(t - b2(s)) + M(s) over |s(f)| <= max|t| + 1."""
    cx = t.complex
    faces = sorted(cx.faces)
    bound = max((abs(v) for _, v in t.items()), default=0) + 1
    best = None
    for combo in itertools.product(range(-bound, bound + 1), repeat=len(faces)):
        s = Chain2(cx, dict(zip(faces, combo)))
        value = total_mass(t - boundary2(s)) + total_mass(s)
        if best is None or value < best:
            best = value
    return best


def filling_bruteforce(t: Chain1, bound: int):
    """Exhaustive minimum mass of s with b2(s) = t, |s(f)| <= bound."""
    cx = t.complex
    faces = sorted(cx.faces)
    best = None
    for combo in itertools.product(range(-bound, bound + 1), repeat=len(faces)):
        s = Chain2(cx, dict(zip(faces, combo)))
        if boundary2(s) == t:
            value = total_mass(s)
            if best is None or value < best:
                best = value
    return best


def random_chain1(cx, rng, max_edges=6, max_coeff=3) -> Chain1:
    edges = sorted(cx.edges)
    count = rng.randint(0, min(max_edges, len(edges)))
    chosen = rng.sample(edges, count)
    coeffs = {}
    for eid in chosen:
        value = rng.randint(-max_coeff, max_coeff)
        if value:
            coeffs[eid] = value
    return Chain1(cx, coeffs)
