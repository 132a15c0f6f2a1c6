"""Flat norm, minimal fillings, and isoperimetric-style diagnostics.

The flat norm of a 1-chain t is the exact minimum of M(t - b2(s)) + M(s)
over integer 2-chains s.  The L1 objective is linearized by splitting every
coefficient into nonnegative parts and solved by the exact rational simplex;
when the relaxation optimum is not integral (face boundary walks may repeat
an edge, so the system need not be totally unimodular), branch-and-bound on
the fractional face variables finishes the job.  Complexes with at most one
face take a direct route: the objective is a one-variable piecewise-linear
convex function, minimized exactly over its breakpoints.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _simplex
from .chains import Chain1, Chain2, boundary, boundary2, mass, normal_mass, total_mass
from .errors import NonZeroBoundary, StructuralError
from ._simplex import INFEASIBLE, OPTIMAL


@dataclass(frozen=True)
class FlatNormResult:
    """Optimal value with its witness splitting t = r + b2(s)."""
    value: Fraction
    r: Chain1
    s: Chain2
    optimal: bool
    relaxation_integral: bool


@dataclass(frozen=True)
class FillingResult:
    """A mass-minimal integer 2-chain with the prescribed boundary.

    When ``feasible`` is False no integer filling exists and ``s`` is the
    zero 2-chain.
    """
    s: Chain2
    fill_mass: Fraction
    feasible: bool


@dataclass(frozen=True)
class IsoperimetricReport:
    F: Fraction
    M: Fraction
    N: Fraction
    ratio_FN2: Fraction


def _require_chain1(t):
    if not isinstance(t, Chain1):
        raise StructuralError("expected a 1-chain")


def _face_columns(cx, edge_order):
    """Edge-by-face boundary coefficients, one dense column per face."""
    index = {e: i for i, e in enumerate(edge_order)}
    columns = {}
    for fid in sorted(cx.faces):
        col = [0] * len(edge_order)
        for eid, sign in cx.faces[fid].edges:
            col[index[eid]] += sign
        columns[fid] = col
    return columns


def _active_edges(t):
    active = set(t.support())
    for face in t.complex.faces.values():
        active.update(eid for eid, _ in face.edges)
    return sorted(active)


def _chain_from_s(cx, face_order, svec):
    return Chain2(cx, {f: int(v) for f, v in zip(face_order, svec)})


def _one_face_minimum(t):
    """Exact minimum of M(t - s*b2(face)) + |s|*area over s, with the
    continuous minimum alongside (for the integrality-gap flag)."""
    cx = t.complex
    fid = next(iter(cx.faces))
    area = cx.faces[fid].area
    coeff: dict[str, int] = {}
    for eid, sign in cx.faces[fid].edges:
        coeff[eid] = coeff.get(eid, 0) + sign
    edges = sorted(set(t.support()) | set(coeff))
    lengths = {e: cx.edges[e].length for e in edges}

    def value_at(s: Fraction) -> Fraction:
        acc = abs(s) * area
        for e in edges:
            acc += abs(Fraction(t.coeff(e)) - s * coeff.get(e, 0)) * lengths[e]
        return acc

    breakpoints = {Fraction(0)}
    for e in edges:
        b = coeff.get(e, 0)
        if b:
            breakpoints.add(Fraction(t.coeff(e), b))
    continuous = min(value_at(s) for s in breakpoints)
    candidates = {0}
    for s in breakpoints:
        candidates.add(math.floor(s))
        candidates.add(math.ceil(s))
    best_s = min(candidates, key=lambda s: (value_at(Fraction(s)), abs(s), s))
    return int(best_s), value_at(Fraction(best_s)), continuous, fid


def _build_flatnorm_lp(t, edge_order, face_order, columns, box):
    """Variables [r+, r-, s+, s-]; equalities r + b2(s) = t on active edges."""
    ne, nf = len(edge_order), len(face_order)
    c = []
    for e in edge_order:
        c.append(t.complex.edges[e].length)
    c = c + c[:]
    areas = [t.complex.faces[f].area for f in face_order]
    c += areas + areas
    a_eq = []
    b_eq = []
    for i, e in enumerate(edge_order):
        row = [Fraction(0)] * (2 * ne + 2 * nf)
        row[i] = Fraction(1)
        row[ne + i] = Fraction(-1)
        for j, f in enumerate(face_order):
            bcoeff = Fraction(columns[f][i])
            row[2 * ne + j] = bcoeff
            row[2 * ne + nf + j] = -bcoeff
        a_eq.append(row)
        b_eq.append(Fraction(t.coeff(e)))
    a_le = []
    b_le = []
    for j in range(nf):
        row = [Fraction(0)] * (2 * ne + 2 * nf)
        row[2 * ne + j] = Fraction(1)
        row[2 * ne + nf + j] = Fraction(1)
        a_le.append(row)
        b_le.append(Fraction(box[j]))
    return c, a_eq, b_eq, a_le, b_le, 2 * ne


def _branch_and_bound(c, a_eq, b_eq, a_le, b_le, s_offset, nf,
                      incumbent_value, incumbent_s):
    """Minimize exactly over integer s; returns (value, s, root_value)."""
    status, x, root_value = _simplex.solve_lp(c, a_eq, b_eq, a_le, b_le)
    if status != OPTIMAL:
        raise AssertionError(f"root relaxation unexpectedly {status}")
    best_value, best_s = incumbent_value, list(incumbent_s)
    stack = [[]]
    while stack:
        extra = stack.pop()
        if extra:
            status, x, value = _simplex.solve_lp(
                c, a_eq, b_eq, list(a_le) + [row for row, _ in extra],
                list(b_le) + [rhs for _, rhs in extra])
        else:
            value = root_value
        if status == INFEASIBLE or value is None or value >= best_value:
            continue
        svec = [x[s_offset + j] - x[s_offset + nf + j] for j in range(nf)]
        frac = next((j for j, v in enumerate(svec) if v.denominator != 1), None)
        if frac is None:
            best_value, best_s = value, [int(v) for v in svec]
            continue
        n = len(c)
        low = [Fraction(0)] * n
        low[s_offset + frac] = Fraction(1)
        low[s_offset + nf + frac] = Fraction(-1)
        high = [-v for v in low]
        floor_v = Fraction(math.floor(svec[frac]))
        stack.append(extra + [(high, -(floor_v + 1))])  # s_f >= floor+1
        stack.append(extra + [(low, floor_v)])          # s_f <= floor
    return best_value, best_s, root_value


def flat_norm(t: Chain1) -> FlatNormResult:
    """Exact flat norm of t with an optimal witness splitting."""
    _require_chain1(t)
    cx = t.complex
    if not cx.faces or t.is_zero:
        m = total_mass(t)
        return FlatNormResult(value=m, r=t, s=Chain2(cx), optimal=True,
                              relaxation_integral=True)
    if len(cx.faces) == 1:
        s_int, value, continuous, fid = _one_face_minimum(t)
        s = Chain2(cx, {fid: s_int})
        r = t - boundary2(s)
        assert value == total_mass(r) + total_mass(s)
        return FlatNormResult(value=value, r=r, s=s, optimal=True,
                              relaxation_integral=(continuous == value))

    edge_order = _active_edges(t)
    face_order = sorted(cx.faces)
    columns = _face_columns(cx, edge_order)
    mass_t = total_mass(t)
    box = [mass_t / cx.faces[f].area for f in face_order]
    box = [math.floor(v) for v in box]
    c, a_eq, b_eq, a_le, b_le, s_offset = _build_flatnorm_lp(
        t, edge_order, face_order, columns, box)
    value, svec, root_value = _branch_and_bound(
        c, a_eq, b_eq, a_le, b_le, s_offset, len(face_order),
        incumbent_value=mass_t, incumbent_s=[0] * len(face_order))
    s = _chain_from_s(cx, face_order, svec)
    r = t - boundary2(s)
    assert value == total_mass(r) + total_mass(s)
    return FlatNormResult(value=value, r=r, s=s, optimal=True,
                          relaxation_integral=(root_value == value))


def minimal_filling(t: Chain1) -> FillingResult:
    """Mass-minimal integer 2-chain s with b2(s) = t, if one exists.

    Requires boundary(t) = 0; a chain that is not an integer 2-boundary in
    this complex yields ``feasible=False``.
    """
    _require_chain1(t)
    cx = t.complex
    if boundary(t):
        raise NonZeroBoundary("filling requires a boundaryless chain")
    if t.is_zero:
        return FillingResult(s=Chain2(cx), fill_mass=Fraction(0), feasible=True)
    if not cx.faces:
        return FillingResult(s=Chain2(cx), fill_mass=Fraction(0), feasible=False)

    edge_order = _active_edges(t)
    face_order = sorted(cx.faces)
    columns = _face_columns(cx, edge_order)
    matrix = [[columns[f][i] for f in face_order] for i in range(len(edge_order))]
    rhs = [t.coeff(e) for e in edge_order]
    x0 = _simplex.integer_solve(matrix, rhs)
    if x0 is None:
        return FillingResult(s=Chain2(cx), fill_mass=Fraction(0), feasible=False)
    areas = [cx.faces[f].area for f in face_order]
    upper = sum(abs(v) * a for v, a in zip(x0, areas))
    box = [math.floor(upper / a) for a in areas]

    nf = len(face_order)
    c = areas + areas
    a_eq = []
    b_eq = []
    for i in range(len(edge_order)):
        row = [Fraction(v) for v in matrix[i]] + [Fraction(-v) for v in matrix[i]]
        a_eq.append(row)
        b_eq.append(Fraction(rhs[i]))
    a_le = []
    b_le = []
    for j in range(nf):
        row = [Fraction(0)] * (2 * nf)
        row[j] = Fraction(1)
        row[nf + j] = Fraction(1)
        a_le.append(row)
        b_le.append(Fraction(box[j]))
    value, svec, _ = _branch_and_bound(
        c, a_eq, b_eq, a_le, b_le, 0, nf,
        incumbent_value=upper, incumbent_s=x0)
    s = _chain_from_s(cx, face_order, svec)
    assert boundary2(s) == t
    assert value == total_mass(s)
    return FillingResult(s=s, fill_mass=value, feasible=True)


def isoperimetric_report(t: Chain1) -> IsoperimetricReport:
    """F, M, N of a chain plus the dimensionless ratio F/N^2."""
    _require_chain1(t)
    f = flat_norm(t).value
    m = total_mass(t)
    n = normal_mass(t)
    assert f <= m <= n
    ratio = Fraction(0) if n == 0 else f / (n * n)
    return IsoperimetricReport(F=f, M=m, N=n, ratio_FN2=ratio)
