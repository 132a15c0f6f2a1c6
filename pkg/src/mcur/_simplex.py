"""Exact rational linear programming and integer linear systems.

Small dense two-phase simplex over ``fractions.Fraction`` with Bland's rule
(anti-cycling), plus an exact solver for integer linear systems via column
Hermite reduction.  Instances here are desk-scale; exactness beats speed.
"""
from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _pivot(tableau, basis, row, col):
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    for i, line in enumerate(tableau):
        if i != row and line[col]:
            factor = line[col]
            base = tableau[row]
            tableau[i] = [v - factor * base[j] for j, v in enumerate(line)]
    basis[row] = col


def _run_simplex(tableau, basis, obj, ncols):
    """Minimize obj over the current basic feasible tableau (Bland's rule)."""
    m = len(tableau)
    while True:
        dual = [obj[basis[i]] for i in range(m)]
        entering = -1
        for j in range(ncols):
            reduced = obj[j] - sum(dual[i] * tableau[i][j] for i in range(m))
            if reduced < 0:
                entering = j
                break
        if entering < 0:
            return OPTIMAL
        ratio = None
        row = -1
        for i in range(m):
            coeff = tableau[i][entering]
            if coeff > 0:
                r = tableau[i][-1] / coeff
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[row]):
                    ratio, row = r, i
        if row < 0:
            return UNBOUNDED
        _pivot(tableau, basis, row, entering)


def solve_lp(c, a_eq, b_eq, a_le=(), b_le=()):
    """Minimize c.x subject to a_eq x = b_eq, a_le x <= b_le, x >= 0.

    Returns ``(status, x, value)`` with exact rationals; x and value are
    None unless status is "optimal".
    """
    c = [Fraction(v) for v in c]
    nreal = len(c)
    rows = [[Fraction(v) for v in row] + [Fraction(0)] * len(b_le)
            for row in a_eq]
    rhs = [Fraction(v) for v in b_eq]
    for k, row in enumerate(a_le):
        line = [Fraction(v) for v in row] + [Fraction(0)] * len(b_le)
        line[nreal + k] = Fraction(1)  # slack
        rows.append(line)
        rhs.append(Fraction(b_le[k]))
    ntotal = nreal + len(b_le)
    m = len(rows)
    if m == 0:
        return OPTIMAL, [Fraction(0)] * nreal, Fraction(0)

    # Phase 1: artificial basis, b made nonnegative.
    tableau = []
    basis = []
    for i in range(m):
        line = rows[i][:]
        b = rhs[i]
        if b < 0:
            line = [-v for v in line]
            b = -b
        line += [Fraction(0)] * m
        line[ntotal + i] = Fraction(1)
        line.append(b)
        tableau.append(line)
        basis.append(ntotal + i)
    phase1 = [Fraction(0)] * ntotal + [Fraction(1)] * m
    _run_simplex(tableau, basis, phase1, ntotal + m)
    infeas = sum(tableau[i][-1] for i in range(m) if basis[i] >= ntotal)
    if infeas > 0:
        return INFEASIBLE, None, None
    # Drive leftover artificials out of the basis (degenerate rows).
    drop = []
    for i in range(m):
        if basis[i] >= ntotal:
            col = next((j for j in range(ntotal) if tableau[i][j]), None)
            if col is None:
                drop.append(i)
            else:
                _pivot(tableau, basis, i, col)
    if drop:
        tableau = [line for i, line in enumerate(tableau) if i not in drop]
        basis = [b for i, b in enumerate(basis) if i not in drop]

    # Phase 2 on the real objective (slack columns cost 0).
    phase2 = c + [Fraction(0)] * (len(b_le) + m)
    status = _run_simplex(tableau, basis, phase2, ntotal)
    if status != OPTIMAL:
        return status, None, None
    x = [Fraction(0)] * nreal
    for i, var in enumerate(basis):
        if var < nreal:
            x[var] = tableau[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return OPTIMAL, x, value


def integer_solve(a, b):
    """One integer solution x of a x = b, or None if none exists.

    Column Hermite reduction with a tracked unimodular transform; entries
    are Python ints, so there is no overflow.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0:
        return [0] * n
    if n == 0:
        return [] if all(v == 0 for v in b) else None
    h = [list(map(int, row)) for row in a]
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_addmul(dst, src, q):
        for i in range(m):
            h[i][dst] -= q * h[i][src]
        for i in range(n):
            u[i][dst] -= q * u[i][src]

    def col_swap(j1, j2):
        for i in range(m):
            h[i][j1], h[i][j2] = h[i][j2], h[i][j1]
        for i in range(n):
            u[i][j1], u[i][j2] = u[i][j2], u[i][j1]

    def col_negate(j):
        for i in range(m):
            h[i][j] = -h[i][j]
        for i in range(n):
            u[i][j] = -u[i][j]

    pivot_col = {}
    k = 0
    for r in range(m):
        if k >= n:
            break
        while True:
            live = [j for j in range(k, n) if h[r][j]]
            if not live:
                break
            jmin = min(live, key=lambda j: abs(h[r][j]))
            if jmin != k:
                col_swap(k, jmin)
            done = True
            for j in range(k + 1, n):
                if h[r][j]:
                    q = h[r][j] // h[r][k]
                    if q:
                        col_addmul(j, k, q)
                    if h[r][j]:
                        done = False
            if done:
                break
        if h[r][k]:
            if h[r][k] < 0:
                col_negate(k)
            pivot_col[r] = k
            k += 1

    y = [0] * n
    for r in range(m):
        residual = b[r] - sum(h[r][j] * y[j] for j in range(n) if y[j])
        p = pivot_col.get(r)
        if p is None:
            if residual != 0:
                return None
        else:
            q, rem = divmod(residual, h[r][p])
            if rem:
                return None
            y[p] = q
    x = [sum(u[i][j] * y[j] for j in range(n) if y[j]) for i in range(n)]
    for r in range(m):
        if sum(a[r][j] * x[j] for j in range(n)) != b[r]:
            return None  # unreachable; guards the reduction
    return x
