"""Decomposition of integer 1-chains into indecomposable components.

A nonzero 1-chain is indecomposable exactly when its coefficients are all
+-1 and its oriented support is a single vertex-simple open path or a single
vertex-simple cycle.  Every chain splits into such components with exactly
additive normal mass; this module provides

* the indecomposability predicate, with a constructive witness either way,
* a greedy decomposition that repeatedly removes a component ("exact" mode
  removes one of maximal normal mass, "heuristic" mode removes whatever a
  loop-erased walk finds first),
* an exhaustive small-instance oracle that maximizes the concave energy
  sum(F(T_i)^(1/alpha)) over all decompositions, for cross-validation.

"Subcurrent" is used in the local, checkable sense: a part is a subcurrent
of S when on every edge and every boundary vertex its coefficient and the
remainder's agree in sign; removing a subcurrent keeps normal mass exactly
additive.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import (AdditivityCertificate, Chain1, boundary, normal_mass,
                     total_mass, verify_decomposition)
from .errors import InstanceTooLarge, InvalidDecomposition, StructuralError
from .flatnorm import flat_norm

DEFAULT_ALPHA = Fraction(3, 2)
DEFAULT_SMALL_BOUND = 12

ENERGY_SLACK = 1e-12  # comparison slack for the (float) energy values


@dataclass(frozen=True)
class IndecomposabilityResult:
    """Predicate value plus a constructive witness.

    For an indecomposable chain, ``kind``/``vertices``/``steps`` describe the
    simple path or cycle carrying it.  For a decomposable nonzero chain,
    ``split`` is a valid 2-part decomposition.  The zero chain is not
    indecomposable by convention and carries no witness.
    """
    indecomposable: bool
    kind: str | None = None
    vertices: tuple[str, ...] | None = None
    steps: tuple[tuple[str, int], ...] | None = None
    split: tuple[Chain1, Chain1] | None = None

    def __bool__(self) -> bool:
        return self.indecomposable


@dataclass(frozen=True)
class Decomposition:
    """Ordered components plus the certificate that their masses add."""
    components: tuple[Chain1, ...]
    certificate: AdditivityCertificate
    method: str  # greedy | variational_oracle | curve_split


@dataclass(frozen=True)
class EnergyValue:
    """Value of sum(F(T_i)^(1/alpha)); the only non-rational quantity here,
    carried as a float and compared with 1e-12 slack."""
    alpha: Fraction
    value: float


@dataclass(frozen=True)
class BigComponentReport:
    F_parent: Fraction
    N_parent: Fraction
    first_component_N: Fraction
    chain_inequalities_ok: bool
    empirical_constant: Fraction


def _arcs(t: Chain1):
    """Oriented support: arc (u -> w) per edge, following the coefficient
    sign; multiplicities do not matter for vertex-simple walks."""
    out: dict[str, list[tuple[str, int, str]]] = {}
    inc: dict[str, int] = {}
    edges = t.complex.edges
    for eid, value in t.items():
        edge = edges[eid]
        sign = 1 if value > 0 else -1
        u, w = (edge.tail, edge.head) if sign > 0 else (edge.head, edge.tail)
        out.setdefault(u, []).append((eid, sign, w))
        inc[w] = inc.get(w, 0) + 1
    for lst in out.values():
        lst.sort()
    return out, inc


def _oriented_structure(t: Chain1):
    """(kind, vertices, steps) when t is carried by one simple path or
    cycle with +-1 coefficients, else None."""
    if t.is_zero:
        return None
    if any(abs(v) != 1 for _, v in t.items()):
        return None
    out, inc = _arcs(t)
    if any(len(lst) > 1 for lst in out.values()) or any(v > 1 for v in inc.values()):
        return None
    starts = [v for v in out if inc.get(v, 0) == 0]
    if len(starts) > 1:
        return None
    nedges = len(t.support())
    start = starts[0] if starts else min(out)
    vertices = [start]
    steps = []
    at = start
    while at in out and len(steps) < nedges:
        eid, sign, w = out[at][0]
        steps.append((eid, sign))
        vertices.append(w)
        at = w
        if at == start:
            break
    if len(steps) != nedges:
        return None  # disconnected support
    if starts:
        return ("path", tuple(vertices), tuple(steps)) if at != start else None
    return ("cycle", tuple(vertices), tuple(steps)) if at == start else None


def _extract_walk(t: Chain1):
    """Loop-erased walk extraction: the first simple path (boundary source
    to boundary sink) or simple cycle met by a deterministic forward walk."""
    out, _ = _arcs(t)
    bd = {v: c for v, c in boundary(t).items()}
    sources = sorted(v for v, c in bd.items() if c < 0)
    start = sources[0] if sources else min(out)
    vertices = [start]
    positions = {start: 0}
    steps: list[tuple[str, int]] = []
    while True:
        at = vertices[-1]
        if steps and bd.get(at, 0) >= 1:
            return "path", tuple(vertices), tuple(steps)
        arcs = out.get(at)
        assert arcs, "walk stuck: violates boundary accounting"
        eid, sign, w = arcs[0]
        if w in positions:
            i = positions[w]
            return "cycle", tuple(vertices[i:] + [w]), tuple(steps[i:] + [(eid, sign)])
        vertices.append(w)
        positions[w] = len(vertices) - 1
        steps.append((eid, sign))


def _chain_from_steps(cx, steps) -> Chain1:
    return Chain1(cx, {eid: sign for eid, sign in steps})


def is_indecomposable(t: Chain1) -> IndecomposabilityResult:
    """Decide indecomposability; always return a constructive witness.

    The zero chain is classified as not indecomposable (the dichotomy
    concerns nonzero chains; this convention is documented).
    """
    if not isinstance(t, Chain1):
        raise StructuralError("expected a 1-chain")
    if t.is_zero:
        return IndecomposabilityResult(indecomposable=False)
    found = _oriented_structure(t)
    if found is not None:
        kind, vertices, steps = found
        return IndecomposabilityResult(True, kind, vertices, steps)
    _, _, steps = _extract_walk(t)
    part = _chain_from_steps(t.complex, steps)
    rest = t - part
    assert part and rest
    return IndecomposabilityResult(False, split=(part, rest))


# -- candidate components -------------------------------------------------

@dataclass(frozen=True)
class _Candidate:
    kind: str
    steps: tuple[tuple[str, int], ...]
    edge_key: tuple[str, ...]
    n_value: Fraction
    first: str
    last: str

    @property
    def order_key(self):
        return (self.edge_key, self.steps)


def _enumerate_candidates(t: Chain1) -> list[_Candidate]:
    """All sign-consistent simple cycles and boundary-source-to-sink simple
    paths in the oriented support of t.

    Any subcurrent removal shrinks the support and the boundary toward zero
    without flipping signs, so this one list also contains every candidate
    of every remainder reachable from t.
    """
    out, _ = _arcs(t)
    bd = {v: c for v, c in boundary(t).items()}
    lengths = t.complex.edges
    found: list[_Candidate] = []

    def emit(kind, steps, first, last):
        n = sum((lengths[eid].length for eid, _ in steps), Fraction(0))
        if kind == "path":
            n += 2
        key = tuple(sorted(eid for eid, _ in steps))
        found.append(_Candidate(kind, tuple(steps), key, n, first, last))

    # Cycles whose minimal vertex is the DFS root, each found exactly once.
    for root in sorted(out):
        stack = [(root, [], {root})]
        while stack:
            at, steps, seen = stack.pop()
            for eid, sign, w in out.get(at, ()):
                if w == root:
                    emit("cycle", steps + [(eid, sign)], root, root)
                elif w > root and w not in seen:
                    stack.append((w, steps + [(eid, sign)], seen | {w}))

    sinks = {v for v, c in bd.items() if c > 0}
    for root in sorted(v for v, c in bd.items() if c < 0):
        stack = [(root, [], {root})]
        while stack:
            at, steps, seen = stack.pop()
            for eid, sign, w in out.get(at, ()):
                if w in seen:
                    continue
                nxt = steps + [(eid, sign)]
                if w in sinks:
                    emit("path", nxt, root, w)
                stack.append((w, nxt, seen | {w}))

    found.sort(key=lambda c: c.order_key)
    return found


def _compatible(cand: _Candidate, coeffs: dict, bd: dict) -> bool:
    for eid, _ in cand.steps:
        if eid not in coeffs:
            return False
    if cand.kind == "path":
        return bd.get(cand.first, 0) <= -1 and bd.get(cand.last, 0) >= 1
    return True


def _remove(coeffs: dict, bd: dict, cand: _Candidate):
    coeffs = dict(coeffs)
    for eid, sign in cand.steps:
        value = coeffs[eid] - sign
        if value:
            coeffs[eid] = value
        else:
            del coeffs[eid]
    if cand.kind == "path":
        bd = dict(bd)
        for v, delta in ((cand.first, 1), (cand.last, -1)):
            value = bd.get(v, 0) + delta
            if value:
                bd[v] = value
            else:
                bd.pop(v, None)
    return coeffs, bd


def greedy_decompose(t: Chain1, search: str = "heuristic") -> Decomposition:
    """Peel off indecomposable components until nothing remains.

    In "exact" mode each step removes a component of maximal normal mass
    among all sign-consistent indecomposable subcurrents of the remainder
    (ties broken by the sorted edge-id sequence); in "heuristic" mode the
    loop-erased walk supplies a valid but not necessarily maximal component.
    Terminates because every step removes at least one unit of integer mass.
    """
    if not isinstance(t, Chain1):
        raise StructuralError("expected a 1-chain")
    if search not in ("exact", "heuristic"):
        raise StructuralError(f"unknown search mode {search!r}")
    cx = t.complex
    components: list[Chain1] = []
    if search == "heuristic":
        remainder = t
        while remainder:
            _, _, steps = _extract_walk(remainder)
            part = _chain_from_steps(cx, steps)
            components.append(part)
            remainder = remainder - part
    else:
        candidates = _enumerate_candidates(t)
        coeffs = dict(t.items())
        bd = {v: c for v, c in boundary(t).items()}
        while coeffs:
            best = None
            for cand in candidates:
                if not _compatible(cand, coeffs, bd):
                    continue
                if best is None or cand.n_value > best.n_value or (
                        cand.n_value == best.n_value
                        and cand.edge_key < best.edge_key):
                    best = cand
            assert best is not None, "nonzero remainder admits a component"
            components.append(_chain_from_steps(cx, best.steps))
            coeffs, bd = _remove(coeffs, bd, best)
    certificate = verify_decomposition(t, components)
    assert certificate.valid
    return Decomposition(tuple(components), certificate, "greedy")


def enumerate_decompositions(t: Chain1, max_total_mass: int = DEFAULT_SMALL_BOUND):
    """Yield every decomposition of t into sign-consistent indecomposable
    subcurrents, once per unordered multiset, as index tuples into the
    returned candidate list.

    Returns ``(candidates, iterator)``.  Gated to small instances.
    """
    if not isinstance(t, Chain1):
        raise StructuralError("expected a 1-chain")
    weight = sum(abs(v) for _, v in t.items())
    if weight > max_total_mass:
        raise InstanceTooLarge(
            f"total integer edge mass {weight} exceeds the bound {max_total_mass}")
    candidates = _enumerate_candidates(t)

    def recurse(coeffs, bd, min_index):
        if not coeffs:
            yield ()
            return
        for i in range(min_index, len(candidates)):
            cand = candidates[i]
            if _compatible(cand, coeffs, bd):
                rest_coeffs, rest_bd = _remove(coeffs, bd, cand)
                for tail in recurse(rest_coeffs, rest_bd, i):
                    yield (i,) + tail

    coeffs = dict(t.items())
    bd = {v: c for v, c in boundary(t).items()}
    return candidates, recurse(coeffs, bd, 0)


def variational_oracle(t: Chain1, alpha: Fraction = DEFAULT_ALPHA,
                       max_total_mass: int = DEFAULT_SMALL_BOUND):
    """Exhaustively maximize sum(F(T_i)^(1/alpha)) over all decompositions.

    Returns ``(Decomposition, EnergyValue)``.  By strict concavity of
    x^(1/alpha), every component of a maximizer is indecomposable; this is
    asserted, not assumed.  Ties within 1e-12 are broken by the canonical
    (sorted) component ordering, so the output is deterministic.
    """
    alpha = Fraction(alpha)
    if not (1 < alpha < 2):
        raise StructuralError("alpha must lie strictly between 1 and 2")
    exponent = 1.0 / float(alpha)
    candidates, decomps = enumerate_decompositions(t, max_total_mass)
    cx = t.complex
    energy_cache: dict[int, float] = {}

    def term(i: int) -> float:
        if i not in energy_cache:
            value = flat_norm(_chain_from_steps(cx, candidates[i].steps)).value
            energy_cache[i] = float(value) ** exponent
        return energy_cache[i]

    best_key = None
    best_energy = -1.0
    for key in decomps:
        energy = sum(term(i) for i in key)
        if energy > best_energy + ENERGY_SLACK or best_key is None:
            best_key, best_energy = key, energy
        elif energy >= best_energy - ENERGY_SLACK and key < best_key:
            best_key = key
    assert best_key is not None, "every chain admits at least one decomposition"
    components = tuple(_chain_from_steps(cx, candidates[i].steps) for i in best_key)
    for part in components:
        assert is_indecomposable(part)
    certificate = verify_decomposition(t, components)
    assert certificate.valid
    decomposition = Decomposition(components, certificate, "variational_oracle")
    return decomposition, EnergyValue(alpha=alpha, value=best_energy)


def big_component_bound_check(t: Chain1, dec: Decomposition) -> BigComponentReport:
    """Check the instance-checkable links F(t) <= sum F(T_i) and
    F(T_i) <= N(T_i), and report the empirical constant F/(N(T_1)*N(t))."""
    certificate = verify_decomposition(t, dec.components)
    if not certificate.valid:
        raise InvalidDecomposition("certificate fails for the given parts")
    f_parent = flat_norm(t).value
    n_parent = normal_mass(t)
    component_f = [flat_norm(c).value for c in dec.components]
    component_n = [normal_mass(c) for c in dec.components]
    ok = f_parent <= sum(component_f, Fraction(0))
    ok = ok and all(f <= n for f, n in zip(component_f, component_n))
    first_n = component_n[0] if component_n else Fraction(0)
    denom = first_n * n_parent
    constant = f_parent / denom if denom else Fraction(0)
    return BigComponentReport(F_parent=f_parent, N_parent=n_parent,
                              first_component_N=first_n,
                              chain_inequalities_ok=ok,
                              empirical_constant=constant)
