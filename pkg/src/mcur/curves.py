"""Polyline curves on a complex: currentification, classification, splitting.

A :class:`CurvePiece` is a vertex walk together with the explicit edge taken
at each step (needed in multigraphs, where consecutive vertices may be joined
by several parallel edges and injectivity of the underlying curve depends on
which one is traversed).  Curves are vertex walks rather than arc-length
parametrizations; constant-speed reparametrization is a no-op at this scale.
"""
from __future__ import annotations

import enum

from fractions import Fraction

from .chains import Chain1, boundary, total_mass
from .complexes import MetricComplex
from .errors import (BoundaryMismatch, CancellingCurve, Mismatch,
                     NotApplicable, NonZeroBoundary, StructuralError,
                     SupportViolation, ZeroChain)


class Classification(enum.Enum):
    INJECTIVE_PATH = "injective_path"
    INJECTIVE_LOOP = "injective_loop"
    NEITHER = "neither"


class CurvePiece:
    """A walk v0..vm (m >= 1) whose consecutive pairs traverse edges of the
    complex in either orientation.

    When ``steps`` is omitted, each step takes the smallest-id edge joining
    the pair, preferring the forward orientation.
    """

    __slots__ = ("complex", "vertices", "steps")

    def __init__(self, cx: MetricComplex, vertices, steps=None):
        vertices = tuple(str(v) for v in vertices)
        if len(vertices) < 2:
            raise StructuralError("a walk needs at least one step")
        for v in vertices:
            if v not in cx.vertices:
                raise StructuralError(f"unknown vertex id {v!r}")
        if steps is None:
            resolved = []
            for u, w in zip(vertices, vertices[1:]):
                options = cx.edges_between(u, w)
                if not options:
                    raise StructuralError(f"no edge joins {u!r} and {w!r}")
                resolved.append(options[0])
            steps = tuple(resolved)
        else:
            steps = tuple((str(e), int(s)) for e, s in steps)
            if len(steps) != len(vertices) - 1:
                raise StructuralError("steps and vertices do not line up")
            for (u, w), (eid, sign) in zip(zip(vertices, vertices[1:]), steps):
                edge = cx.edges.get(eid)
                if edge is None:
                    raise StructuralError(f"unknown edge id {eid!r}")
                if sign not in (1, -1):
                    raise StructuralError("step sign must be +1 or -1")
                start, end = (edge.tail, edge.head) if sign == 1 else (edge.head, edge.tail)
                if (start, end) != (u, w):
                    raise StructuralError(
                        f"edge {eid!r} does not lead from {u!r} to {w!r}")
        object.__setattr__(self, "complex", cx)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "steps", steps)

    def __setattr__(self, name, value):
        raise AttributeError("CurvePiece is immutable")

    def __eq__(self, other):
        return (isinstance(other, CurvePiece) and other.complex is self.complex
                and other.vertices == self.vertices and other.steps == self.steps)

    def __hash__(self):
        return hash((id(self.complex), self.vertices, self.steps))

    def __repr__(self):
        return f"CurvePiece({' '.join(self.vertices)})"

    @property
    def classification(self) -> Classification:
        return classify(self)


def classify(c: CurvePiece) -> Classification:
    """Injective path (all vertices distinct), injective loop (closed,
    injective away from the matching endpoints), or neither.

    The two-step walk that backtracks over one and the same edge is a
    cancelling curve, not an injective loop, even though its vertex list
    looks closed.
    """
    v = c.vertices
    if len(set(v)) == len(v):
        return Classification.INJECTIVE_PATH
    m = len(v) - 1
    if v[0] == v[m] and len(set(v[:m])) == m:
        if m == 2 and c.steps[0][0] == c.steps[1][0]:
            return Classification.NEITHER
        return Classification.INJECTIVE_LOOP
    return Classification.NEITHER


def currentify(c: CurvePiece) -> Chain1:
    """Signed sum of the traversed edges, with cancellation."""
    acc: dict[str, int] = {}
    for eid, sign in c.steps:
        acc[eid] = acc.get(eid, 0) + sign
    return Chain1(c.complex, acc)


def length(c: CurvePiece) -> Fraction:
    """Traversed length, counting every step."""
    edges = c.complex.edges
    return sum((edges[eid].length for eid, _ in c.steps), Fraction(0))


def is_cancelling(c: CurvePiece) -> bool:
    """True when back-and-forth traversal loses mass: M([[c]]) < length."""
    return total_mass(currentify(c)) != length(c)


def _earliest_repeat(vertices):
    seen: dict[str, int] = {}
    for j, v in enumerate(vertices):
        if v in seen:
            return seen[v], j
        seen[v] = j
    return None


def _split_rec(c: CurvePiece) -> list[CurvePiece]:
    if classify(c) is not Classification.NEITHER:
        return [c]
    pair = _earliest_repeat(c.vertices)
    assert pair is not None
    i, j = pair
    m = len(c.vertices) - 1
    cx = c.complex
    if i == 0 or j == m:
        # An interior point hits an endpoint: cut the walk there.
        p = j if i == 0 else i
        assert 0 < p < m
        left = CurvePiece(cx, c.vertices[:p + 1], c.steps[:p])
        right = CurvePiece(cx, c.vertices[p:], c.steps[p:])
        return _split_rec(left) + _split_rec(right)
    # Interior self-intersection: carve out the loop between the two visits
    # and rejoin the outer arcs through the shared vertex.
    loop = CurvePiece(cx, c.vertices[i:j + 1], c.steps[i:j])
    joined = CurvePiece(cx, c.vertices[:i + 1] + c.vertices[j + 1:],
                        c.steps[:i] + c.steps[j:])
    return _split_rec(joined) + [loop]


def split_at_self_intersection(c: CurvePiece) -> list[CurvePiece]:
    """Split a non-cancelling, non-injective walk into injective pieces.

    The pieces' currentifications sum to currentify(c) with a valid
    additivity certificate.  Splits happen at the earliest repeated vertex;
    endpoint hits cut the walk, interior repeats carve out a loop.
    """
    cls = classify(c)
    if cls is not Classification.NEITHER:
        raise NotApplicable(f"walk is already {cls.value}")
    if is_cancelling(c):
        raise CancellingCurve(
            "walk loses mass to back-and-forth traversal; decompose the "
            "chain instead")
    return _split_rec(c)


def as_curve(t: Chain1) -> CurvePiece:
    """Convert an indecomposable chain back into the curve carrying it.

    Paths start at the boundary source; loops take the minimal vertex id as
    their basepoint (chain equality is basepoint-free, piece equality is
    not).
    """
    from .decompose import is_indecomposable
    result = is_indecomposable(t)
    if not result:
        raise NotApplicable("only indecomposable chains are single curves")
    return CurvePiece(t.complex, result.vertices, result.steps)


def constant_multiple_on_cycle(t: Chain1, c: CurvePiece) -> int:
    """The unique k with t = k * currentify(c), for boundaryless t supported
    on an injective loop."""
    if classify(c) is not Classification.INJECTIVE_LOOP:
        raise NotApplicable("curve is not an injective loop")
    if not isinstance(t, Chain1) or t.complex is not c.complex:
        raise StructuralError("chain and curve live on different complexes")
    if t.is_zero:
        raise ZeroChain("the zero chain is a multiple of nothing in particular")
    cycle_edges = {eid for eid, _ in c.steps}
    if not t.support() <= cycle_edges:
        raise SupportViolation("chain leaves the cycle's edges")
    if boundary(t):
        raise NonZeroBoundary("chain has boundary on a closed cycle")
    gamma = currentify(c)
    eid = min(t.support())
    k = t.coeff(eid) * gamma.coeff(eid)
    # A boundaryless chain on a simple cycle is forced to be constant.
    assert t == k * gamma, "non-constant coefficients despite zero boundary"
    return k


def unit_path_on_arc(t: Chain1, c: CurvePiece) -> Chain1:
    """Confirm t = currentify(c) for a chain supported on an injective arc
    with the arc's boundary.  A failure past the preconditions is a bug."""
    if classify(c) is not Classification.INJECTIVE_PATH:
        raise NotApplicable("curve is not an injective path")
    if not isinstance(t, Chain1) or t.complex is not c.complex:
        raise StructuralError("chain and curve live on different complexes")
    arc_edges = {eid for eid, _ in c.steps}
    if not t.support() <= arc_edges:
        raise SupportViolation("chain leaves the arc's edges")
    gamma = currentify(c)
    if boundary(t) != boundary(gamma):
        raise BoundaryMismatch("chain boundary differs from the arc's")
    if t != gamma:
        raise Mismatch("rigidity violated; this is an implementation bug")
    return t
