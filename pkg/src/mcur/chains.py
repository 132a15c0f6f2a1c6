"""Integer chains and the elementary current operations.

Chains are sparse integer-coefficient vectors over the cells of one
:class:`~mcur.complexes.MetricComplex` (vertices for degree 0, edges for
degree 1, faces for degree 2).  They are value-like and immutable; all
operations are pure, so chains can be shared freely across threads.

The mass of a chain is the weighted absolute coefficient sum (vertex weight
1, edge weight its length, face weight its area); the normal mass of a
1-chain adds the mass of its boundary.  A decomposition of a chain is
certified additive when, cell by cell, the parts' coefficients share the
parent's sign and sum to it - then and only then do the parts' masses (and
boundary masses) add up exactly to the parent's.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import MetricComplex
from .errors import StructuralError

_KIND_NAMES = {0: "vertex", 1: "edge", 2: "face"}


class Chain:
    """Sparse integer chain on one complex; see Chain0/Chain1/Chain2."""

    __slots__ = ("complex", "_c", "_hash")
    kind: int = -1

    def __init__(self, cx: MetricComplex, coeffs=None):
        cells = self._cells(cx)
        clean: dict[str, int] = {}
        for cell, value in (coeffs or {}).items():
            cell = str(cell)
            if cell not in cells:
                raise StructuralError(
                    f"unknown {_KIND_NAMES[self.kind]} id {cell!r}")
            if not isinstance(value, int):
                raise StructuralError(f"coefficient for {cell!r} is not an integer")
            if value:
                clean[cell] = value
        object.__setattr__(self, "complex", cx)
        object.__setattr__(self, "_c", clean)
        object.__setattr__(self, "_hash", None)

    def _cells(self, cx: MetricComplex):
        return (cx.vertices, cx.edges, cx.faces)[self.kind]

    def __setattr__(self, name, value):
        raise AttributeError("chains are immutable")

    # -- value access -------------------------------------------------
    def coeff(self, cell: str) -> int:
        return self._c.get(cell, 0)

    __getitem__ = coeff

    def items(self) -> tuple[tuple[str, int], ...]:
        return tuple(sorted(self._c.items()))

    def support(self) -> frozenset[str]:
        return frozenset(self._c)

    @property
    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    # -- arithmetic ----------------------------------------------------
    def _check_compatible(self, other: "Chain"):
        if type(other) is not type(self):
            raise StructuralError(f"cannot combine {type(self).__name__} with "
                                  f"{type(other).__name__}")
        if other.complex is not self.complex:
            raise StructuralError("chains live on different complexes")

    def __add__(self, other: "Chain") -> "Chain":
        self._check_compatible(other)
        merged = dict(self._c)
        for cell, value in other._c.items():
            merged[cell] = merged.get(cell, 0) + value
        return type(self)(self.complex, merged)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __neg__(self) -> "Chain":
        return type(self)(self.complex, {c: -v for c, v in self._c.items()})

    def __mul__(self, scalar: int) -> "Chain":
        if not isinstance(scalar, int):
            return NotImplemented
        return type(self)(self.complex, {c: scalar * v for c, v in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (type(other) is type(self) and other.complex is self.complex
                and other._c == self._c)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.kind, id(self.complex), self.items())))
        return self._hash

    def __repr__(self):
        body = " ".join(f"{v:+d}*{c}" for c, v in self.items()) or "0"
        return f"{type(self).__name__}({body})"


class Chain0(Chain):
    """Integer 0-chain: a finite signed sum of vertex deltas."""
    kind = 0


class Chain1(Chain):
    """Integer 1-chain: a finite signed sum of oriented edges."""
    kind = 1


class Chain2(Chain):
    """Integer 2-chain: a finite signed sum of oriented faces."""
    kind = 2


def zero_chain(cx: MetricComplex, kind: int) -> Chain:
    return (Chain0, Chain1, Chain2)[kind](cx)


@dataclass(frozen=True)
class MassReport:
    """Mass, boundary mass, and their sum (the normal mass), all exact."""
    mass: Fraction
    boundary_mass: Fraction
    normal_mass: Fraction


def boundary(t: Chain1) -> Chain0:
    """Boundary of a 1-chain: head delta minus tail delta, per signed edge."""
    if not isinstance(t, Chain1):
        raise StructuralError("boundary expects a 1-chain")
    acc: dict[str, int] = {}
    edges = t.complex.edges
    for eid, value in t._c.items():
        edge = edges[eid]
        acc[edge.head] = acc.get(edge.head, 0) + value
        acc[edge.tail] = acc.get(edge.tail, 0) - value
    return Chain0(t.complex, acc)


def boundary2(s: Chain2) -> Chain1:
    """Boundary of a 2-chain: signed sum of each face's boundary walk."""
    if not isinstance(s, Chain2):
        raise StructuralError("boundary2 expects a 2-chain")
    acc: dict[str, int] = {}
    faces = s.complex.faces
    for fid, value in s._c.items():
        for eid, sign in faces[fid].edges:
            acc[eid] = acc.get(eid, 0) + sign * value
    return Chain1(s.complex, acc)


def _weight(chain: Chain, cell: str) -> Fraction:
    if chain.kind == 0:
        return Fraction(1)
    if chain.kind == 1:
        return chain.complex.edges[cell].length
    return chain.complex.faces[cell].area


def total_mass(chain: Chain) -> Fraction:
    """Weighted absolute coefficient sum."""
    return sum((abs(v) * _weight(chain, c) for c, v in chain._c.items()),
               Fraction(0))


def mass(chain: Chain) -> MassReport:
    """Mass report for any chain; 1-chains also get boundary/normal mass.

    For 0- and 2-chains the boundary fields are zero by convention.
    """
    m = total_mass(chain)
    if isinstance(chain, Chain1):
        bm = total_mass(boundary(chain))
    else:
        bm = Fraction(0)
    return MassReport(mass=m, boundary_mass=bm, normal_mass=m + bm)


def normal_mass(t: Chain1) -> Fraction:
    return total_mass(t) + total_mass(boundary(t))


def restrict(t: Chain1, edge_set) -> Chain1:
    """Keep the coefficients on edge_set, zero the rest."""
    if not isinstance(t, Chain1):
        raise StructuralError("restrict expects a 1-chain")
    keep = set()
    for eid in edge_set:
        eid = str(eid)
        if eid not in t.complex.edges:
            raise StructuralError(f"unknown edge id {eid!r}")
        keep.add(eid)
    return Chain1(t.complex, {e: v for e, v in t._c.items() if e in keep})


@dataclass(frozen=True)
class ComplexMap:
    """A map of complexes: vertices to vertices, edges to image walks.

    ``edge_walks[eid]`` is a (possibly empty) tuple of ``(edge_id, sign)``
    steps in the target complex that leads from the image of the source
    edge's tail to the image of its head.
    """
    source: MetricComplex
    target: MetricComplex
    vertex_map: dict
    edge_walks: dict

    def __post_init__(self):
        for v in self.source.vertices:
            if v not in self.vertex_map:
                raise StructuralError(f"vertex {v!r} has no image")
            if self.vertex_map[v] not in self.target.vertices:
                raise StructuralError(f"image vertex {self.vertex_map[v]!r} unknown")
        for eid, edge in self.source.edges.items():
            walk = self.edge_walks.get(eid)
            if walk is None:
                raise StructuralError(f"edge {eid!r} has no image walk")
            at = self.vertex_map[edge.tail]
            for step_eid, sign in walk:
                image = self.target.edges.get(step_eid)
                if image is None:
                    raise StructuralError(f"image edge {step_eid!r} unknown")
                start, end = (image.tail, image.head) if sign == 1 else (image.head, image.tail)
                if start != at:
                    raise StructuralError(
                        f"image walk of {eid!r} is not connected at {at!r}")
                at = end
            if at != self.vertex_map[edge.head]:
                raise StructuralError(
                    f"image walk of {eid!r} does not end at the head's image")

    @classmethod
    def relabel(cls, source: MetricComplex, target: MetricComplex,
                vertex_map: dict, edge_map: dict) -> "ComplexMap":
        """Convenience constructor for bijective relabelings."""
        walks = {eid: ((edge_map[eid], 1),) for eid in source.edges}
        return cls(source, target, vertex_map, walks)


def pushforward(phi: ComplexMap, t: Chain1) -> Chain1:
    """Image chain: each edge is replaced by the signed sum of its walk."""
    if not isinstance(t, Chain1):
        raise StructuralError("pushforward expects a 1-chain")
    if t.complex is not phi.source:
        raise StructuralError("chain does not live on the map's source complex")
    acc: dict[str, int] = {}
    for eid, value in t._c.items():
        for step_eid, sign in phi.edge_walks[eid]:
            acc[step_eid] = acc.get(step_eid, 0) + sign * value
    return Chain1(phi.target, acc)


def pushforward0(phi: ComplexMap, t: Chain0) -> Chain0:
    """Image 0-chain: each vertex delta moves to its image vertex."""
    if not isinstance(t, Chain0):
        raise StructuralError("pushforward0 expects a 0-chain")
    if t.complex is not phi.source:
        raise StructuralError("chain does not live on the map's source complex")
    acc: dict[str, int] = {}
    for vid, value in t._c.items():
        image = phi.vertex_map[vid]
        acc[image] = acc.get(image, 0) + value
    return Chain0(phi.target, acc)


@dataclass(frozen=True)
class AdditivityCertificate:
    """Machine-checkable evidence that a split of a chain preserves mass.

    ``edge_table`` maps each relevant edge to ``(part coefficients, parent
    coefficient)``; ``vertex_table`` does the same for the boundary chains.
    ``mass_additive`` holds iff on every edge the nonzero part coefficients
    share the parent's sign and sum to it; ``boundary_mass_additive`` is the
    same statement vertexwise.  Both true together is exactly normal-mass
    additivity.
    """
    edge_table: dict
    vertex_table: dict
    mass_additive: bool
    boundary_mass_additive: bool

    @property
    def valid(self) -> bool:
        return self.mass_additive and self.boundary_mass_additive


def _sign_consistent_table(parent: Chain, parts) -> tuple[dict, bool]:
    cells = set(parent._c)
    for part in parts:
        cells.update(part._c)
    table = {}
    additive = True
    for cell in sorted(cells):
        coeffs = tuple(p.coeff(cell) for p in parts)
        target = parent.coeff(cell)
        table[cell] = (coeffs, target)
        if sum(coeffs) != target or sum(abs(c) for c in coeffs) != abs(target):
            additive = False
    return table, additive


def verify_decomposition(t: Chain1, parts) -> AdditivityCertificate:
    """Certify whether parts sum to t with cellwise sign consistency.

    Both flags true is equivalent to: the parts sum to t exactly and the
    normal masses add, N(t) = sum N(part).
    """
    parts = list(parts)
    for part in parts:
        if not isinstance(part, Chain1):
            raise StructuralError("decomposition parts must be 1-chains")
        if part.complex is not t.complex:
            raise StructuralError("parts live on a different complex")
    edge_table, mass_ok = _sign_consistent_table(t, parts)
    vertex_table, bdry_ok = _sign_consistent_table(
        boundary(t), [boundary(p) for p in parts])
    return AdditivityCertificate(edge_table, vertex_table, mass_ok, bdry_ok)
