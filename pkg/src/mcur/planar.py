"""Finite-perimeter sets on a pixel grid and their boundary chains.

A :class:`PixelSet` induces a grid complex (unit edge lengths, unit cell
areas, counterclockwise cell orientation) and the 2-chain with coefficient
+1 per filled cell.  Adjacency is shared-edge (4-)adjacency for both the set
and its complement: two cells meeting only at a corner are decomposable, and
the boundary chain then has a degree-4 vertex there, so the two simplicity
criteria agree cell by cell.

Grid coordinates are mathematical (y grows upward); PBM images are ingested
with their top row mapped to the highest y.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from .chains import Chain1, Chain2, boundary2, total_mass
from .complexes import MetricComplex
from .curves import Classification, CurvePiece, classify, currentify
from .errors import EmptySet, NotSimple, ParseError, StructuralError


def vertex_id(x: int, y: int) -> str:
    return f"p{x}_{y}"


def hedge_id(x: int, y: int) -> str:
    return f"h{x}_{y}"


def vedge_id(x: int, y: int) -> str:
    return f"v{x}_{y}"


def cell_id(x: int, y: int) -> str:
    return f"c{x}_{y}"


def grid_complex(width: int, height: int) -> MetricComplex:
    """Full (width x height)-cell grid: unit lengths, unit areas, cells
    oriented counterclockwise."""
    vertices = [(vertex_id(x, y), (float(x), float(y)))
                for y in range(height + 1) for x in range(width + 1)]
    edges = []
    for y in range(height + 1):
        for x in range(width):
            edges.append((hedge_id(x, y), vertex_id(x, y), vertex_id(x + 1, y), 1))
    for y in range(height):
        for x in range(width + 1):
            edges.append((vedge_id(x, y), vertex_id(x, y), vertex_id(x, y + 1), 1))
    faces = []
    for y in range(height):
        for x in range(width):
            walk = ((hedge_id(x, y), 1), (vedge_id(x + 1, y), 1),
                    (hedge_id(x, y + 1), -1), (vedge_id(x, y), -1))
            faces.append((cell_id(x, y), walk, 1))
    return MetricComplex(vertices, edges, faces)


class PixelSet:
    """A binary picture: filled cells inside a width x height grid."""

    __slots__ = ("width", "height", "cells", "__dict__")

    def __init__(self, width: int, height: int, cells):
        if width <= 0 or height <= 0:
            raise StructuralError("grid dimensions must be positive")
        cells = frozenset((int(x), int(y)) for x, y in cells)
        for x, y in cells:
            if not (0 <= x < width and 0 <= y < height):
                raise StructuralError(f"cell {(x, y)} outside the grid")
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "height", height)
        object.__setattr__(self, "cells", cells)

    def __setattr__(self, name, value):
        raise AttributeError("PixelSet is immutable")

    def __eq__(self, other):
        return (isinstance(other, PixelSet) and other.width == self.width
                and other.height == self.height and other.cells == self.cells)

    def __hash__(self):
        return hash((self.width, self.height, self.cells))

    def __repr__(self):
        return f"PixelSet({self.width}x{self.height}, {len(self.cells)} cells)"

    @cached_property
    def complex(self) -> MetricComplex:
        return grid_complex(self.width, self.height)

    @cached_property
    def area_chain(self) -> Chain2:
        return Chain2(self.complex, {cell_id(x, y): 1 for x, y in self.cells})

    def perimeter(self) -> Fraction:
        return total_mass(boundary_current(self))


def boundary_current(a: PixelSet) -> Chain1:
    """Boundary of the set's 2-chain; shared interior edges cancel, so its
    mass is the perimeter."""
    return boundary2(a.area_chain)


def _components(cells) -> list[frozenset]:
    remaining = set(cells)
    out = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        remaining.discard(seed)
        while frontier:
            x, y = frontier.pop()
            for nxt in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nxt in remaining:
                    remaining.discard(nxt)
                    comp.add(nxt)
                    frontier.append(nxt)
        out.append(frozenset(comp))
    return out


def indecomposable_components(a: PixelSet) -> list[PixelSet]:
    """Edge-adjacency components; their perimeters add up to Per(A)."""
    parts = [PixelSet(a.width, a.height, comp) for comp in _components(a.cells)]
    assert sum((p.perimeter() for p in parts), Fraction(0)) == a.perimeter()
    return parts


def _simple_via_connectivity(a: PixelSet) -> bool:
    if len(_components(a.cells)) != 1:
        return False
    frame = {(x, y)
             for x in range(-1, a.width + 1)
             for y in range(-1, a.height + 1)} - a.cells
    return len(_components(frame)) == 1


def _simple_via_boundary(a: PixelSet) -> bool:
    from .decompose import is_indecomposable
    return bool(is_indecomposable(boundary_current(a)))


def is_simple(a: PixelSet, method: str = "via_boundary") -> bool:
    """Is the set and its complement both connected?

    ``via_boundary`` asks whether the boundary chain is indecomposable;
    ``via_connectivity`` checks 4-connectivity of the set and of its
    complement inside a 1-cell padded frame (all off-frame cells form one
    unbounded region).  The two must agree; disagreement is a bug and
    aborts.
    """
    if method not in ("via_boundary", "via_connectivity"):
        raise StructuralError(f"unknown method {method!r}")
    if not a.cells:
        raise EmptySet("simplicity is undefined for the empty set")
    via_boundary = _simple_via_boundary(a)
    via_connectivity = _simple_via_connectivity(a)
    assert via_boundary == via_connectivity, \
        f"simplicity criteria disagree on {a!r}"
    return via_boundary if method == "via_boundary" else via_connectivity


def jordan_loop(a: PixelSet) -> CurvePiece:
    """Trace the boundary of a simple set as one counterclockwise injective
    loop whose currentification is exactly the boundary chain."""
    if not a.cells:
        raise EmptySet("nothing to trace")
    if not is_simple(a):
        raise NotSimple("boundary is not a single simple loop")
    chain = boundary_current(a)
    cx = a.complex
    succ: dict[str, tuple[str, int, str]] = {}
    for eid, value in chain.items():
        edge = cx.edges[eid]
        u, w = (edge.tail, edge.head) if value > 0 else (edge.head, edge.tail)
        succ[u] = (eid, 1 if value > 0 else -1, w)
    start = min(succ, key=lambda v: cx.vertices[v])
    vertices = [start]
    steps = []
    at = start
    while True:
        eid, sign, nxt = succ[at]
        steps.append((eid, sign))
        vertices.append(nxt)
        at = nxt
        if at == start:
            break
    loop = CurvePiece(cx, vertices, steps)
    assert classify(loop) is Classification.INJECTIVE_LOOP
    assert currentify(loop) == chain
    return loop


def parse_pbm(text: str) -> PixelSet:
    """Plain PBM (P1): 1 = filled; the top image row gets the highest y."""
    tokens: list[str] = []
    for line in text.splitlines():
        hash_at = line.find("#")
        if hash_at >= 0:
            line = line[:hash_at]
        tokens.extend(line.split())
    if not tokens or tokens[0] != "P1":
        raise ParseError("not a plain PBM (P1) image")
    try:
        width, height = int(tokens[1]), int(tokens[2])
    except (IndexError, ValueError) as exc:
        raise ParseError("missing PBM dimensions") from exc
    if width <= 0 or height <= 0:
        raise ParseError("PBM dimensions must be positive")
    digits = []
    for ch in "".join(tokens[3:]):  # P1 allows bits packed without spaces
        if ch not in "01":
            raise ParseError(f"bad PBM bit {ch!r}")
        digits.append(ch)
    if len(digits) != width * height:
        raise ParseError(f"expected {width * height} bits, found {len(digits)}")
    cells = set()
    for row in range(height):
        for x in range(width):
            if digits[row * width + x] == "1":
                cells.add((x, height - 1 - row))
    return PixelSet(width, height, cells)


def serialize_pbm(a: PixelSet) -> str:
    lines = ["P1", f"{a.width} {a.height}"]
    for row in range(a.height):
        y = a.height - 1 - row
        lines.append(" ".join("1" if (x, y) in a.cells else "0"
                              for x in range(a.width)))
    return "\n".join(lines) + "\n"
