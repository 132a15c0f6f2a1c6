"""Weighted oriented complexes: the arena every chain lives on.

A :class:`MetricComplex` is a finite oriented multigraph with strictly
positive rational edge lengths, optionally carrying oriented faces (closed
signed edge walks) with strictly positive rational areas.  Vertices may carry
2D coordinates, used only for rendering.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import StructuralError

Coord = tuple[float, float]


def as_rational(value) -> Fraction:
    """Coerce an int, `p/q` string, or Fraction into an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise StructuralError(f"not an exact rational: {value!r}")


def parse_signed_edge(token) -> tuple[str, int]:
    """Accept 'e', '+e', '-e', or an ('e', sign) pair."""
    if isinstance(token, tuple):
        eid, sign = token
        if sign not in (1, -1):
            raise StructuralError(f"edge sign must be +1 or -1, got {sign!r}")
        return str(eid), sign
    text = str(token)
    if text.startswith("-"):
        return text[1:], -1
    if text.startswith("+"):
        return text[1:], 1
    return text, 1


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str
    length: Fraction


@dataclass(frozen=True)
class Face:
    id: str
    edges: tuple[tuple[str, int], ...]  # signed edge walk with zero boundary
    area: Fraction


class MetricComplex:
    """Immutable weighted complex of vertices, edges, and faces.

    Vertices are given as bare ids or ``(id, (x, y))`` pairs; edges as
    ``(id, tail, head, length)``; faces as ``(id, signed_edges, area)`` where
    ``signed_edges`` is a sequence of ``±edge_id`` strings or
    ``(edge_id, sign)`` pairs whose signed boundary sum is the zero 0-chain.
    """

    __slots__ = ("vertices", "edges", "faces", "_out", "_in")

    def __init__(self, vertices=(), edges=(), faces=()):
        verts: dict[str, Coord | None] = {}
        for item in vertices:
            if isinstance(item, (tuple, list)):
                if len(item) == 2:
                    vid, coord = item
                    coord = (float(coord[0]), float(coord[1]))
                elif len(item) == 3:
                    vid, x, y = item
                    coord = (float(x), float(y))
                else:
                    raise StructuralError(f"bad vertex spec: {item!r}")
            else:
                vid, coord = item, None
            vid = str(vid)
            if vid in verts:
                raise StructuralError(f"duplicate vertex id {vid!r}")
            verts[vid] = coord

        edge_map: dict[str, Edge] = {}
        for eid, tail, head, length in edges:
            eid, tail, head = str(eid), str(tail), str(head)
            if eid in edge_map:
                raise StructuralError(f"duplicate edge id {eid!r}")
            if tail not in verts or head not in verts:
                raise StructuralError(f"edge {eid!r} references unknown vertex")
            weight = as_rational(length)
            if weight <= 0:
                raise StructuralError(f"edge {eid!r} has nonpositive length")
            edge_map[eid] = Edge(eid, tail, head, weight)

        face_map: dict[str, Face] = {}
        for fid, signed_edges, area in faces:
            fid = str(fid)
            if fid in face_map:
                raise StructuralError(f"duplicate face id {fid!r}")
            walk = tuple(parse_signed_edge(t) for t in signed_edges)
            if not walk:
                raise StructuralError(f"face {fid!r} has no edges")
            balance: dict[str, int] = {}
            for eid, sign in walk:
                edge = edge_map.get(eid)
                if edge is None:
                    raise StructuralError(f"face {fid!r} references unknown edge {eid!r}")
                balance[edge.head] = balance.get(edge.head, 0) + sign
                balance[edge.tail] = balance.get(edge.tail, 0) - sign
            if any(balance.values()):
                raise StructuralError(f"face {fid!r} boundary walk is not closed")
            weight = as_rational(area)
            if weight <= 0:
                raise StructuralError(f"face {fid!r} has nonpositive area")
            face_map[fid] = Face(fid, walk, weight)

        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edge_map)
        object.__setattr__(self, "faces", face_map)
        out: dict[str, list[str]] = {v: [] for v in verts}
        inc: dict[str, list[str]] = {v: [] for v in verts}
        for edge in edge_map.values():
            out[edge.tail].append(edge.id)
            inc[edge.head].append(edge.id)
        for lst in out.values():
            lst.sort()
        for lst in inc.values():
            lst.sort()
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inc)

    def __setattr__(self, name, value):
        raise AttributeError("MetricComplex is immutable")

    def out_edges(self, vertex: str) -> list[str]:
        return self._out[vertex]

    def in_edges(self, vertex: str) -> list[str]:
        return self._in[vertex]

    def edges_between(self, u: str, v: str) -> list[tuple[str, int]]:
        """All (edge id, sign) steps leading from u to v, sorted by edge id.

        Sign +1 means the edge is traversed tail->head.  A self-loop at u
        (u == v) is reported once, with sign +1.
        """
        steps = [(eid, 1) for eid in self._out.get(u, ()) if self.edges[eid].head == v]
        if u != v:
            steps += [(eid, -1) for eid in self._in.get(u, ()) if self.edges[eid].tail == v]
        return sorted(steps)

    def edge_length(self, eid: str) -> Fraction:
        edge = self.edges.get(eid)
        if edge is None:
            raise StructuralError(f"unknown edge id {eid!r}")
        return edge.length

    def face_area(self, fid: str) -> Fraction:
        face = self.faces.get(fid)
        if face is None:
            raise StructuralError(f"unknown face id {fid!r}")
        return face.area

    def __repr__(self):
        return (f"MetricComplex({len(self.vertices)} vertices, "
                f"{len(self.edges)} edges, {len(self.faces)} faces)")
