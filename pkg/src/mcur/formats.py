"""Line-oriented text formats: .cx1 complexes, .ch1 chains, .wlk walks,
.dec decompositions.

All formats are whitespace-separated UTF-8 with ``#`` comments; rationals
are written ``p/q`` or as plain integers, so fixtures stay human-diffable.
``parse(serialize(x)) == x`` holds for every object round-tripped here.
"""
from __future__ import annotations

from .chains import Chain, Chain0, Chain1, Chain2, verify_decomposition
from .complexes import MetricComplex
from .curves import CurvePiece
from .decompose import Decomposition
from .errors import McurError, ParseError, StructuralError


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        hash_at = raw.find("#")
        if hash_at >= 0:
            raw = raw[:hash_at]
        tokens = raw.split()
        if tokens:
            yield lineno, tokens


def _fail(lineno: int, message: str):
    raise ParseError(f"line {lineno}: {message}")


# -- complexes (.cx1) -------------------------------------------------------

def parse_complex(text: str) -> MetricComplex:
    lines = list(_lines(text))
    if not lines or lines[0][1] != ["cx1"]:
        raise ParseError("missing cx1 header")
    vertices = []
    edges = []
    faces = []
    for lineno, tokens in lines[1:]:
        keyword, rest = tokens[0], tokens[1:]
        if keyword == "vertex":
            if len(rest) == 1:
                vertices.append(rest[0])
            elif len(rest) == 3:
                try:
                    vertices.append((rest[0], (float(rest[1]), float(rest[2]))))
                except ValueError:
                    _fail(lineno, "bad vertex coordinates")
            else:
                _fail(lineno, "vertex takes an id and optional x y")
        elif keyword == "edge":
            if len(rest) != 4:
                _fail(lineno, "edge takes id tail head length")
            edges.append(tuple(rest))
        elif keyword == "face":
            if len(rest) < 3:
                _fail(lineno, "face takes id, signed edges, area")
            faces.append((rest[0], rest[1:-1], rest[-1]))
        else:
            _fail(lineno, f"unknown keyword {keyword!r}")
    try:
        return MetricComplex(vertices, edges, faces)
    except (StructuralError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc)) from exc


def serialize_complex(cx: MetricComplex) -> str:
    out = ["cx1"]
    for vid in sorted(cx.vertices):
        coord = cx.vertices[vid]
        if coord is None:
            out.append(f"vertex {vid}")
        else:
            out.append(f"vertex {vid} {coord[0]!r} {coord[1]!r}")
    for eid in sorted(cx.edges):
        e = cx.edges[eid]
        out.append(f"edge {eid} {e.tail} {e.head} {e.length}")
    for fid in sorted(cx.faces):
        f = cx.faces[fid]
        walk = " ".join(f"{'+' if sign > 0 else '-'}{eid}" for eid, sign in f.edges)
        out.append(f"face {fid} {walk} {f.area}")
    return "\n".join(out) + "\n"


# -- chains (.ch1) ----------------------------------------------------------

_CHAIN_KINDS = {"0": Chain0, "1": Chain1, "2": Chain2}


def _parse_chain_lines(lines, cx: MetricComplex) -> Chain:
    (lineno, header), body = lines[0], lines[1:]
    if len(header) != 2 or header[0] != "chain" or header[1] not in _CHAIN_KINDS:
        _fail(lineno, "chain header must be 'chain 0|1|2'")
    coeffs: dict[str, int] = {}
    for lineno, tokens in body:
        if len(tokens) != 2:
            _fail(lineno, "chain entry takes a cell id and an integer")
        cell, raw = tokens
        try:
            value = int(raw)
        except ValueError:
            _fail(lineno, f"bad integer {raw!r}")
        coeffs[cell] = coeffs.get(cell, 0) + value
    try:
        return _CHAIN_KINDS[header[1]](cx, coeffs)
    except StructuralError as exc:
        raise ParseError(str(exc)) from exc


def parse_chain(text: str, cx: MetricComplex) -> Chain:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty chain file")
    return _parse_chain_lines(lines, cx)


def serialize_chain(chain: Chain) -> str:
    out = [f"chain {chain.kind}"]
    out.extend(f"{cell} {value}" for cell, value in chain.items())
    return "\n".join(out) + "\n"


# -- walks (.wlk) -----------------------------------------------------------

def parse_walk(text: str, cx: MetricComplex) -> CurvePiece:
    lines = list(_lines(text))
    if not lines or lines[0][1] != ["walk"]:
        raise ParseError("missing walk header")
    vertices = []
    for lineno, tokens in lines[1:]:
        if len(tokens) != 1:
            _fail(lineno, "one vertex id per line")
        vertices.append(tokens[0])
    try:
        return CurvePiece(cx, vertices)
    except StructuralError as exc:
        raise ParseError(str(exc)) from exc


def serialize_walk(piece: CurvePiece) -> str:
    return "\n".join(["walk", *piece.vertices]) + "\n"


# -- decompositions (.dec) --------------------------------------------------

def serialize_decomposition(dec: Decomposition) -> str:
    out = [f"dec {dec.method} {len(dec.components)}"]
    for part in dec.components:
        out.append(serialize_chain(part).rstrip("\n"))
        out.append("end")
    cert = dec.certificate
    out.append(f"mass_additive {str(cert.mass_additive).lower()}")
    out.append(f"boundary_mass_additive {str(cert.boundary_mass_additive).lower()}")
    return "\n".join(out) + "\n"


def parse_decomposition(text: str, cx: MetricComplex) -> Decomposition:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty decomposition file")
    lineno, header = lines[0]
    if len(header) != 3 or header[0] != "dec":
        _fail(lineno, "header must be 'dec <method> <count>'")
    method = header[1]
    if method not in ("greedy", "variational_oracle", "curve_split"):
        _fail(lineno, f"unknown method {method!r}")
    try:
        count = int(header[2])
    except ValueError:
        _fail(lineno, "bad component count")
    blocks: list[list] = []
    current: list = []
    flags: dict[str, bool] = {}
    for lineno, tokens in lines[1:]:
        if not current and len(tokens) == 2 and tokens[0] in (
                "mass_additive", "boundary_mass_additive"):
            if tokens[1] not in ("true", "false"):
                _fail(lineno, "certificate flag must be true or false")
            flags[tokens[0]] = tokens[1] == "true"
        elif tokens == ["end"]:
            blocks.append(current)
            current = []
        else:
            current.append((lineno, tokens))
    if current:
        _fail(current[0][0], "unterminated component block")
    if len(blocks) != count:
        raise ParseError(f"expected {count} components, found {len(blocks)}")
    components = []
    for block in blocks:
        part = _parse_chain_lines(block, cx)
        if not isinstance(part, Chain1):
            raise ParseError("decomposition components must be 1-chains")
        components.append(part)
    if set(flags) != {"mass_additive", "boundary_mass_additive"}:
        raise ParseError("missing certificate summary lines")
    parent = Chain1(cx)
    for part in components:
        parent = parent + part
    certificate = verify_decomposition(parent, components)
    for name, stored in flags.items():
        if getattr(certificate, name) != stored:
            raise ParseError(f"stored {name} flag disagrees with the parts")
    return Decomposition(tuple(components), certificate, method)


def read(path, parser, *args):
    """Read and parse a file, folding I/O errors into ParseError context."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    try:
        return parser(text, *args)
    except McurError as exc:
        raise type(exc)(f"{path}: {exc}") from exc
