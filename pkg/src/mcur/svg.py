"""Deterministic SVG renderings of chains, decompositions, and pixel sets."""
from __future__ import annotations

from .chains import Chain1
from .decompose import Decomposition
from .curves import CurvePiece
from .errors import MissingCoordinates, StructuralError
from .planar import PixelSet

PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
           "#8c564b", "#e377c2", "#17becf")
SCALE = 60.0
PAD = 30.0


def _coords(cx):
    coords = {}
    for vid, coord in cx.vertices.items():
        if coord is None:
            raise MissingCoordinates(f"vertex {vid!r} has no coordinates")
        coords[vid] = coord
    return coords


def _frame(coords):
    xs = [c[0] for c in coords.values()] or [0.0]
    ys = [c[1] for c in coords.values()] or [0.0]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)

    def place(coord):
        # y axis flipped: math coordinates grow upward, SVG grows downward
        return (PAD + (coord[0] - minx) * SCALE,
                PAD + (maxy - coord[1]) * SCALE)

    width = PAD * 2 + (maxx - minx) * SCALE
    height = PAD * 2 + (maxy - miny) * SCALE
    return place, width, height


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _header(width, height, body):
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
            f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">\n'
            '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" '
            'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
            '<path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>\n'
            + body + "</svg>\n")


def _axes(width, height):
    return (f'<line x1="{_fmt(PAD / 2)}" y1="{_fmt(height - PAD / 2)}" '
            f'x2="{_fmt(width - PAD / 2)}" y2="{_fmt(height - PAD / 2)}" '
            'stroke="#999" stroke-width="1"/>\n'
            f'<line x1="{_fmt(PAD / 2)}" y1="{_fmt(height - PAD / 2)}" '
            f'x2="{_fmt(PAD / 2)}" y2="{_fmt(PAD / 2)}" '
            'stroke="#999" stroke-width="1"/>\n')


def _edge_line(place, cx, eid, color, width, arrow, flip=False):
    edge = cx.edges[eid]
    a, b = place(cx.vertices[edge.tail]), place(cx.vertices[edge.head])
    if flip:
        a, b = b, a
    marker = ' marker-end="url(#arrow)"' if arrow else ""
    return (f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" '
            f'y2="{_fmt(b[1])}" stroke="{color}" stroke-width="{width}"{marker}/>\n')


def _chain_body(place, chain: Chain1, color):
    cx = chain.complex
    parts = []
    for eid, value in chain.items():
        parts.append(_edge_line(place, cx, eid, color, 2.5, arrow=True,
                                flip=value < 0))
        if abs(value) != 1:
            edge = cx.edges[eid]
            a = place(cx.vertices[edge.tail])
            b = place(cx.vertices[edge.head])
            mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
            parts.append(f'<text x="{_fmt(mid[0] + 4)}" y="{_fmt(mid[1] - 4)}" '
                         f'font-size="11" fill="{color}">{abs(value)}</text>\n')
    return "".join(parts)


def _complex_body(place, cx):
    parts = [_edge_line(place, cx, eid, "#cccccc", 1, arrow=False)
             for eid in sorted(cx.edges)]
    for vid in sorted(cx.vertices):
        x, y = place(cx.vertices[vid])
        parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="2.5" fill="#666"/>\n')
    return "".join(parts)


def render_chain(chain: Chain1) -> str:
    coords = _coords(chain.complex)
    place, width, height = _frame(coords)
    body = _axes(width, height) + _complex_body(place, chain.complex)
    body += _chain_body(place, chain, PALETTE[0])
    return _header(width, height, body)


def render_decomposition(dec: Decomposition) -> str:
    if not dec.components:
        return _header(PAD * 2, PAD * 2, _axes(PAD * 2, PAD * 2))
    cx = dec.components[0].complex
    place, width, height = _frame(_coords(cx))
    body = _axes(width, height) + _complex_body(place, cx)
    for i, part in enumerate(dec.components):
        body += _chain_body(place, part, PALETTE[i % len(PALETTE)])
    return _header(width, height, body)


def render_pixelset(a: PixelSet, loop: CurvePiece | None = None) -> str:
    cx = a.complex
    place, width, height = _frame(_coords(cx))
    parts = [_axes(width, height)]
    for x, y in sorted(a.cells):
        px, py = place((float(x), float(y + 1)))  # top-left corner after flip
        parts.append(f'<rect x="{_fmt(px)}" y="{_fmt(py)}" width="{_fmt(SCALE)}" '
                     f'height="{_fmt(SCALE)}" fill="#9ecae1" stroke="none"/>\n')
    if loop is not None:
        points = " ".join(
            f"{_fmt(place(cx.vertices[v])[0])},{_fmt(place(cx.vertices[v])[1])}"
            for v in loop.vertices)
        parts.append(f'<polyline points="{points}" fill="none" '
                     f'stroke="{PALETTE[0]}" stroke-width="3"/>\n')
    return _header(width, height, "".join(parts))


def render_svg(obj, path, loop: CurvePiece | None = None) -> None:
    """Render a chain, decomposition, or pixel set (with optional traced
    loop) to an SVG file."""
    if isinstance(obj, Chain1):
        text = render_chain(obj)
    elif isinstance(obj, Decomposition):
        text = render_decomposition(obj)
    elif isinstance(obj, PixelSet):
        text = render_pixelset(obj, loop)
    else:
        raise StructuralError(f"cannot render {type(obj).__name__}")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
