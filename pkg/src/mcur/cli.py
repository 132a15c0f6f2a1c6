"""Batch command-line front-end.

Subcommands: decompose, flatnorm, fill, check, curve, planar, report.
Exit codes: 0 success, 1 parse/read error, 2 precondition violation.
Outputs are deterministic given inputs, flags, and seed; MCUR_THREADS caps
the report command's per-file parallelism (results are ordered by name, so
threading never changes bytes).
"""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import formats, planar, svg
from .chains import mass, normal_mass, verify_decomposition
from .complexes import as_rational
from .curves import classify, currentify, length, split_at_self_intersection
from .decompose import (big_component_bound_check, greedy_decompose,
                        variational_oracle)
from .errors import McurError, ParseError, StructuralError
from .flatnorm import flat_norm, isoperimetric_report, minimal_filling


@dataclass
class RunConfig:
    command: str
    complex_path: str | None = None
    chain_path: str | None = None
    walk_path: str | None = None
    image_path: str | None = None
    dec_path: str | None = None
    parts: list[str] = field(default_factory=list)
    directory: str | None = None
    mode: str = "heuristic"
    alpha: Fraction = Fraction(3, 2)
    method: str = "via_boundary"
    check: str | None = None
    split: bool = False
    out: str | None = None
    svg_out: str | None = None
    seed: int = 0

    def __post_init__(self):
        if not (1 < self.alpha < 2):
            raise StructuralError("alpha must lie strictly between 1 and 2")


def _load_pair(config: RunConfig):
    cx = formats.read(config.complex_path, formats.parse_complex)
    chain = formats.read(config.chain_path, formats.parse_chain, cx)
    return cx, chain


def _print_flags(certificate):
    print(f"mass_additive = {str(certificate.mass_additive).lower()}")
    print(f"boundary_mass_additive = "
          f"{str(certificate.boundary_mass_additive).lower()}")


def _cmd_decompose(config: RunConfig):
    _, chain = _load_pair(config)
    if config.mode == "variational":
        dec, energy = variational_oracle(chain, config.alpha)
        print(f"energy = {energy.value!r}")
    else:
        dec = greedy_decompose(chain, search=config.mode)
    print(f"components = {len(dec.components)}")
    _print_flags(dec.certificate)
    if config.out:
        Path(config.out).write_text(formats.serialize_decomposition(dec),
                                    encoding="utf-8")
    if config.svg_out:
        svg.render_svg(dec, config.svg_out)


def _cmd_flatnorm(config: RunConfig):
    _, chain = _load_pair(config)
    result = flat_norm(chain)
    report = mass(chain)
    print(f"F = {result.value}")
    print(f"M = {report.mass}")
    print(f"N = {report.normal_mass}")
    print(f"relaxation_integral = {str(result.relaxation_integral).lower()}")
    if config.out:
        Path(config.out).write_text(formats.serialize_chain(result.s),
                                    encoding="utf-8")


def _cmd_fill(config: RunConfig):
    _, chain = _load_pair(config)
    result = minimal_filling(chain)
    print(f"feasible = {str(result.feasible).lower()}")
    print(f"fill_mass = {result.fill_mass}")
    if config.out and result.feasible:
        Path(config.out).write_text(formats.serialize_chain(result.s),
                                    encoding="utf-8")


def _cmd_check(config: RunConfig):
    cx, chain = _load_pair(config)
    if config.dec_path:
        dec = formats.read(config.dec_path, formats.parse_decomposition, cx)
        parts = list(dec.components)
    else:
        parts = [formats.read(p, formats.parse_chain, cx) for p in config.parts]
    certificate = verify_decomposition(chain, parts)
    _print_flags(certificate)


def _cmd_curve(config: RunConfig):
    cx = formats.read(config.complex_path, formats.parse_complex)
    piece = formats.read(config.walk_path, formats.parse_walk, cx)
    chain = currentify(piece)
    print(f"classification = {classify(piece).value}")
    print(f"length = {length(piece)}")
    print(f"mass = {mass(chain).mass}")
    print(f"boundary_mass = {mass(chain).boundary_mass}")
    if config.split:
        pieces = split_at_self_intersection(piece)
        print(f"pieces = {len(pieces)}")
        for i, sub in enumerate(pieces):
            print(f"piece {i}: {' '.join(sub.vertices)} "
                  f"({classify(sub).value})")
    if config.out:
        Path(config.out).write_text(formats.serialize_chain(chain),
                                    encoding="utf-8")


def _cmd_planar(config: RunConfig):
    pixels = formats.read(config.image_path, lambda text: planar.parse_pbm(text))
    loop = None
    if config.check == "simple":
        simple = planar.is_simple(pixels, method=config.method)
        print(f"simple: {str(simple).lower()}")
        if simple and config.svg_out:
            loop = planar.jordan_loop(pixels)
    elif config.check == "components":
        parts = planar.indecomposable_components(pixels)
        print(f"components = {len(parts)}")
        for i, part in enumerate(parts):
            print(f"component {i}: cells = {len(part.cells)} "
                  f"perimeter = {part.perimeter()}")
    elif config.check == "loop":
        loop = planar.jordan_loop(pixels)
        print("loop: " + " ".join(loop.vertices))
    else:
        print(f"cells = {len(pixels.cells)}")
        print(f"perimeter = {pixels.perimeter()}")
    if config.svg_out:
        svg.render_svg(pixels, config.svg_out, loop=loop)


def _report_one(args):
    name, cx_path, chain_path, mode = args
    cx = formats.read(cx_path, formats.parse_complex)
    chain = formats.read(chain_path, formats.parse_chain, cx)
    iso = isoperimetric_report(chain)
    dec = greedy_decompose(chain, search=mode)
    bound = big_component_bound_check(chain, dec)
    return (name, iso.M, iso.N, iso.F, iso.ratio_FN2, len(dec.components),
            bound.first_component_N, bound.empirical_constant,
            bound.chain_inequalities_ok)


def _pair_inputs(directory: str):
    base = Path(directory)
    complexes = sorted(base.glob("*.cx1"))
    pairs = []
    for chain_path in sorted(base.glob("*.ch1")):
        sibling = chain_path.with_suffix(".cx1")
        if sibling.exists():
            cx_path = sibling
        elif len(complexes) == 1:
            cx_path = complexes[0]
        else:
            raise ParseError(
                f"{chain_path.name}: no matching .cx1 and the directory "
                f"holds {len(complexes)} complexes")
        pairs.append((chain_path.name, str(cx_path), str(chain_path)))
    return pairs


def _cmd_report(config: RunConfig):
    pairs = _pair_inputs(config.directory)
    jobs = [(name, cx_path, chain_path, config.mode)
            for name, cx_path, chain_path in pairs]
    threads = int(os.environ.get("MCUR_THREADS", "1"))
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_report_one, jobs))
    else:
        rows = [_report_one(job) for job in jobs]
    rows.sort(key=lambda row: row[0])
    header = (f"{'chain':24} {'M':>8} {'N':>8} {'F':>8} {'F/N^2':>10} "
              f"{'parts':>5} {'N1':>8} {'F/(N1*N)':>10} ok")
    lines = [header]
    for row in rows:
        name, m, n, f, ratio, parts, n1, const, ok = row
        lines.append(f"{name:24} {str(m):>8} {str(n):>8} {str(f):>8} "
                     f"{str(ratio):>10} {parts:>5} {str(n1):>8} "
                     f"{str(const):>10} {str(ok).lower()}")
    max_ratio = max((row[4] for row in rows), default=Fraction(0))
    max_const = max((row[7] for row in rows), default=Fraction(0))
    lines.append(f"max F/N^2 = {max_ratio}")
    lines.append(f"max F/(N1*N) = {max_const}")
    text = "\n".join(lines)
    print(text)
    if config.out:
        Path(config.out).write_text(text + "\n", encoding="utf-8")
    if config.svg_out:
        _scatter_svg(rows, config.svg_out)


def _scatter_svg(rows, path):
    width, height = 360.0, 240.0
    points = []
    if rows:
        max_n = max((float(row[2]) for row in rows), default=1.0) or 1.0
        max_ratio = max((float(row[4]) for row in rows), default=1.0) or 1.0
        for row in rows:
            x = 30 + float(row[2]) / max_n * (width - 60)
            y = height - 30 - float(row[4]) / max_ratio * (height - 60)
            points.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" '
                          'fill="#1f77b4"/>\n')
    body = (f'<line x1="30" y1="{height - 30:.2f}" x2="{width - 20:.2f}" '
            f'y2="{height - 30:.2f}" stroke="#333"/>\n'
            f'<line x1="30" y1="{height - 30:.2f}" x2="30" y2="20" '
            'stroke="#333"/>\n' + "".join(points))
    text = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">\n'
            + body + "</svg>\n")
    Path(path).write_text(text, encoding="utf-8")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcur",
        description="Integer chains on weighted complexes: mass, boundary, "
                    "flat norm, and decomposition into simple paths and loops.")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed recorded for randomized suites (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="split a chain into indecomposable components")
    p.add_argument("--complex", required=True)
    p.add_argument("--chain", required=True)
    p.add_argument("--mode", choices=("exact", "heuristic", "variational"),
                   default="heuristic")
    p.add_argument("--alpha", default="3/2")
    p.add_argument("--out")
    p.add_argument("--svg")

    p = sub.add_parser("flatnorm", help="flat norm with optimal witness")
    p.add_argument("--complex", required=True)
    p.add_argument("--chain", required=True)
    p.add_argument("--out", help="write the witness 2-chain")

    p = sub.add_parser("fill", help="mass-minimal filling of a boundaryless chain")
    p.add_argument("--complex", required=True)
    p.add_argument("--chain", required=True)
    p.add_argument("--out")

    p = sub.add_parser("check", help="verify an additivity certificate")
    p.add_argument("--complex", required=True)
    p.add_argument("--chain", required=True)
    p.add_argument("--parts", nargs="*", default=[])
    p.add_argument("--dec")

    p = sub.add_parser("curve", help="classify and currentify a walk")
    p.add_argument("--complex", required=True)
    p.add_argument("--walk", required=True)
    p.add_argument("--split", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("planar", help="pixel-set diagnostics")
    p.add_argument("--image", required=True)
    p.add_argument("--check", choices=("simple", "components", "loop"))
    p.add_argument("--method", choices=("via_boundary", "via_connectivity"),
                   default="via_boundary")
    p.add_argument("--svg")

    p = sub.add_parser("report", help="aggregate ratios over a directory")
    p.add_argument("--dir", required=True)
    p.add_argument("--mode", choices=("exact", "heuristic"), default="heuristic")
    p.add_argument("--out")
    p.add_argument("--svg")
    return parser


def config_from_args(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        complex_path=getattr(args, "complex", None),
        chain_path=getattr(args, "chain", None),
        walk_path=getattr(args, "walk", None),
        image_path=getattr(args, "image", None),
        dec_path=getattr(args, "dec", None),
        parts=list(getattr(args, "parts", []) or []),
        directory=getattr(args, "dir", None),
        mode=getattr(args, "mode", "heuristic"),
        alpha=as_rational(getattr(args, "alpha", "3/2")),
        check=getattr(args, "check", None),
        split=getattr(args, "split", False),
        out=getattr(args, "out", None),
        svg_out=getattr(args, "svg", None),
        seed=args.seed,
    )


_COMMANDS = {
    "decompose": _cmd_decompose,
    "flatnorm": _cmd_flatnorm,
    "fill": _cmd_fill,
    "check": _cmd_check,
    "curve": _cmd_curve,
    "planar": _cmd_planar,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        _COMMANDS[config.command](config)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except McurError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
