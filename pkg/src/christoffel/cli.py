"""Command-line front end.

Exit status is 2 for invalid input (one-line diagnostic on stderr) and 1
when an internal consistency check fails. Arguments starting with a minus
sign must be attached with ``=``, e.g. ``--point=-1/2,0,1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .graph import (
    LegSet,
    flip,
    pirillo_search,
    short_representative,
    verify_flip_translate,
    window_edges,
)
from .io import graph_to_dot, graph_to_json
from .lattice import kernel_basis, kernel_basis_d3, lattice_from_rows, lattices_equal
from .render import RenderSpec, render, render_christoffel_word
from .residue import ValidationError, make_normal
from .surface import in_surface, project_f
from .tiling import christoffel_parallelogram, locate_tile
from .words import christoffel_word, line_word


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise ValidationError(f"expected comma-separated integers, got {text!r}") from None


def _rationals(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(c.strip()) for c in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"expected comma-separated rationals, got {text!r}") from None


def _box(text: str | None):
    if text is None:
        return None
    try:
        return tuple(tuple(int(v) for v in part.split(":")) for part in text.split(","))
    except ValueError:
        raise ValidationError(f"window must look like lo:hi,lo:hi,... got {text!r}") from None


def _vec(v) -> str:
    return "(" + ",".join(str(c) for c in v) + ")"


def _normal(args):
    return make_normal(_ints(args.a), args.w)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_word(args) -> int:
    print(christoffel_word(args.p, args.q))
    return 0


def cmd_lineword(args) -> int:
    print(line_word(_normal(args), _ints(args.x), args.i, args.n))
    return 0


def cmd_graph(args) -> int:
    nd = _normal(args)
    X = window_edges(nd, _box(args.window))
    if args.flip:
        X = flip(X, LegSet(X.kernel))
    text = graph_to_json(nd, X) if args.format == "json" else graph_to_dot(nd, X)
    _emit(text, args.output)
    return 0


def cmd_flipcheck(args) -> int:
    nd = _normal(args)
    t, ok = verify_flip_translate(nd, _ints(args.t) if args.t else None)
    print(f"t={_vec(t)} {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_pirillo(args) -> int:
    rows = [_ints(r) for r in args.K.split(";") if r.strip()]
    if not rows:
        raise ValidationError("no lattice generators given")
    ones = (1,) * len(rows[0])
    try:
        has_ones = ones in lattice_from_rows(rows)
    except ValidationError:
        has_ones = False
    if not has_ones:
        print(f"warning: adding {_vec(ones)} to the lattice generators", file=sys.stderr)
        rows.append(ones)
    K = lattice_from_rows(rows)
    for t, cls in pirillo_search(K):
        print(f"t={_vec(short_representative(K, t))} {cls.describe()}")
    return 0


def cmd_kernel(args) -> int:
    nd = _normal(args)
    K = kernel_basis(nd)
    print("basis: " + " ".join(_vec(r) for r in K.basis))
    print(f"index: {K.index}")
    if nd.d == 3 and nd.is_standard:
        closed = kernel_basis_d3(nd.a)
        same = lattices_equal(K, lattice_from_rows(closed))
        print("closed form: " + " ".join(_vec(r) for r in closed) + (" (equal)" if same else " (DIFFERENT)"))
        if not same:
            return 1
    return 0


def cmd_tile(args) -> int:
    tile = locate_tile(_normal(args), _rationals(args.point))
    print(f"base={_vec(tile.base)} omitted={tile.omitted} spanning={_vec(tile.spanning())}")
    return 0


def cmd_parallelogram(args) -> int:
    P = christoffel_parallelogram(_normal(args))
    if args.format == "svg":
        _emit(render(None, RenderSpec("parallelogram"), parallelogram=P), args.output)
    elif args.format == "json":
        doc = {
            "a": list(P.a),
            "sides": [list(v) for v in P.sides],
            "points": [{"at": list(p), "label": P.labels[p]} for p in sorted(P.labels)],
            "edges": [
                {"tail": list(e.tail), "dir": e.direction, "leg": P.is_leg(e)} for e in sorted(P.edges)
            ],
        }
        _emit(json.dumps(doc, indent=1) + "\n", args.output)
    else:
        lines = [f"sides: {_vec(P.sides[0])} {_vec(P.sides[1])} (in h1,h2 coordinates)"]
        lines += [f"{_vec(p)} {P.labels[p]}" for p in sorted(P.labels)]
        lines.append(f"edges: {len(P.edges)} ({len(P.legs())} legs)")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_render(args) -> int:
    spec = RenderSpec(args.target, window=_box(args.window), arrows=args.arrows)
    if args.target == "word":
        if args.p is None or args.q is None:
            raise ValidationError("render --target word needs -p and -q")
        svg = render_christoffel_word(args.p, args.q, spec)
    else:
        if args.a is None:
            raise ValidationError(f"render --target {args.target} needs -a")
        svg = render(_normal(args), spec)
    _emit(svg, args.output)
    return 0


def cmd_surface(args) -> int:
    a = _ints(args.a)
    X = _rationals(args.point)
    Y, t = project_f(a, X)
    print(f"in_surface={in_surface(a, X)}")
    print("f=(" + ",".join(str(c) for c in Y) + ")")
    print(f"t={t}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="christoffel", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def normal_args(p, required=True):
        p.add_argument("-a", required=required, help="normal vector, e.g. 2,3,5")
        p.add_argument("-w", type=int, default=None, help="width omega (default: sum of a)")

    p = sub.add_parser("word", help="print the Christoffel word of (p, q)")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("lineword", help="letters read along a lattice line")
    normal_args(p)
    p.add_argument("-x", required=True, help="start point")
    p.add_argument("-i", type=int, required=True, help="direction (1-based)")
    p.add_argument("-n", type=int, required=True, help="length")
    p.set_defaults(func=cmd_lineword)

    p = sub.add_parser("graph", help="export edges as JSON or DOT")
    normal_args(p)
    p.add_argument("--window", help="tail box lo:hi,... (default: one fundamental domain)")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--flip", action="store_true", help="export the flipped graph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("flipcheck", help="check that the flip is the translate by t")
    normal_args(p)
    p.add_argument("-t", help="witness translation (default: canonical residue-1 vector)")
    p.set_defaults(func=cmd_flipcheck)

    p = sub.add_parser("pirillo", help="all flip-translate patterns over a lattice")
    p.add_argument("-K", required=True, help='generators, e.g. "0,4,1;-2,0,3;1,1,1"')
    p.set_defaults(func=cmd_pirillo)

    p = sub.add_parser("kernel", help="kernel lattice of the residue map")
    normal_args(p)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("tile", help="locate the tile containing a point")
    normal_args(p)
    p.add_argument("--point", required=True, help="rational coordinates, e.g. 3/5,1/5,0")
    p.set_defaults(func=cmd_tile)

    p = sub.add_parser("parallelogram", help="labelled Christoffel parallelogram (d = 3)")
    normal_args(p)
    p.add_argument("--format", choices=("text", "json", "svg"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_parallelogram)

    p = sub.add_parser("render", help="write an SVG drawing")
    normal_args(p, required=False)
    p.add_argument("--target", choices=("h", "i", "g", "parallelogram", "word"), required=True)
    p.add_argument("--window")
    p.add_argument("-p", type=int)
    p.add_argument("-q", type=int)
    p.add_argument("--arrows", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("surface", help="stepped-surface membership and diagonal projection")
    p.add_argument("-a", required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_surface)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
