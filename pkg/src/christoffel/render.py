"""Deterministic SVG drawings of Christoffel graphs, their projections and words.

Coordinates are computed exactly and printed with three decimals; edges
are emitted sorted, so repeated renders are byte-identical. Legs are red
and the body blue unless overridden.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .graph import Box, LegSet, box_points, window_edges
from .residue import NormalData, ValidationError, residue
from .tiling import ChristoffelParallelogram, christoffel_parallelogram, quotient_graph
from .words import christoffel_word

TARGETS = ("h", "i", "g", "parallelogram", "word")

# h_1, h_2, h_3 drawn at 90, 210 and 330 degrees
_ANGLES = (90.0, 210.0, 330.0)
_H2D = tuple((math.cos(math.radians(t)), math.sin(math.radians(t))) for t in _ANGLES)


@dataclass(frozen=True)
class RenderSpec:
    target: str
    window: Box | None = None
    leg_color: str = "red"
    body_color: str = "blue"
    arrows: bool | None = None
    scale: float = 40.0

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValidationError(f"unknown render target {self.target!r}; choose from {TARGETS}")


def _f(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


class _Canvas:
    def __init__(self, scale: float):
        self.scale = scale
        self.items: list[tuple[str, tuple]] = []
        self.xs: list[float] = []
        self.ys: list[float] = []

    def _pt(self, x: float, y: float) -> tuple[float, float]:
        # SVG y axis points down
        X, Y = x * self.scale, -y * self.scale
        self.xs.append(X)
        self.ys.append(Y)
        return X, Y

    def line(self, p, q, color, arrow=False, dash=False, width=2.0):
        self.items.append(("line", (self._pt(*p), self._pt(*q), color, arrow, dash, width)))

    def dot(self, p, color="black", r=3.0):
        self.items.append(("dot", (self._pt(*p), color, r)))

    def ring(self, p, color="red", r=7.0):
        self.items.append(("ring", (self._pt(*p), color, r)))

    def text(self, p, label, size=10):
        self.items.append(("text", (self._pt(*p), label, size)))

    def svg(self) -> str:
        pad = 20.0
        if not self.xs:
            self._pt(0, 0)
        x0, y0 = min(self.xs) - pad, min(self.ys) - pad
        w, h = max(self.xs) - x0 + pad, max(self.ys) - y0 + pad
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(w)}" height="{_f(h)}" '
            f'viewBox="{_f(x0)} {_f(y0)} {_f(w)} {_f(h)}">',
            "<defs>",
            '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" '
            'markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="context-stroke"/></marker>',
            "</defs>",
        ]
        for kind, args in self.items:
            if kind == "line":
                (x1, y1), (x2, y2), color, arrow, dash, width = args
                extra = ' marker-end="url(#arrow)"' if arrow else ""
                extra += ' stroke-dasharray="4 3"' if dash else ""
                out.append(
                    f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
                    f'stroke="{color}" stroke-width="{_f(width)}"{extra}/>'
                )
            elif kind == "dot":
                (x, y), color, r = args
                out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(r)}" fill="{color}"/>')
            elif kind == "ring":
                (x, y), color, r = args
                out.append(
                    f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(r)}" fill="none" stroke="{color}" stroke-width="1.500"/>'
                )
            else:
                (x, y), label, size = args
                out.append(
                    f'<text x="{_f(x + 4)}" y="{_f(y - 4)}" font-family="sans-serif" font-size="{size}">{label}</text>'
                )
        out.append("</svg>")
        return "\n".join(out) + "\n"


def plane_point(c: Sequence[int]) -> tuple[float, float]:
    """Drawing position of ``c1 h1 + c2 h2`` (plane coordinates)."""
    x = c[0] * _H2D[0][0] + c[1] * _H2D[1][0]
    y = c[0] * _H2D[0][1] + c[1] * _H2D[1][1]
    return x, y


def space_point(u: Sequence[int]) -> tuple[float, float]:
    """Drawing position of the projection of ``u`` in Z^3."""
    return plane_point((u[0] - u[2], u[1] - u[2]))


def _default_box(nd: NormalData) -> Box:
    if nd.d == 2:
        return ((-2, nd.omega // 2 + 3), (-2, 4))
    return ((-3, 4), (-3, 4), (0, 1))


def render_h(nd: NormalData, spec: RenderSpec) -> str:
    """The graph on the square grid (d = 2)."""
    if nd.d != 2:
        raise ValidationError("the grid rendering needs d = 2")
    box = spec.window or _default_box(nd)
    X = window_edges(nd, box)
    Q = LegSet(X.kernel)
    arrows = True if spec.arrows is None else spec.arrows
    c = _Canvas(spec.scale)
    for u in box_points(box):
        c.dot(u, "black", 2.0)
    for e in X.sorted():
        c.line(e.tail, e.head, spec.leg_color if e in Q else spec.body_color, arrow=arrows)
    c.ring((0, 0), spec.leg_color)
    return c.svg()


def render_i(nd: NormalData, spec: RenderSpec) -> str:
    """The projected graph (d = 3): rhombi with residues at the vertices."""
    if nd.d != 3:
        raise ValidationError("the rhombus rendering needs d = 3")
    box = spec.window or _default_box(nd)
    X = window_edges(nd, box)
    Q = LegSet(X.kernel)
    arrows = False if spec.arrows is None else spec.arrows
    c = _Canvas(spec.scale)
    seen = {}
    for e in X.sorted():
        c.line(space_point(e.tail), space_point(e.head), spec.leg_color if e in Q else spec.body_color, arrow=arrows)
        for v in (e.tail, e.head):
            seen.setdefault(space_point(v), residue(nd, v))
    for p in sorted(seen):
        c.text(p, str(seen[p]), 8)
    return c.svg()


def render_g(nd: NormalData, spec: RenderSpec) -> str:
    """The quotient graph on Z/omega with vertices on a circle."""
    n = nd.omega
    radius = max(2.0, n / 4)

    def pos(k: int) -> tuple[float, float]:
        ang = math.pi / 2 - 2 * math.pi * k / n
        return radius * math.cos(ang), radius * math.sin(ang)

    arrows = True if spec.arrows is None else spec.arrows
    c = _Canvas(spec.scale)
    for k, m, _ in sorted(quotient_graph(nd)):
        c.line(pos(k), pos(m), spec.leg_color if k == 0 else spec.body_color, arrow=arrows, width=1.5)
    for k in range(n):
        c.dot(pos(k), "black", 2.5)
        c.text(pos(k), str(k))
    return c.svg()


def render_parallelogram(P: ChristoffelParallelogram, spec: RenderSpec) -> str:
    arrows = False if spec.arrows is None else spec.arrows
    c = _Canvas(spec.scale)
    o, p, q, pq = P.corners()
    for u, v in ((o, p), (o, q), (p, pq), (q, pq)):
        c.line(plane_point(u), plane_point(v), "gray", dash=True, width=1.0)
    for e in sorted(P.edges):
        color = spec.leg_color if P.is_leg(e) else spec.body_color
        c.line(plane_point(e.tail), plane_point(e.head), color, arrow=arrows)
    for pt in sorted(P.labels):
        c.dot(plane_point(pt), "black", 2.0)
        c.text(plane_point(pt), str(P.labels[pt]), 8)
    return c.svg()


def render_word(word: str, spec: RenderSpec, slope: tuple[int, int] | None = None) -> str:
    """Lattice path of a word (``a`` = east, ``b`` = north), with the segment it discretizes."""
    c = _Canvas(spec.scale)
    x = y = 0
    pts = [(0, 0)]
    for letter in word:
        if letter == "a":
            x += 1
        elif letter == "b":
            y += 1
        else:
            raise ValidationError(f"unexpected letter {letter!r}")
        pts.append((x, y))
    if slope is None:
        slope = (x, y)
    c.line((0, 0), slope, "gray", dash=True, width=1.0)
    for p, q, letter in zip(pts, pts[1:], word):
        c.line(p, q, spec.body_color if letter == "a" else spec.leg_color, arrow=bool(spec.arrows))
    for p in pts:
        c.dot(p, "black", 2.0)
    return c.svg()


def render(nd: NormalData | None, spec: RenderSpec, *, word: str | None = None,
           parallelogram: ChristoffelParallelogram | None = None) -> str:
    if spec.target == "word":
        if word is None:
            raise ValidationError("word rendering needs a word")
        return render_word(word, spec)
    if spec.target == "parallelogram":
        if parallelogram is None:
            parallelogram = christoffel_parallelogram(nd)
        return render_parallelogram(parallelogram, spec)
    if nd is None:
        raise ValidationError(f"target {spec.target!r} needs a normal vector")
    return {"h": render_h, "i": render_i, "g": render_g}[spec.target](nd, spec)


def render_christoffel_word(p: int, q: int, spec: RenderSpec | None = None) -> str:
    return render_word(christoffel_word(p, q), spec or RenderSpec("word"), slope=(p, q))
