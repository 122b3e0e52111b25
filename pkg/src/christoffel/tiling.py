"""Projection onto the diagonal hyperplane, the parallelotope tiling, the
quotient graph on Z/omega, and Christoffel parallelograms (d = 3).

All geometry uses :class:`fractions.Fraction`; nothing here rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, NamedTuple, Sequence

from .graph import EdgeSet, LegSet, flip, window_edges
from .lattice import hermite_normal_form, kernel_basis_projected
from .residue import (
    Edge,
    NormalData,
    SigmaPath,
    ValidationError,
    Vector,
    edge_in_graph,
    missing_edge,
    residue,
    solve_unit_translation,
    unit,
    vadd,
)

RationalVector = tuple[Fraction, ...]


def as_rational(x: Iterable) -> RationalVector:
    return tuple(Fraction(c) for c in x)


def project_pi(x: Iterable) -> RationalVector:
    """Orthogonal projection onto the hyperplane ``sum(x) = 0``."""
    x = as_rational(x)
    mean = sum(x, Fraction(0)) / len(x)
    return tuple(c - mean for c in x)


def h_vector(d: int, i: int) -> RationalVector:
    """``h_i``, the projection of the basis vector ``e_i``."""
    return project_pi(unit(d, i))


def quotient_graph(nd: NormalData) -> list[tuple[int, int, int]]:
    """Edges ``(k, k + a_i, i)`` of Z/omega with ``k < k + a_i`` (no wrap-around)."""
    return [
        (k, k + a, i)
        for i, a in enumerate(nd.a, start=1)
        for k in range(nd.omega - a)
    ]


class Tile(NamedTuple):
    """Parallelotope at ``pi(base)`` spanned by ``h_j`` for every ``j != omitted``."""

    base: Vector
    omitted: int

    def spanning(self) -> tuple[int, ...]:
        return tuple(j for j in range(1, len(self.base) + 1) if j != self.omitted)

    def corners(self) -> list[Vector]:
        out = [self.base]
        for j in self.spanning():
            out += [vadd(c, unit(len(self.base), j)) for c in out]
        return out


def is_tile(nd: NormalData, tile: Tile) -> bool:
    """Tiles sit on top of nonedges: ``(base - e_omitted, base)`` must be missing."""
    d = len(tile.base)
    tail = tuple(c - e for c, e in zip(tile.base, unit(d, tile.omitted)))
    return not edge_in_graph(nd, Edge(tail, tile.omitted))


def tile_coordinates(tile: Tile, x: Sequence) -> dict[int, Fraction]:
    """Coefficients ``c_j`` with ``pi(x) = pi(base) + sum c_j h_j``.

    Since the only relation among the ``h`` is ``sum h = 0``, the
    coefficients are ``y_j - y_omitted`` for ``y = x - base``.
    """
    y = [Fraction(c) - b for c, b in zip(x, tile.base)]
    ref = y[tile.omitted - 1]
    return {j: y[j - 1] - ref for j in tile.spanning()}


def tile_contains(tile: Tile, x: Sequence, *, strict: bool = False) -> bool:
    coords = tile_coordinates(tile, x).values()
    if strict:
        return all(0 < c < 1 for c in coords)
    return all(0 <= c <= 1 for c in coords)


def locate_tile(nd: NormalData, x: Sequence) -> Tile:
    """The tile of the projected graph containing ``pi(x)``.

    ``x`` must be generic: its fractional parts pairwise distinct. Points on
    a tile boundary raise instead of being assigned arbitrarily.
    """
    if not nd.is_standard:
        raise ValidationError("point location is defined for omega == s")
    x = as_rational(x)
    if len(x) != nd.d:
        raise ValidationError(f"expected a point of length {nd.d}")
    u = tuple(floor(c) for c in x)
    frac = [c - f for c, f in zip(x, u)]
    if len(set(frac)) != len(frac):
        raise ValidationError(f"point {x} lies on a tile boundary (tied fractional parts)")
    perm = tuple(sorted(range(1, nd.d + 1), key=lambda i: -frac[i - 1]))
    path = SigmaPath(u, perm)
    k = missing_edge(nd, path)
    missing = path.edges()[k - 1]
    return Tile(missing.head, missing.direction)


# -- d = 3 ------------------------------------------------------------------
#
# Points of the projected lattice are written c1 h1 + c2 h2 with integer
# (c1, c2); h3 = -h1 - h2. Such a point is the image of (c1, c2, 0).

PLANE_STEPS = {1: (1, 0), 2: (0, 1), 3: (-1, -1)}


def _plane_residue(nd: NormalData, c: tuple[int, int]) -> int:
    return residue(nd, (c[0], c[1], 0))


def _plane_edge_present(nd: NormalData, c: tuple[int, int], i: int) -> bool:
    return edge_in_graph(nd, Edge((c[0], c[1], 0), i))


class PlaneEdge(NamedTuple):
    tail: tuple[int, int]
    direction: int

    @property
    def head(self) -> tuple[int, int]:
        dx, dy = PLANE_STEPS[self.direction]
        return self.tail[0] + dx, self.tail[1] + dy


@dataclass(frozen=True)
class ChristoffelParallelogram:
    """Fundamental domain of the projected kernel with the graph drawn inside.

    ``sides`` are two lattice vectors in (h1, h2) coordinates. ``labels``
    maps each lattice point of the half-open domain (sides through the
    origin included, the opposite two excluded) to its residue. ``edges``
    are the projected graph edges with both ends in the closed
    parallelogram; ``corner_label`` is the residue of the four corners.
    """

    a: Vector
    sides: tuple[tuple[int, int], tuple[int, int]]
    offset: tuple[int, int]
    labels: dict[tuple[int, int], int]
    edges: frozenset[PlaneEdge]

    @property
    def s(self) -> int:
        return sum(self.a)

    def corners(self) -> list[tuple[int, int]]:
        (p1, p2), (q1, q2) = self.sides
        o = self.offset
        return [o, (o[0] + p1, o[1] + p2), (o[0] + q1, o[1] + q2), (o[0] + p1 + q1, o[1] + p2 + q2)]

    def is_leg(self, e: PlaneEdge) -> bool:
        corners = set(self.corners())
        return e.tail in corners or e.head in corners

    def legs(self) -> frozenset[PlaneEdge]:
        return frozenset(e for e in self.edges if self.is_leg(e))

    def body(self) -> frozenset[PlaneEdge]:
        return frozenset(e for e in self.edges if not self.is_leg(e))

    def _centre_twice(self) -> tuple[int, int]:
        c = self.corners()
        return c[0][0] + c[3][0], c[0][1] + c[3][1]

    def reflect(self, edges: Iterable[PlaneEdge] | None = None) -> frozenset[PlaneEdge]:
        """Point reflection through the centre; the edge ``(P, Q)`` becomes ``(C - Q, C - P)``."""
        cx, cy = self._centre_twice()
        edges = self.edges if edges is None else edges
        out = set()
        for e in edges:
            hx, hy = e.head
            out.add(PlaneEdge((cx - hx, cy - hy), e.direction))
        return frozenset(out)

    def flipped(self) -> frozenset[PlaneEdge]:
        """Exchange the legs: toggle every unit edge of the closed domain touching a corner."""
        candidates = set()
        for cx, cy in self.corners():
            for i, (dx, dy) in PLANE_STEPS.items():
                candidates.add(PlaneEdge((cx, cy), i))
                candidates.add(PlaneEdge((cx - dx, cy - dy), i))
        inside = {e for e in candidates if self.contains(e.tail) and self.contains(e.head)}
        return frozenset(self.edges ^ inside)

    def _coords(self, c: tuple[int, int]) -> tuple[Fraction, Fraction]:
        (p1, p2), (q1, q2) = self.sides
        det = p1 * q2 - p2 * q1
        x, y = c[0] - self.offset[0], c[1] - self.offset[1]
        return Fraction(x * q2 - y * q1, det), Fraction(p1 * y - p2 * x, det)

    def contains(self, c: tuple[int, int], *, half_open: bool = False) -> bool:
        alpha, beta = self._coords(c)
        if half_open:
            return 0 <= alpha < 1 and 0 <= beta < 1
        return 0 <= alpha <= 1 and 0 <= beta <= 1

    def half_open_edges(self) -> frozenset[PlaneEdge]:
        return frozenset(
            e for e in self.edges if self.contains(e.tail, half_open=True) and self.contains(e.head, half_open=True)
        )


def projected_kernel_sides(a: Sequence[int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Hermite basis of the projected kernel, used as the parallelogram sides."""
    hnf = hermite_normal_form(kernel_basis_projected(a))
    if len(hnf) != 2:
        raise AssertionError("projected kernel must have rank 2")
    return hnf[0], hnf[1]


def _edges_in_closed(
    sides, offset, present
) -> frozenset[PlaneEdge]:
    (p1, p2), (q1, q2) = sides
    xs = [offset[0], offset[0] + p1, offset[0] + q1, offset[0] + p1 + q1]
    ys = [offset[1], offset[1] + p2, offset[1] + q2, offset[1] + p2 + q2]
    probe = ChristoffelParallelogram((), sides, offset, {}, frozenset())
    out = set()
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if not probe.contains((x, y)):
                continue
            for i in PLANE_STEPS:
                e = PlaneEdge((x, y), i)
                if probe.contains(e.head) and present(e):
                    out.add(e)
    return frozenset(out)


def christoffel_parallelogram(nd: NormalData, offset: tuple[int, int] = (0, 0)) -> ChristoffelParallelogram:
    """The Christoffel parallelogram with a corner at ``offset`` (the origin by default)."""
    if nd.d != 3:
        raise ValidationError(f"Christoffel parallelograms need d = 3, got d = {nd.d}")
    if not nd.is_standard:
        raise ValidationError("Christoffel parallelograms need omega == s")
    sides = projected_kernel_sides(nd.a)
    edges = _edges_in_closed(sides, offset, lambda e: _plane_edge_present(nd, e.tail, e.direction))
    probe = ChristoffelParallelogram(nd.a, sides, offset, {}, frozenset())
    (p1, p2), (q1, q2) = sides
    xs = [offset[0], offset[0] + p1, offset[0] + q1, offset[0] + p1 + q1]
    ys = [offset[1], offset[1] + p2, offset[1] + q2, offset[1] + p2 + q2]
    labels = {
        (x, y): _plane_residue(nd, (x, y))
        for x in range(min(xs), max(xs) + 1)
        for y in range(min(ys), max(ys) + 1)
        if probe.contains((x, y), half_open=True)
    }
    return ChristoffelParallelogram(nd.a, sides, offset, labels, edges)


def flipped_graph_region(nd: NormalData, sides, offset: tuple[int, int]) -> frozenset[PlaneEdge]:
    """Edges of the flipped projected graph inside the closed parallelogram at ``offset``."""
    H = window_edges(nd)
    F = flip(H, LegSet(H.kernel))
    return _edges_in_closed(sides, offset, lambda e: Edge((e.tail[0], e.tail[1], 0), e.direction) in F)


def unit_translation_plane(nd: NormalData) -> tuple[int, int]:
    """``pi(t)`` in (h1, h2) coordinates for the canonical residue-1 vector ``t``."""
    t = solve_unit_translation(nd)
    return t[0] - t[2], t[1] - t[2]


def shift_edges(edges: Iterable[PlaneEdge], v: tuple[int, int]) -> frozenset[PlaneEdge]:
    return frozenset(PlaneEdge((e.tail[0] + v[0], e.tail[1] + v[1]), e.direction) for e in edges)


def project_edge_set(X: EdgeSet) -> frozenset[PlaneEdge]:
    """Image of a finite d = 3 edge set under the projection, in (h1, h2) coordinates."""
    if X.dim != 3:
        raise ValidationError("plane coordinates are only defined for d = 3")
    return frozenset(PlaneEdge((u[0] - u[2], u[1] - u[2]), i) for u, i in X.edges)
