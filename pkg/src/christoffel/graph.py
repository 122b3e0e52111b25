"""Edge sets of Christoffel graphs and the flip / reversal / translation calculus.

A periodic :class:`EdgeSet` stands for the infinite set ``edges + K``; its
tails are stored reduced into the Hermite box of ``K`` so that two periodic
sets over the same lattice are equal iff their stored edges are. Checking an
identity on one fundamental domain therefore settles it on all of Z^d.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Sequence

from .lattice import KernelLattice, iter_cosets, kernel_basis, lattices_equal
from .residue import (
    Edge,
    NormalData,
    ValidationError,
    Vector,
    as_vector,
    edge_in_graph,
    make_normal,
    residue,
    solve_unit_translation,
    unit,
    vadd,
    vneg,
    vscale,
    vsub,
)

Box = tuple[tuple[int, int], ...]


class DegenerateTranslation(ValidationError):
    """The translation vector lies in the lattice, so it has no useful order."""


class InconsistentPattern(ValueError):
    """No flip-translate pattern exists for the given lattice and translation."""


def _ones(d: int) -> Vector:
    return (1,) * d


def _check_box(box: Sequence[Sequence[int]]) -> Box:
    box = tuple((int(lo), int(hi)) for lo, hi in box)
    if not box or any(hi <= lo for lo, hi in box):
        raise ValidationError(f"empty window {box}")
    return box


def box_points(box: Box) -> Iterator[Vector]:
    return iter(product(*(range(lo, hi) for lo, hi in box)))


@dataclass(frozen=True)
class EdgeSet:
    """A set of directed unit edges.

    ``periodic=True`` means the set is ``edges + kernel`` with canonical
    tails. Otherwise ``edges`` is literal; ``window`` records the tail box it
    was enumerated over and ``kernel``, if given, tags the lattice the
    underlying infinite graph is invariant under.
    """

    edges: frozenset[Edge]
    kernel: KernelLattice | None = None
    periodic: bool = False
    window: Box | None = None

    @classmethod
    def periodic_from(cls, edges: Iterable[Edge], kernel: KernelLattice) -> "EdgeSet":
        return cls(
            frozenset(Edge(kernel.reduce(e.tail), e.direction) for e in edges),
            kernel,
            periodic=True,
        )

    def __contains__(self, e: Edge) -> bool:
        if self.periodic:
            e = Edge(self.kernel.reduce(e.tail), e.direction)
        return e in self.edges

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def dim(self) -> int:
        if self.kernel is not None:
            return self.kernel.dim
        if self.window is not None:
            return len(self.window)
        return len(next(iter(self.edges)).tail)

    def sorted(self) -> list[Edge]:
        return sorted(self.edges)

    def count_by_direction(self) -> dict[int, int]:
        counts = {i: 0 for i in range(1, self.dim + 1)}
        for e in self.edges:
            counts[e.direction] += 1
        return counts

    def complement(self) -> "EdgeSet":
        """All edges of the hypercubic lattice not in the set (periodic sets only)."""
        if not self.periodic:
            raise ValidationError("complement is only defined for periodic edge sets")
        everything = (Edge(r, i) for r in iter_cosets(self.kernel) for i in range(1, self.dim + 1))
        return EdgeSet(frozenset(e for e in everything if e not in self.edges), self.kernel, True)

    def materialize(self, box: Sequence[Sequence[int]]) -> "EdgeSet":
        """Edges of a periodic set whose tails lie in ``box``."""
        if not self.periodic:
            raise ValidationError("only periodic edge sets can be materialized")
        box = _check_box(box)
        edges = frozenset(
            Edge(u, i) for u in box_points(box) for i in range(1, self.dim + 1) if Edge(u, i) in self
        )
        return EdgeSet(edges, self.kernel, False, box)


@dataclass(frozen=True)
class LegSet:
    """Edges incident to a vertex of ``kernel`` (zero modulo the lattice)."""

    kernel: KernelLattice
    window: Box | None = None

    def __contains__(self, e: Edge) -> bool:
        return e.tail in self.kernel or e.head in self.kernel

    def canonical(self) -> frozenset[Edge]:
        """The ``2d`` edge classes: ``(0, e_i)`` and ``(-e_i, 0)`` reduced."""
        d = self.kernel.dim
        zero = (0,) * d
        out = set()
        for i in range(1, d + 1):
            out.add(Edge(zero, i))
            out.add(Edge(self.kernel.reduce(vneg(unit(d, i))), i))
        return frozenset(out)

    def edges_in(self, box: Box) -> frozenset[Edge]:
        d = self.kernel.dim
        return frozenset(
            Edge(u, i) for u in box_points(box) for i in range(1, d + 1) if Edge(u, i) in self
        )


def legs_of(nd: NormalData) -> LegSet:
    return LegSet(kernel_basis(nd))


def window_edges(nd: NormalData, box: Sequence[Sequence[int]] | None = None) -> EdgeSet:
    """Edges of the width-``omega`` Christoffel graph.

    Without ``box`` the result is the periodic set over one fundamental
    domain of the kernel; with ``box`` it is every edge whose tail is in the
    (half-open) box, tagged with the kernel.
    """
    K = kernel_basis(nd)
    if box is None:
        edges = (Edge(r, i) for r in iter_cosets(K) for i in range(1, nd.d + 1))
        return EdgeSet(frozenset(e for e in edges if edge_in_graph(nd, e)), K, periodic=True)
    box = _check_box(box)
    if len(box) != nd.d:
        raise ValidationError(f"window has {len(box)} ranges, expected {nd.d}")
    edges = (Edge(u, i) for u in box_points(box) for i in range(1, nd.d + 1))
    return EdgeSet(frozenset(e for e in edges if edge_in_graph(nd, e)), K, False, box)


def flip(X: EdgeSet, Q: LegSet) -> EdgeSet:
    """Exchange the legs of ``X``: symmetric difference with ``Q``, body untouched."""
    if Q.kernel.dim != X.dim:
        raise ValidationError("window mismatch: leg set lives in another dimension")
    if X.periodic:
        if not lattices_equal(X.kernel, Q.kernel):
            raise ValidationError("window mismatch: edge set and leg set use different lattices")
        return EdgeSet(X.edges ^ Q.canonical(), X.kernel, True)
    if X.window is None:
        raise ValidationError("window mismatch: a finite edge set needs a window to flip")
    if Q.window is not None and Q.window != X.window:
        raise ValidationError(f"window mismatch: {X.window} vs {Q.window}")
    return EdgeSet(X.edges ^ Q.edges_in(X.window), X.kernel, False, X.window)


def reverse(X: EdgeSet) -> EdgeSet:
    """``-X``: the edge ``(u, u + e_i)`` becomes ``(-u - e_i, -u)``."""
    d = X.dim
    rev = (Edge(vsub(vneg(e.tail), unit(d, e.direction)), e.direction) for e in X.edges)
    if X.periodic:
        return EdgeSet.periodic_from(rev, X.kernel)
    window = None
    if X.window is not None:
        # tails -u - e_i of a box of tails fit the negated box widened by one
        window = tuple((-hi, -lo + 1) for lo, hi in X.window)
    return EdgeSet(frozenset(rev), X.kernel, False, window)


def translate(X: EdgeSet, t: Sequence[int]) -> EdgeSet:
    t = as_vector(t)
    if len(t) != X.dim:
        raise ValidationError(f"translation has length {len(t)}, expected {X.dim}")
    moved = (Edge(vadd(e.tail, t), e.direction) for e in X.edges)
    if X.periodic:
        return EdgeSet.periodic_from(moved, X.kernel)
    window = None if X.window is None else tuple((lo + c, hi + c) for (lo, hi), c in zip(X.window, t))
    return EdgeSet(frozenset(moved), X.kernel, False, window)


def body(X: EdgeSet, Q: LegSet) -> EdgeSet:
    return EdgeSet(frozenset(e for e in X.edges if e not in Q), X.kernel, X.periodic, X.window)


def legs(X: EdgeSet, Q: LegSet) -> EdgeSet:
    return EdgeSet(frozenset(e for e in X.edges if e in Q), X.kernel, X.periodic, X.window)


def verify_flip_translate(nd: NormalData, t: Sequence[int] | None = None) -> tuple[Vector, bool]:
    """Check ``H + t == flip(H)`` on one fundamental domain.

    ``t`` defaults to :func:`solve_unit_translation`; any ``t`` with residue
    1 is a valid witness.
    """
    t = solve_unit_translation(nd) if t is None else as_vector(t)
    H = window_edges(nd)
    Q = LegSet(H.kernel)
    return t, translate(H, t) == flip(H, Q)


def verify_reversal_translate(nd: NormalData, t: Sequence[int] | None = None) -> bool:
    """Check ``-H == H + t`` for ``t`` of residue 1 on one fundamental domain."""
    t = solve_unit_translation(nd) if t is None else as_vector(t)
    if residue(nd, t) != 1:
        raise ValidationError(f"t={t} does not have residue 1")
    H = window_edges(nd)
    return reverse(H) == translate(H, t)


def verify_body_symmetry(nd: NormalData) -> bool:
    """Check ``-(H minus Q) == H minus Q`` on one fundamental domain."""
    H = window_edges(nd)
    B = body(H, LegSet(H.kernel))
    return reverse(B) == B


def verify_reversal_is_flip(nd: NormalData) -> bool:
    H = window_edges(nd)
    return reverse(H) == flip(H, LegSet(H.kernel))


@dataclass(frozen=True)
class ConverseAnalysis:
    """Data recovered from a lattice ``K`` and a translation ``t``.

    ``omega`` is the order of ``t`` modulo ``K``; ``b[i]`` is the unique
    ``0 < b_i < omega`` with ``e_i + b_i t`` in ``K``; ``a = omega - b``;
    ``omega * q = sum(a)`` and ``omega * ell = sum(b)``.
    """

    K: KernelLattice
    t: Vector
    omega: int
    b: Vector
    a: Vector
    q: int
    ell: int

    @property
    def d(self) -> int:
        return len(self.a)


def _require_diagonal(K: KernelLattice) -> None:
    if _ones(K.dim) not in K:
        raise ValidationError("the lattice must contain (1, ..., 1)")


def discover_b(K: KernelLattice, t: Sequence[int]) -> ConverseAnalysis:
    """Walk the orbit of each leg ``(0, e_i)`` under ``t`` until it returns to ``K``.

    Raises :class:`DegenerateTranslation` if ``t`` is in ``K`` and
    :class:`InconsistentPattern` if some ``e_i`` is not a negative multiple
    of ``t`` modulo ``K`` (then ``t`` does not generate the quotient).
    """
    _require_diagonal(K)
    t = as_vector(t)
    if len(t) != K.dim:
        raise ValidationError(f"translation has length {len(t)}, expected {K.dim}")
    if t in K:
        raise DegenerateTranslation(f"t={t} lies in the lattice")
    d = K.dim
    omega = K.order(t)
    b = []
    for i in range(1, d + 1):
        acc = K.reduce(unit(d, i))
        for k in range(1, omega):
            acc = K.reduce(vadd(acc, t))
            if not any(acc):
                b.append(k)
                break
        else:
            raise InconsistentPattern(f"no b_{i} with e_{i} + b_{i} t in K; t does not generate Z^d/K")
    a = tuple(omega - x for x in b)
    sa, sb = sum(a), sum(b)
    if sa % omega or sb % omega:
        raise AssertionError(f"order {omega} must divide sum(a)={sa} and sum(b)={sb}")
    q, ell = sa // omega, sb // omega
    if q + ell != d or not (0 < q < d and 0 < ell < d):
        raise AssertionError(f"expected q + ell = d with 0 < q, ell < d; got q={q}, ell={ell}")
    return ConverseAnalysis(K, t, omega, tuple(b), a, q, ell)


def pattern_from_b(analysis: ConverseAnalysis) -> EdgeSet:
    """The pattern ``{(0, e_i) + k t : 0 <= k < b_i} + K``."""
    d, t = analysis.d, analysis.t
    zero = (0,) * d
    edges = (
        Edge(vscale(k, t) if k else zero, i)
        for i in range(1, d + 1)
        for k in range(analysis.b[i - 1])
    )
    return EdgeSet.periodic_from(edges, analysis.K)


def satisfies_flip_translate(M: EdgeSet, t: Sequence[int]) -> bool:
    """``M == flip(M + t)`` with legs taken modulo ``M.kernel``."""
    if not M.periodic:
        raise ValidationError("the flip-translate equation is checked on periodic sets")
    return M == flip(translate(M, t), LegSet(M.kernel))


class Kind(str, enum.Enum):
    CHRISTOFFEL = "christoffel"
    COMPLEMENT_OF_REVERSAL = "complement-of-reversal"
    WIDTH = "width"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class Classification:
    """Outcome of the converse analysis.

    ``kind`` is the most specific label: a Christoffel graph when
    ``sum(a) == omega``, else the complement of a reversed Christoffel graph
    when ``sum(b) == omega``, else a graph of width ``omega``. Every
    consistent pattern is also the width graph of ``(a, omega)``.
    """

    kind: Kind
    a: Vector = ()
    b: Vector = ()
    omega: int = 0
    q: int = 0
    ell: int = 0
    reason: str = field(default="", compare=False)

    @property
    def is_christoffel(self) -> bool:
        return self.kind is not Kind.INCONSISTENT and self.q == 1

    @property
    def is_complement_of_reversal(self) -> bool:
        return self.kind is not Kind.INCONSISTENT and self.ell == 1

    def width_normal(self) -> NormalData:
        return make_normal(self.a, self.omega, require_coprime=False)

    def describe(self) -> str:
        def fmt(v: Vector) -> str:
            return "(" + ",".join(map(str, v)) + ")"

        if self.kind is Kind.INCONSISTENT:
            return f"inconsistent: {self.reason}"
        if self.kind is Kind.CHRISTOFFEL:
            return f"christoffel a={fmt(self.a)} omega={self.omega}"
        if self.kind is Kind.COMPLEMENT_OF_REVERSAL:
            return f"complement-of-reversal b={fmt(self.b)} omega={self.omega} (width graph a={fmt(self.a)})"
        return f"width a={fmt(self.a)} omega={self.omega} q={self.q}"


def classify_pattern(analysis: ConverseAnalysis) -> Classification:
    if analysis.q == 1:
        kind = Kind.CHRISTOFFEL
    elif analysis.ell == 1:
        kind = Kind.COMPLEMENT_OF_REVERSAL
    else:
        kind = Kind.WIDTH
    return Classification(kind, analysis.a, analysis.b, analysis.omega, analysis.q, analysis.ell)


def classify_translation(K: KernelLattice, t: Sequence[int]) -> Classification:
    """Like ``classify_pattern(discover_b(K, t))`` but reports failure as a value."""
    try:
        analysis = discover_b(K, t)
    except InconsistentPattern as exc:
        return Classification(Kind.INCONSISTENT, reason=str(exc))
    M = pattern_from_b(analysis)
    if not satisfies_flip_translate(M, analysis.t):
        return Classification(Kind.INCONSISTENT, reason="reconstructed pattern fails M = flip(M + t)")
    return classify_pattern(analysis)


def reconstruct(cls: Classification, K: KernelLattice) -> EdgeSet:
    """The periodic graph a classification names, over the lattice ``K``."""
    if cls.kind is Kind.INCONSISTENT:
        raise ValidationError("an inconsistent classification names no graph")
    if cls.kind is Kind.COMPLEMENT_OF_REVERSAL:
        Hb = window_edges(make_normal(cls.b, cls.omega, require_coprime=False))
        G = reverse(Hb).complement()
    else:
        G = window_edges(cls.width_normal())
    if not lattices_equal(G.kernel, K):
        raise AssertionError("classified graph has a different period lattice")
    return G


def pirillo_search(K: KernelLattice) -> list[tuple[Vector, Classification]]:
    """All translation classes ``t`` (mod ``K``) admitting a pattern ``M = flip(M + t)``.

    Candidates run over the nonzero coset representatives in Hermite-box
    order; each kept ``t`` comes with the classification of its pattern.
    """
    _require_diagonal(K)
    found = []
    for t in iter_cosets(K):
        if not any(t):
            continue
        try:
            analysis = discover_b(K, t)
        except InconsistentPattern:
            continue
        if satisfies_flip_translate(pattern_from_b(analysis), t):
            found.append((t, classify_pattern(analysis)))
    return found


def short_representative(K: KernelLattice, t: Sequence[int], radius: int = 2) -> Vector:
    """A small vector congruent to ``t`` (least l1 norm in a cube of ``radius``), else ``t`` reduced."""
    target = K.reduce(t)
    best = None
    for v in product(range(-radius, radius + 1), repeat=K.dim):
        if K.reduce(v) == target:
            key = (sum(map(abs, v)), tuple(-c for c in v))
            if best is None or key < best[0]:
                best = (key, v)
    return tuple(best[1]) if best else target
