"""Residue map of a normal vector and the edge predicate of Christoffel graphs.

Everything here works on plain Python integers, so lattice identities are
exact regardless of coordinate size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable, NamedTuple, Sequence

Vector = tuple[int, ...]


class ValidationError(ValueError):
    """Raised on malformed input (bad normal vector, dimension mismatch...)."""


def as_vector(x: Iterable[int]) -> Vector:
    return tuple(int(c) for c in x)


def unit(d: int, i: int) -> Vector:
    """The basis vector e_i of Z^d (directions are 1-based)."""
    if not 1 <= i <= d:
        raise ValidationError(f"direction {i} out of range 1..{d}")
    return tuple(1 if j == i - 1 else 0 for j in range(d))


def vadd(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(p + q for p, q in zip(x, y))


def vsub(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(p - q for p, q in zip(x, y))


def vneg(x: Sequence[int]) -> Vector:
    return tuple(-p for p in x)


def vscale(k: int, x: Sequence[int]) -> Vector:
    return tuple(k * p for p in x)


@dataclass(frozen=True)
class NormalData:
    """A normal vector ``a`` together with its width ``omega``.

    ``s`` is the sum of ``a``. The residue map sends ``x`` to
    ``sum(a_i * x_i) mod omega``.
    """

    a: Vector
    omega: int

    @property
    def d(self) -> int:
        return len(self.a)

    @property
    def s(self) -> int:
        return sum(self.a)

    @property
    def is_standard(self) -> bool:
        return self.omega == self.s

    def __str__(self) -> str:
        body = ",".join(map(str, self.a))
        if self.is_standard:
            return f"a=({body})"
        return f"a=({body}) omega={self.omega}"


def make_normal(
    a: Iterable[int], omega: int | None = None, *, require_coprime: bool = True
) -> NormalData:
    """Validate ``a`` and ``omega`` and bundle them.

    ``omega`` defaults to ``s = sum(a)``. A smaller width must divide ``s``
    with ``s / omega < d`` and every ``a_i < omega``.

    With ``require_coprime=False`` only ``gcd(a_1, ..., a_d, omega) = 1`` is
    demanded, which is what the residue map needs to be onto; the converse
    analysis can produce such vectors when ``omega < s``.
    """
    a = as_vector(a)
    d = len(a)
    if d < 2:
        raise ValidationError(f"dimension must be at least 2, got {d}")
    if any(x <= 0 for x in a):
        raise ValidationError(f"entries of a must be positive, got {a}")
    s = sum(a)
    omega = s if omega is None else int(omega)
    if omega <= 0 or s % omega:
        raise ValidationError(f"omega={omega} must be a positive divisor of s={s}")
    if not 0 < s // omega < d:
        raise ValidationError(f"s/omega={s // omega} must lie strictly between 0 and d={d}")
    if omega < s and any(x >= omega for x in a):
        raise ValidationError(f"every a_i must be smaller than omega={omega} when omega < s")
    if require_coprime:
        if reduce(gcd, a) != 1:
            raise ValidationError(f"entries of a must be coprime, got {a}")
    elif reduce(gcd, a, omega) != 1:
        raise ValidationError(f"gcd of a and omega must be 1, got a={a}, omega={omega}")
    return NormalData(a, omega)


def _check_dim(nd: NormalData, x: Sequence[int]) -> None:
    if len(x) != nd.d:
        raise ValidationError(f"expected a vector of length {nd.d}, got {len(x)}")


def residue(nd: NormalData, x: Sequence[int]) -> int:
    """``sum(a_i * x_i)`` reduced into ``0..omega-1``."""
    _check_dim(nd, x)
    return sum(p * q for p, q in zip(nd.a, x)) % nd.omega


class Edge(NamedTuple):
    """Directed unit edge ``(tail, tail + e_direction)``; direction is 1-based."""

    tail: Vector
    direction: int

    @property
    def head(self) -> Vector:
        return vadd(self.tail, unit(len(self.tail), self.direction))

    def __str__(self) -> str:
        return f"({','.join(map(str, self.tail))})+e{self.direction}"


def make_edge(tail: Iterable[int], direction: int) -> Edge:
    tail = as_vector(tail)
    unit(len(tail), direction)  # range check
    return Edge(tail, int(direction))


def edge_in_graph(nd: NormalData, e: Edge) -> bool:
    """Membership of ``e`` in the Christoffel graph of width ``omega``.

    The edge is present iff the residue of its tail lies in
    ``[0, omega - a_i - 1]``, i.e. the residue strictly increases along it.
    """
    r = residue(nd, e.tail)
    return r <= nd.omega - nd.a[e.direction - 1] - 1


class SigmaPath(NamedTuple):
    """Monotone path from ``start`` to ``start + (1,...,1)`` visiting directions in ``perm`` order."""

    start: Vector
    perm: tuple[int, ...]

    def edges(self) -> list[Edge]:
        d = len(self.start)
        if sorted(self.perm) != list(range(1, d + 1)):
            raise ValidationError(f"{self.perm} is not a permutation of 1..{d}")
        out = []
        u = self.start
        for i in self.perm:
            out.append(Edge(u, i))
            u = vadd(u, unit(d, i))
        return out


def missing_edge(nd: NormalData, path: SigmaPath) -> int:
    """Position (1-based) of the only edge of ``path`` that is not in the graph.

    The partial residues ``F(u_0), F(u_1), ..., F(u_d)`` cut ``[0, s)`` into
    ``d`` consecutive arcs; the missing edge is the one whose arc wraps past 0.
    Only meaningful for ``omega == s``.
    """
    if not nd.is_standard:
        raise ValidationError("missing_edge requires omega == s")
    if len(path.start) != nd.d:
        raise ValidationError(f"path start must have length {nd.d}")
    r = residue(nd, path.start)
    for k, i in enumerate(path.perm, start=1):
        nxt = r + nd.a[i - 1]
        if nxt >= nd.s:
            return k
        r = nxt
    raise AssertionError("partial residues of a sigma-path must wrap exactly once")


def hypercube_edges(base: Sequence[int], dirs: Iterable[int]) -> frozenset[Edge]:
    """Edges of the hypercube graph spanned by ``dirs`` at ``base``.

    These are the ``|R| * 2**(|R|-1)`` covering relations of the Boolean
    lattice on ``R`` shifted to ``base``.
    """
    base = as_vector(base)
    d = len(base)
    dirs = sorted(set(dirs))
    if not dirs:
        raise ValidationError("the direction set must be nonempty")
    out = set()
    for size in range(len(dirs)):
        for subset in combinations(dirs, size):
            corner = base
            for j in subset:
                corner = vadd(corner, unit(d, j))
            for i in dirs:
                if i not in subset:
                    out.add(Edge(corner, i))
    return frozenset(out)


def extended_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(g, p, q)`` with ``p*x + q*y = g = gcd(x, y)``.

    When ``x`` divides ``y`` the answer is ``(x, 1, 0)``.
    """
    if x and y % x == 0:
        return abs(x), (1 if x > 0 else -1), 0
    old_r, r = x, y
    old_p, p = 1, 0
    old_q, q = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_p, p = p, old_p - k * p
        old_q, q = q, old_q - k * q
    if old_r < 0:
        old_r, old_p, old_q = -old_r, -old_p, -old_q
    return old_r, old_p, old_q


def bezout(values: Sequence[int]) -> tuple[int, Vector]:
    """Coefficients ``c`` with ``sum(c_i * v_i) = gcd(v)``, by iterated extended gcd."""
    g, coeffs = values[0], [1]
    for v in values[1:]:
        g, p, q = extended_gcd(g, v)
        coeffs = [p * c for c in coeffs] + [q]
    return g, tuple(coeffs)


def _symmetric_mod(x: int, m: int) -> int:
    r = x % m
    return r - m if 2 * r > m else r


def solve_unit_translation(nd: NormalData) -> Vector:
    """Deterministic ``t`` with ``residue(nd, t) == 1``.

    Bezout coefficients of ``a`` (and ``omega`` when the entries share a
    factor), each reduced modulo ``omega`` to its smallest-magnitude
    representative with ties going to the positive side.
    """
    g, c = bezout(nd.a)
    if g != 1:
        g, c = bezout(nd.a + (nd.omega,))
        c = c[:-1]
    if g != 1:
        raise ValidationError(f"no unit translation for {nd}")
    t = tuple(_symmetric_mod(x, nd.omega) for x in c)
    assert residue(nd, t) == 1 % nd.omega
    return t
