"""Finite-index sublattices of Z^d: Hermite normal form, indices, cosets.

Row convention throughout: a lattice is the set of integer combinations of
the rows of a matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations, product
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

from .residue import (
    NormalData,
    ValidationError,
    Vector,
    as_vector,
    residue,
    solve_unit_translation,
    unit,
    vscale,
    vsub,
)

Matrix = tuple[Vector, ...]


def hermite_normal_form(rows: Iterable[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns the nonzero rows, upper triangular, pivots positive, entries
    above each pivot reduced into ``[0, pivot)``.
    """
    m = [list(map(int, r)) for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise ValidationError("all rows must have the same length")
    top = 0
    pivots = []
    for col in range(ncols):
        # Euclid on the column below `top` until a single nonzero entry remains
        while True:
            nz = [i for i in range(top, len(m)) if m[i][col]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(m[i][col]))
            m[top], m[piv] = m[piv], m[top]
            done = True
            for i in range(top + 1, len(m)):
                if m[i][col]:
                    q = m[i][col] // m[top][col]
                    m[i] = [x - q * y for x, y in zip(m[i], m[top])]
                    if m[i][col]:
                        done = False
            if done:
                break
        if top < len(m) and m[top][col]:
            if m[top][col] < 0:
                m[top] = [-x for x in m[top]]
            pivots.append((top, col))
            top += 1
    for r, col in pivots:
        p = m[r][col]
        for i in range(r):
            q = m[i][col] // p
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
    return tuple(tuple(r) for r in m[:top])


def _det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def subgroup_index(rows: Sequence[Sequence[int]]) -> int:
    """Index in Z^n of the subgroup spanned by ``rows``: gcd of all n-minors."""
    rows = [as_vector(r) for r in rows]
    if not rows:
        raise ValidationError("need at least one row")
    n = len(rows[0])
    if len(rows) < n:
        raise ValidationError(f"rank-deficient input: {len(rows)} rows in dimension {n}")
    g = reduce(gcd, (_det(sub) for sub in combinations(rows, n)), 0)
    if g == 0:
        raise ValidationError("rank-deficient input: every maximal minor vanishes")
    return g


@dataclass(frozen=True)
class KernelLattice:
    """Finite-index sublattice of Z^d stored by its Hermite basis."""

    basis: Matrix

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "KernelLattice":
        hnf = hermite_normal_form(rows)
        if not hnf:
            raise ValidationError("empty generator list")
        d = len(hnf[0])
        if len(hnf) != d:
            raise ValidationError(f"generators span a rank-{len(hnf)} lattice in dimension {d}")
        return cls(hnf)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def diagonal(self) -> Vector:
        return tuple(self.basis[i][i] for i in range(self.dim))

    @property
    def index(self) -> int:
        return prod(self.diagonal)

    def reduce(self, x: Sequence[int]) -> Vector:
        """Representative of ``x + K`` inside the box ``0 <= x_j < pivot_j``."""
        if len(x) != self.dim:
            raise ValidationError(f"expected a vector of length {self.dim}")
        v = list(x)
        for j, row in enumerate(self.basis):
            q = v[j] // row[j]
            if q:
                v = [p - q * r for p, r in zip(v, row)]
        return tuple(v)

    def __contains__(self, x: Sequence[int]) -> bool:
        return not any(self.reduce(x))

    def congruent(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return vsub(x, y) in self

    def order(self, t: Sequence[int]) -> int:
        """Order of ``t`` in the finite quotient Z^d / K."""
        k, acc = 1, self.reduce(t)
        while any(acc):
            acc = self.reduce(tuple(p + q for p, q in zip(acc, t)))
            k += 1
        return k

    def __str__(self) -> str:
        return ";".join(",".join(map(str, r)) for r in self.basis)


def lattice_from_rows(rows: Iterable[Sequence[int]]) -> KernelLattice:
    return KernelLattice.from_rows(rows)


def kernel_basis(nd: NormalData) -> KernelLattice:
    """Kernel of the residue map ``x -> a.x mod omega``.

    With ``t`` a unit translation, ``x - F(x) t`` always lies in the
    kernel, so ``e_j - a_j t`` together with ``omega t`` generate it.
    """
    t = solve_unit_translation(nd)
    gens = [vsub(unit(nd.d, j), vscale(nd.a[j - 1], t)) for j in range(1, nd.d + 1)]
    gens.append(vscale(nd.omega, t))
    K = KernelLattice.from_rows(gens)
    assert K.index == nd.omega
    assert all(residue(nd, g) == 0 for g in K.basis)
    return K


def kernel_basis_d3(a: Sequence[int]) -> tuple[Vector, Vector, Vector, Vector]:
    """Closed-form kernel generators for d = 3 and omega = s."""
    a = as_vector(a)
    if len(a) != 3:
        raise ValidationError(f"closed form needs d = 3, got d = {len(a)}")
    a1, a2, a3 = a
    return (a3, 0, -a1), (0, a3, -a2), (a2, -a1, 0), (1, 1, 1)


def kernel_basis_projected(a: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Closed-form generators of the projected kernel on the (h_1, h_2) basis.

    The combinations ``a3 h1 - a1 h3``, ``a3 h2 - a2 h3`` and ``a2 h1 - a1 h2``
    are rewritten with ``h3 = -h1 - h2``.
    """
    a = as_vector(a)
    if len(a) != 3:
        raise ValidationError(f"closed form needs d = 3, got d = {len(a)}")
    a1, a2, a3 = a
    return (a3 + a1, a1), (a2, a3 + a2), (a2, -a1)


def coset_representatives(K: KernelLattice) -> list[Vector]:
    """One vector per coset of K: the Hermite box, in mixed-radix order."""
    return [tuple(v) for v in product(*(range(p) for p in K.diagonal))]


def iter_cosets(K: KernelLattice) -> Iterator[Vector]:
    return iter(product(*(range(p) for p in K.diagonal)))


def lattices_equal(K1: KernelLattice, K2: KernelLattice) -> bool:
    if K1.dim != K2.dim:
        raise ValidationError("lattices live in different dimensions")
    return K1.basis == K2.basis


def is_cyclic_quotient(K: KernelLattice) -> bool:
    """True iff Z^d / K is cyclic, i.e. some coset has order equal to the index."""
    n = K.index
    return n == 1 or any(K.order(r) == n for r in iter_cosets(K) if any(r))
