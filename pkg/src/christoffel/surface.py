"""Stepped surface of a rational hyperplane ``a.x = 0`` and the diagonal projection onto it.

The surface is the union of unit-cube facets lying in the slab
``0 <= a.x < s``. All inputs are converted to :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor
from typing import Iterable, NamedTuple, Sequence

from .residue import ValidationError, Vector, as_vector


def _rational(x: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in x)


def _check(a: Sequence[int], x: Sequence) -> None:
    if len(a) != len(x):
        raise ValidationError(f"point has length {len(x)}, expected {len(a)}")
    if any(c <= 0 for c in a):
        raise ValidationError(f"normal vector must be positive, got {tuple(a)}")


def floor_sum(a: Sequence[int], x: Sequence[Fraction]) -> int:
    return sum(ai * floor(xi) for ai, xi in zip(a, x))


def ceil_sum(a: Sequence[int], x: Sequence[Fraction]) -> int:
    return sum(ai * ceil(xi) for ai, xi in zip(a, x))


def in_surface(a: Sequence[int], X: Sequence) -> bool:
    """Membership in the stepped surface.

    ``X`` is in the surface iff some coordinate is an integer,
    ``sum(a_i floor(x_i)) >= 0`` and ``sum(a_i ceil(x_i)) < s``.
    """
    a = as_vector(a)
    X = _rational(X)
    _check(a, X)
    return (
        any(c.denominator == 1 for c in X)
        and floor_sum(a, X) >= 0
        and ceil_sum(a, X) < sum(a)
    )


def integer_in_surface(a: Sequence[int], x: Sequence[int]) -> bool:
    a = as_vector(a)
    x = as_vector(x)
    _check(a, x)
    return 0 <= sum(p * q for p, q in zip(a, x)) < sum(a)


def project_f(a: Sequence[int], X: Sequence) -> tuple[tuple[Fraction, ...], Fraction]:
    """The point ``Y`` of the surface on the diagonal line through ``X``.

    Returns ``(Y, t)`` with ``X = Y + t (1, ..., 1)``. The descent first
    moves ``X`` by a whole diagonal step so that ``sum(a_i floor(x_i))``
    lands in ``[0, s)``, then repeatedly slides down by the smallest
    fractional part until the ceiling sum drops below ``s``.
    """
    a = as_vector(a)
    Y = list(_rational(X))
    _check(a, Y)
    s = sum(a)
    t = Fraction(0)

    k = floor_sum(a, Y) // s
    if k:
        Y = [c - k for c in Y]
        t += k

    while True:
        eps = min(c - floor(c) for c in Y)
        if eps:
            Y = [c - eps for c in Y]
            t += eps
        if ceil_sum(a, Y) < s:
            break
        if all(c.denominator == 1 for c in Y):
            Y = [c - 1 for c in Y]
            t += 1
            continue
        eps = min(c - floor(c) for c in Y if c.denominator != 1)
        Y = [c - eps for c in Y]
        t += eps
    if floor_sum(a, Y) < 0:
        raise AssertionError("descent left the half-space")
    return tuple(Y), t


def offset_t(a: Sequence[int], X: Sequence) -> Fraction:
    return project_f(a, X)[1]


class Facet(NamedTuple):
    """The facet ``corner + sum_{j != normal} [0, 1] e_j`` of a unit cube."""

    corner: Vector
    normal: int


def facet_in_surface(a: Sequence[int], F: Facet) -> bool:
    a = as_vector(a)
    m = as_vector(F.corner)
    _check(a, m)
    i = F.normal
    if not 1 <= i <= len(a):
        raise ValidationError(f"normal direction {i} out of range")
    low = sum(p * q for p, q in zip(a, m))
    high = low + sum(a) - a[i - 1]
    return low >= 0 and high < sum(a)


def segment_in_surface(a: Sequence[int], M: Sequence[int], i: int) -> bool:
    """Whether the unit segment from ``M`` along ``e_i`` stays in the surface.

    When it does not, ``M`` is its only point in the surface.
    """
    a = as_vector(a)
    M = as_vector(M)
    if not integer_in_surface(a, M):
        raise ValidationError(f"{M} is not a point of the surface")
    if not 1 <= i <= len(a):
        raise ValidationError(f"direction {i} out of range")
    return sum(p * q for p, q in zip(a, M)) + a[i - 1] < sum(a)


def is_visible(a: Sequence[int], X: Sequence) -> bool:
    """Visibility from ``-infinity (1, ..., 1)``, read off the surface membership."""
    return in_surface(a, X)
