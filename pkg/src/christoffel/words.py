"""Christoffel words, central words and the words read along lattice lines.

Words are plain strings over the letters ``a`` and ``b``. Along a line of the
hypercubic lattice, ``a`` codes an edge of the graph and ``b`` a nonedge.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

from .residue import Edge, NormalData, ValidationError, as_vector, edge_in_graph, unit, vadd, vscale


def christoffel_word(p: int, q: int) -> str:
    """Lower Christoffel word of slope ``q/p``.

    Walks ``k -> k + q (mod p + q)`` from 0 and writes ``a`` on every ascent,
    so the word has ``p`` letters ``a`` and ``q`` letters ``b``.
    """
    if p < 1 or q < 1:
        raise ValidationError(f"p and q must be positive, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValidationError(f"p and q must be coprime, got ({p}, {q})")
    n = p + q
    letters = []
    k = 0
    for _ in range(n):
        nxt = (k + q) % n
        letters.append("a" if nxt > k else "b")
        k = nxt
    return "".join(letters)


def line_word(nd: NormalData, x: Sequence[int], i: int, n: int) -> str:
    """The ``n`` letters read along the line through ``x`` in direction ``i``."""
    if n < 1:
        raise ValidationError(f"length must be positive, got {n}")
    x = as_vector(x)
    e = unit(nd.d, i)
    return "".join(
        "a" if edge_in_graph(nd, Edge(vadd(x, vscale(k, e)), i)) else "b"
        for k in range(n)
    )


def central_factorize(w: str) -> tuple[str, str, str]:
    """Split ``w = a m b`` into its first letter, central word and last letter."""
    if len(w) < 2:
        raise ValidationError("a Christoffel word has length at least 2")
    if w[0] != "a" or w[-1] != "b":
        raise ValidationError(f"expected a word of the form a...b, got {w!r}")
    return w[0], w[1:-1], w[-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def has_period(w: str, p: int) -> bool:
    return all(w[k] == w[k + p] for k in range(len(w) - p))


def periods_of(w: str) -> list[int]:
    """All periods ``1 <= p <= len(w)`` of ``w``."""
    return [p for p in range(1, len(w) + 1) if has_period(w, p)]


def are_conjugate(u: str, v: str) -> bool:
    """True iff ``v`` is a rotation of ``u``."""
    return len(u) == len(v) and v in u + u


def rotations(w: str) -> list[str]:
    return [w[k:] + w[:k] for k in range(len(w))]


def swap_ends(w: str) -> str:
    """``amb -> bma``."""
    first, m, last = central_factorize(w)
    return last + m + first


def pirillo_condition(w: str) -> bool:
    """Whether ``amb`` and ``bma`` are conjugate (characterizes Christoffel words)."""
    try:
        return are_conjugate(w, swap_ends(w))
    except ValidationError:
        return False
