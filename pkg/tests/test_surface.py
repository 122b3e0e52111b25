import random
from fractions import Fraction

import pytest

from christoffel import (
    Edge,
    Facet,
    ValidationError,
    coset_representatives,
    edge_in_graph,
    facet_in_surface,
    in_surface,
    integer_in_surface,
    kernel_basis,
    make_normal,
    project_f,
    segment_in_surface,
)
from christoffel.surface import is_visible
from oracles import random_coprime, ray_scan_visible

A = (2, 3, 5)
F = Fraction


def rand_rational(rng, lo=-6, hi=6, den=12):
    return F(rng.randint(lo * den, hi * den), rng.randint(1, den))


@pytest.mark.parametrize(
    "X, expected",
    [((0, 0, 0), True), ((1, 1, 1), False), ((F(1, 2), 0, 0), True), ((F(1, 2), F(1, 3), F(1, 5)), False)],
)
def test_membership_examples(X, expected):
    assert in_surface(A, X) is expected


def test_integer_membership_examples():
    assert integer_in_surface(A, (-1, -1, 1))
    assert not integer_in_surface(A, (0, 0, 2))


def test_integer_points_agree_with_general_test():
    rng = random.Random(50)
    for _ in range(1000):
        d = rng.randint(2, 4)
        a = random_coprime(rng, d, 9)
        x = tuple(rng.randint(-4, 4) for _ in range(d))
        assert in_surface(a, x) == integer_in_surface(a, x)


def test_projection_proof_values():
    assert project_f(A, (1, 1, 1)) == ((0, 0, 0), 1)
    assert project_f(A, (-1, -1, -1)) == ((0, 0, 0), -1)


def test_points_of_the_surface_are_fixed():
    X = (F(1, 2), 0, 0)
    assert project_f(A, X) == (X, 0)


def test_projection_lands_on_the_surface_along_the_diagonal():
    rng = random.Random(51)
    for _ in range(500):
        d = rng.randint(2, 4)
        a = random_coprime(rng, d, 9)
        X = tuple(rand_rational(rng) for _ in range(d))
        Y, t = project_f(a, X)
        assert in_surface(a, Y)
        assert all(x - y == t for x, y in zip(X, Y))
        # idempotence
        assert project_f(a, Y) == (Y, 0)
        # invariance along the diagonal
        lam = rand_rational(rng)
        assert project_f(a, tuple(x + lam for x in X))[0] == Y


def test_projection_is_unique_on_the_diagonal():
    rng = random.Random(52)
    for _ in range(500):
        d = rng.randint(2, 4)
        a = random_coprime(rng, d, 9)
        X = tuple(rand_rational(rng) for _ in range(d))
        Y, _ = project_f(a, X)
        s = sum(a)
        dens = {x.denominator for x in X} | {1}
        for den in dens:
            for k in range(-s * den, s * den + 1):
                if k == 0:
                    continue
                Z = tuple(y + F(k, den) for y in Y)
                assert not in_surface(a, Z)


def test_visibility_matches_ray_scan():
    rng = random.Random(53)
    checked = 0
    while checked < 500:
        d = rng.randint(2, 4)
        a = random_coprime(rng, d, 7)
        M = tuple(rng.randint(-3, 3) for _ in range(d))
        if sum(p * q for p, q in zip(a, M)) < 0:
            continue
        i = rng.randint(1, d)
        # a point on the facet of the cube at M orthogonal to e_i
        X = tuple(F(m) if j == i - 1 else m + F(rng.randint(0, 12), 12) for j, m in enumerate(M))
        assert is_visible(a, X) == ray_scan_visible(a, X) == in_surface(a, X)
        checked += 1


def test_facet_examples():
    assert facet_in_surface(A, Facet((0, 0, 0), 3))
    assert not facet_in_surface(A, Facet((0, 0, 1), 3))
    with pytest.raises(ValidationError):
        facet_in_surface(A, Facet((0, 0, 0), 4))


def test_facets_consist_of_surface_points():
    rng = random.Random(54)
    for _ in range(300):
        M = tuple(rng.randint(-3, 3) for _ in range(3))
        i = rng.randint(1, 3)
        X = tuple(F(m) if j == i - 1 else m + F(rng.randint(1, 11), 12) for j, m in enumerate(M))
        if facet_in_surface(A, Facet(M, i)):
            assert in_surface(A, X)


def test_segment_examples():
    assert segment_in_surface(A, (0, 0, 0), 1)
    assert not segment_in_surface(A, (1, 1, 0), 3)
    with pytest.raises(ValidationError):
        segment_in_surface(A, (1, 1, 1), 1)


def test_segments_are_graph_edges():
    rng = random.Random(55)
    for _ in range(20):
        d = rng.randint(2, 4)
        a = random_coprime(rng, d, 9)
        nd = make_normal(a)
        for r in coset_representatives(kernel_basis(nd)):
            # shift along the diagonal into the slab 0 <= a.M < s
            k = sum(p * q for p, q in zip(a, r)) // nd.s
            M = tuple(c - k for c in r)
            assert integer_in_surface(a, M)
            for i in range(1, d + 1):
                assert segment_in_surface(a, M, i) == edge_in_graph(nd, Edge(M, i))


def test_input_validation():
    with pytest.raises(ValidationError):
        in_surface(A, (0, 0))
    with pytest.raises(ValidationError):
        project_f((0, 1, 2), (0, 0, 0))
