import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from christoffel import (
    ValidationError,
    coset_representatives,
    hermite_normal_form,
    kernel_basis,
    kernel_basis_d3,
    kernel_basis_projected,
    lattice_from_rows,
    lattices_equal,
    make_normal,
    residue,
    subgroup_index,
)
from christoffel.lattice import is_cyclic_quotient
from oracles import det, index_by_minors, random_coprime, random_normal_cases, same_lattice

FIG_K = [(0, 4, 1), (-2, 0, 3), (1, 1, 1)]


def proof_matrix(a):
    a1, a2, a3 = a
    return [(a3, 0, -a1), (0, a3, -a2), (a2, -a1, 0), (1, 1, 1)]


def test_index_of_diagonal():
    assert subgroup_index([(2, 0), (0, 3)]) == 6


def test_index_of_proof_matrix():
    assert subgroup_index(proof_matrix((2, 3, 5))) == 10


def test_index_of_fig_lattice():
    assert subgroup_index(FIG_K) == 18 == abs(det(FIG_K))


def test_rank_deficient_rejected():
    with pytest.raises(ValidationError):
        subgroup_index([(1, 2), (2, 4)])
    with pytest.raises(ValidationError):
        lattice_from_rows([(1, 1, 1), (2, 2, 2)])


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=1, max_size=4))
def test_index_of_random_diagonal(diag):
    n = len(diag)
    rows = [tuple(diag[i] if j == i else 0 for j in range(n)) for i in range(n)]
    prod = 1
    for v in diag:
        prod *= v
    assert subgroup_index(rows) == prod


def test_index_invariant_under_unimodular_rows():
    rng = random.Random(10)
    for _ in range(100):
        n = rng.randint(2, 4)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n + rng.randint(0, 2))]
        try:
            idx = subgroup_index(rows)
        except ValidationError:
            continue
        for _ in range(6):
            i, j = rng.sample(range(len(rows)), 2)
            k = rng.randint(-3, 3)
            rows[i] = [p + k * q for p, q in zip(rows[i], rows[j])]
            if rng.random() < 0.3:
                rows[i], rows[j] = rows[j], [-c for c in rows[i]]
        assert subgroup_index(rows) == idx == index_by_minors(rows)


def test_hnf_shape():
    H = hermite_normal_form(FIG_K)
    assert list(H) == [(1, 1, 1), (0, 2, 5), (0, 0, 9)]
    rng = random.Random(11)
    for _ in range(50):
        rows = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(4)]
        H = hermite_normal_form(rows)
        if len(H) < 3:
            continue
        for k, row in enumerate(H):
            assert all(c == 0 for c in row[:k]) and row[k] > 0
            for above in H[:k]:
                assert 0 <= above[k] < row[k]
        assert same_lattice(rows, H)


def test_kernel_contains_its_generators_and_has_index_omega():
    for nd in random_normal_cases(12, 30):
        K = kernel_basis(nd)
        assert K.index == nd.omega
        assert all(residue(nd, g) == 0 for g in K.basis)
        assert (1,) * nd.d in K


def test_kernel_small_examples():
    K = kernel_basis(make_normal((1, 1)))
    assert K.index == 2 and (1, 1) in K and (2, 0) in K
    K = kernel_basis(make_normal((2, 5)))
    assert K.index == 7 and abs(det(K.basis)) == 7
    assert kernel_basis(make_normal((2, 3, 5))).index == 10


@pytest.mark.parametrize(
    "a, expected",
    [
        ((2, 3, 5), [(5, 0, -2), (0, 5, -3), (3, -2, 0), (1, 1, 1)]),
        ((1, 1, 1), [(1, 0, -1), (0, 1, -1), (1, -1, 0), (1, 1, 1)]),
        ((3, 7, 8), [(8, 0, -3), (0, 8, -7), (7, -3, 0), (1, 1, 1)]),
    ],
)
def test_closed_form_d3(a, expected):
    assert list(kernel_basis_d3(a)) == expected


def test_closed_form_rejects_other_dimensions():
    with pytest.raises(ValidationError):
        kernel_basis_d3((1, 2))


def test_closed_form_equals_algorithmic_kernel():
    rng = random.Random(13)
    for _ in range(100):
        a = random_coprime(rng, 3, 30)
        K = kernel_basis(make_normal(a))
        closed = lattice_from_rows(kernel_basis_d3(a))
        assert lattices_equal(K, closed)
        assert closed.index == sum(a)
        assert same_lattice(K.basis, kernel_basis_d3(a))


@pytest.mark.parametrize(
    "a, expected",
    [((2, 3, 5), [(7, 2), (3, 8), (3, -2)]), ((1, 1, 1), [(2, 1), (1, 2), (1, -1)])],
)
def test_projected_generators(a, expected):
    gens = list(kernel_basis_projected(a))
    assert gens == expected
    assert len(hermite_normal_form(gens)) == 2


def test_coset_representatives_bijective_with_residues():
    for nd in random_normal_cases(14, 30):
        reps = coset_representatives(kernel_basis(nd))
        assert sorted(residue(nd, r) for r in reps) == list(range(nd.omega))


def test_coset_representatives_examples():
    assert len(coset_representatives(kernel_basis(make_normal((2, 5))))) == 7
    assert coset_representatives(lattice_from_rows([(2, 0), (0, 2)])) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    K = lattice_from_rows(FIG_K)
    reps = coset_representatives(K)
    assert len(reps) == 18 == K.index
    assert len({K.reduce(r) for r in reps}) == 18
    assert coset_representatives(K) == reps


def test_lattice_equality():
    K = kernel_basis(make_normal((2, 3, 5)))
    assert lattices_equal(K, lattice_from_rows(kernel_basis_d3((2, 3, 5))))
    doubled = [tuple(2 * c for c in K.basis[0])] + list(K.basis[1:])
    assert not lattices_equal(K, lattice_from_rows(doubled))
    b0, b1, b2 = K.basis
    mixed = [tuple(p + 3 * q for p, q in zip(b0, b1)), b1, tuple(r - q for r, q in zip(b2, b1))]
    assert lattices_equal(K, lattice_from_rows(mixed))


def test_reduce_and_membership():
    K = lattice_from_rows(FIG_K)
    assert (0, 4, 1) in K and (-2, 0, 3) in K and (1, 0, 0) not in K
    rng = random.Random(15)
    for _ in range(200):
        x = tuple(rng.randint(-30, 30) for _ in range(3))
        r = K.reduce(x)
        assert tuple(p - q for p, q in zip(x, r)) in K
        assert all(0 <= c < dk for c, dk in zip(r, K.diagonal))


def test_cyclic_quotient():
    assert is_cyclic_quotient(lattice_from_rows(FIG_K))
    assert not is_cyclic_quotient(lattice_from_rows([(2, 0, 0), (0, 2, 0), (1, 1, 1)]))
