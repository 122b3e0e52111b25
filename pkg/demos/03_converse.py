"""The converse: which periodic patterns satisfy M = flip(M + t)?

Start from a lattice K containing (1, 1, 1) and search every translation
class t. Each solution is recovered by walking the orbit of the legs
under t, and then named: a Christoffel graph, the complement of a
reversed one, or more generally a graph of width omega.

Run: python demos/03_converse.py
"""

from christoffel import (
    discover_b,
    kernel_basis,
    lattice_from_rows,
    make_normal,
    pirillo_search,
    reconstruct,
    reverse,
    window_edges,
)
from christoffel.graph import short_representative

K = lattice_from_rows([(0, 4, 1), (-2, 0, 3), (1, 1, 1)])
print(f"lattice {K} of index {K.index}")

for t, cls in pirillo_search(K):
    an = discover_b(K, t)
    print(f"  t ~ {short_representative(K, t)}: b={an.b} a={an.a} q={an.q} l={an.ell} -> {cls.describe()}")
    assert reconstruct(cls, K) is not None

# The two translations e3 - e2 and e2 - e3 give the pair drawn in the literature.
H = window_edges(make_normal((3, 7, 8)))
W = window_edges(make_normal((15, 11, 10), 18))
print("\nwidth-18 graph equals the complement of the reversed (3,7,8) graph:", W == reverse(H).complement())

# The other four classes are the same construction for the unit multiples
# c (3, 7, 8) mod 18, which share the kernel.
for c in (5, 7, 11, 13):
    a = tuple(c * x % 18 for x in (3, 7, 8))
    print(f"  {c} * (3,7,8) mod 18 = {a}, width 18: same kernel:", kernel_basis(make_normal(a, 18)) == K)
