"""Dimension 3 seen from the diagonal: tiles, parallelograms, stepped surfaces.

Projecting along (1, 1, 1) turns the graph into a rhombus tiling. A
fundamental domain of the projected kernel, with the graph drawn in it,
is the Christoffel parallelogram: s points labelled 0..s-1, a centrally
symmetric body and four legs at the corners.

Run: python demos/04_plane_pictures.py [output-dir]
"""

import sys
from fractions import Fraction
from pathlib import Path

from christoffel import christoffel_parallelogram, in_surface, locate_tile, make_normal, project_f
from christoffel.render import RenderSpec, render_parallelogram
from christoffel.tiling import flipped_graph_region, shift_edges, unit_translation_plane

nd = make_normal((2, 3, 5))
x = (Fraction(3, 5), Fraction(1, 5), Fraction(0))
print(f"the point {tuple(map(str, x))} projects into tile {locate_tile(nd, x)}")

out = Path(sys.argv[1]) if len(sys.argv) > 1 else None
for a in ((2, 3, 5), (4, 6, 7), (3, 7, 8)):
    nd = make_normal(a)
    P = christoffel_parallelogram(nd)
    tp = unit_translation_plane(nd)
    print(f"\n{a}: sides {P.sides}, {len(P.labels)} labels, {len(P.edges)} edges, {len(P.legs())} legs")
    print("  body centrally symmetric:", P.reflect(P.body()) == P.body())
    print(f"  flipped graph reappears shifted by {tp}:", flipped_graph_region(nd, P.sides, tp) == shift_edges(P.edges, tp))
    if out:
        out.mkdir(parents=True, exist_ok=True)
        (out / f"parallelogram_{'_'.join(map(str, a))}.svg").write_text(render_parallelogram(P, RenderSpec("parallelogram")))

# The stepped surface is what an observer far down the diagonal sees.
a = (2, 3, 5)
for X in ((1, 1, 1), (-1, -1, -1), (Fraction(7, 2), Fraction(-1, 3), 2)):
    Y, t = project_f(a, X)
    print(f"\nf{tuple(map(str, X))} = {tuple(map(str, Y))} at diagonal offset {t}; on the surface: {in_surface(a, Y)}")
