"""Flipping the legs of a Christoffel graph gives back a translate of it.

The legs are the edges touching a vertex of residue 0. Removing the
outgoing ones and inserting the incoming ones looks like it should destroy
the pattern, yet the result is the same graph shifted by any vector of
residue 1. Every check below runs over a whole fundamental domain, which
by periodicity settles it everywhere.

Run: python demos/02_flip_is_translation.py [output-dir]
"""

import sys
from pathlib import Path

from christoffel import (
    LegSet,
    flip,
    kernel_basis,
    make_normal,
    residue,
    solve_unit_translation,
    translate,
    verify_body_symmetry,
    verify_reversal_translate,
    window_edges,
)
from christoffel.render import RenderSpec, render

for a, omega in (((2, 5), None), ((2, 3, 5), None), ((15, 11, 10), 18)):
    nd = make_normal(a, omega)
    K = kernel_basis(nd)
    H = window_edges(nd)
    t = solve_unit_translation(nd)
    F = flip(H, LegSet(K))
    print(f"{nd}: kernel {K}, {len(H)} edges per domain")
    print(f"  t = {t} (residue {residue(nd, t)}), flip(H) == H + t: {F == translate(H, t)}")
    print(f"  body symmetric: {verify_body_symmetry(nd)}, reversal is a translate: {verify_reversal_translate(nd)}")

out = Path(sys.argv[1]) if len(sys.argv) > 1 else None
if out:
    out.mkdir(parents=True, exist_ok=True)
    (out / "graph_2_5.svg").write_text(render(make_normal((2, 5)), RenderSpec("h")))
    (out / "graph_2_3_5.svg").write_text(render(make_normal((2, 3, 5)), RenderSpec("i")))
    (out / "quotient_2_3_5.svg").write_text(render(make_normal((2, 3, 5)), RenderSpec("g")))
    print("drawings written to", out)
