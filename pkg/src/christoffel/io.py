"""JSON and DOT exports of edge sets.

JSON layout::

    {"a": [...], "omega": W,
     "edges": [{"tail": [...], "dir": i}, ...],
     "window": {"kind": "box", "ranges": [[lo, hi], ...]}
            or {"kind": "fundamental", "kernel": [[...], ...]}}

Edges are always written sorted by ``(tail, dir)``, so equal inputs give
byte-identical files.
"""

from __future__ import annotations

import json

from .graph import EdgeSet, LegSet
from .lattice import KernelLattice, kernel_basis
from .residue import Edge, NormalData, ValidationError, make_normal, residue


def graph_to_dict(nd: NormalData, X: EdgeSet) -> dict:
    if X.periodic:
        window = {"kind": "fundamental", "kernel": [list(r) for r in X.kernel.basis]}
    elif X.window is not None:
        window = {"kind": "box", "ranges": [list(r) for r in X.window]}
    else:
        window = {"kind": "none"}
    return {
        "a": list(nd.a),
        "omega": nd.omega,
        "edges": [{"tail": list(e.tail), "dir": e.direction} for e in X.sorted()],
        "window": window,
    }


def graph_to_json(nd: NormalData, X: EdgeSet) -> str:
    return json.dumps(graph_to_dict(nd, X), indent=1) + "\n"


def graph_from_dict(data: dict) -> tuple[NormalData, EdgeSet]:
    try:
        nd = make_normal(data["a"], data["omega"], require_coprime=False)
        edges = frozenset(Edge(tuple(e["tail"]), int(e["dir"])) for e in data["edges"])
        window = data.get("window", {"kind": "none"})
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed graph document: {exc}") from exc
    kind = window.get("kind")
    if kind == "fundamental":
        K = KernelLattice.from_rows(window["kernel"])
        return nd, EdgeSet(edges, K, periodic=True)
    if kind == "box":
        box = tuple((int(lo), int(hi)) for lo, hi in window["ranges"])
        return nd, EdgeSet(edges, kernel_basis(nd), False, box)
    if kind == "none":
        return nd, EdgeSet(edges)
    raise ValidationError(f"unknown window kind {kind!r}")


def graph_from_json(text: str) -> tuple[NormalData, EdgeSet]:
    return graph_from_dict(json.loads(text))


def _node(v) -> str:
    return '"' + ",".join(map(str, v)) + '"'


def graph_to_dot(nd: NormalData, X: EdgeSet, leg_color: str = "red", body_color: str = "blue") -> str:
    """Graphviz digraph; vertices are labelled by their residue, legs drawn in ``leg_color``."""
    Q = LegSet(X.kernel) if X.kernel is not None else None
    nodes = sorted({e.tail for e in X.edges} | {e.head for e in X.edges})
    lines = [f'digraph "{nd}" {{']
    for v in nodes:
        lines.append(f"  {_node(v)} [label=\"{residue(nd, v)}\"];")
    for e in X.sorted():
        color = leg_color if Q is not None and e in Q else body_color
        lines.append(f"  {_node(e.tail)} -> {_node(e.head)} [color={color}, label=\"e{e.direction}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
