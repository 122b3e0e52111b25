"""Christoffel graphs: d-dimensional Christoffel words on the hypercubic lattice.

The graph of a normal vector ``a`` (and width ``omega``) keeps the unit
edges along which ``x -> a.x mod omega`` increases. Its flip (exchanging the
edges at residue 0) is a translate of itself, and conversely every periodic
pattern with that property is such a graph.
"""

__version__ = "0.1.0"

from .graph import (
    Classification,
    ConverseAnalysis,
    DegenerateTranslation,
    EdgeSet,
    InconsistentPattern,
    Kind,
    LegSet,
    body,
    classify_pattern,
    classify_translation,
    discover_b,
    flip,
    legs,
    pattern_from_b,
    pirillo_search,
    reconstruct,
    reverse,
    satisfies_flip_translate,
    translate,
    verify_body_symmetry,
    verify_flip_translate,
    verify_reversal_is_flip,
    verify_reversal_translate,
    window_edges,
)
from .lattice import (
    KernelLattice,
    coset_representatives,
    hermite_normal_form,
    kernel_basis,
    kernel_basis_d3,
    kernel_basis_projected,
    lattice_from_rows,
    lattices_equal,
    subgroup_index,
)
from .residue import (
    Edge,
    NormalData,
    SigmaPath,
    ValidationError,
    edge_in_graph,
    hypercube_edges,
    make_edge,
    make_normal,
    missing_edge,
    residue,
    solve_unit_translation,
)
from .surface import (
    Facet,
    facet_in_surface,
    in_surface,
    integer_in_surface,
    project_f,
    segment_in_surface,
)
from .tiling import (
    ChristoffelParallelogram,
    Tile,
    christoffel_parallelogram,
    locate_tile,
    project_pi,
    quotient_graph,
    tile_contains,
)
from .words import (
    are_conjugate,
    central_factorize,
    christoffel_word,
    is_palindrome,
    line_word,
    periods_of,
    pirillo_condition,
)

__all__ = [
    "ChristoffelParallelogram",
    "Classification",
    "ConverseAnalysis",
    "DegenerateTranslation",
    "Edge",
    "EdgeSet",
    "Facet",
    "InconsistentPattern",
    "KernelLattice",
    "Kind",
    "LegSet",
    "NormalData",
    "SigmaPath",
    "Tile",
    "ValidationError",
    "are_conjugate",
    "body",
    "central_factorize",
    "christoffel_parallelogram",
    "christoffel_word",
    "classify_pattern",
    "classify_translation",
    "coset_representatives",
    "discover_b",
    "edge_in_graph",
    "facet_in_surface",
    "flip",
    "hermite_normal_form",
    "hypercube_edges",
    "in_surface",
    "integer_in_surface",
    "is_palindrome",
    "kernel_basis",
    "kernel_basis_d3",
    "kernel_basis_projected",
    "lattice_from_rows",
    "lattices_equal",
    "legs",
    "line_word",
    "locate_tile",
    "make_edge",
    "make_normal",
    "missing_edge",
    "pattern_from_b",
    "periods_of",
    "pirillo_condition",
    "pirillo_search",
    "project_f",
    "project_pi",
    "quotient_graph",
    "reconstruct",
    "residue",
    "reverse",
    "satisfies_flip_translate",
    "segment_in_surface",
    "solve_unit_translation",
    "subgroup_index",
    "tile_contains",
    "translate",
    "verify_body_symmetry",
    "verify_flip_translate",
    "verify_reversal_is_flip",
    "verify_reversal_translate",
    "window_edges",
]
