"""Exact Tutte polynomials of the fractal scale-free lattice and two flowers."""

from ._core import (
    BiPoly,
    CapExceeded,
    DomainError,
    FractalTutteError,
    LatticeFamily,
    Multigraph,
    NotDivisible,
    ParseError,
    acyclic_root_connected,
    bicycle_dimension,
    build_lattice,
    count_spanning_trees_bruteforce,
    diagonal_closed,
    growth_constant,
    indegree_sequences_strong,
    lattice_counts,
    parse_family,
    potts_direct,
    potts_lattice,
    potts_partition,
    run_cli,
    spanning_trees_closed,
    split_tutte,
    tutte_deletion_contraction,
    tutte_eval,
    tutte_pair,
    tutte_subgraph_expansion,
    tutte_symbolic,
)

__all__ = [name for name in dir() if not name.startswith("_")]
