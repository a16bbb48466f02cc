"""Balanced labelings of multigraphs over finite Abelian groups."""

from ._core import (
    BoundExceeded,
    Frame,
    Graph,
    Group,
    ParseError,
    cycle_basis,
    k_edge_classes,
    oracle_count,
    oracle_is_balanced,
    weak_cycle_space_dim,
)

__all__ = [
    "BoundExceeded",
    "Frame",
    "Graph",
    "Group",
    "ParseError",
    "cycle_basis",
    "k_edge_classes",
    "oracle_count",
    "oracle_is_balanced",
    "weak_cycle_space_dim",
]
