"""Ground-truth inertia of any weighted graph via congruence diagonalization."""

from __future__ import annotations

from .core import Inertia
from .graph import WeightedGraph, adjacency_matrix
from .matrix import DiagonalizationResult, congruent_diagonalize

__all__ = ["inertia_oracle", "diagonalize_graph"]


def diagonalize_graph(g: WeightedGraph) -> DiagonalizationResult:
    return congruent_diagonalize(adjacency_matrix(g))


def inertia_oracle(g: WeightedGraph) -> Inertia:
    """Exact inertia of the weighted adjacency matrix, for any graph class."""
    return diagonalize_graph(g).inertia
