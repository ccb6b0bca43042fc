"""Exact inertia of positively weighted graphs, with a focus on bicyclic graphs."""
from .graph import (
    GraphFormatError,
    Inertia,
    NotSymmetricError,
    SymmetricMatrix,
    WeightedGraph,
    adjacency_matrix,
    components,
    find_pendant,
    find_pendant_twins,
    parse_graph,
    serialize_graph,
)
from .engine import char_poly, congruence_inertia, descartes_inertia

__version__ = "0.1.0"
