"""Exact combinatorics of symmetric edge polytopes of graphs."""

from .ehrhart import h_star, lattice_points, polar_dual_points
from .errors import SympolyError
from .facets import count_facets, enumerate_facets
from .graph import Graph, load_graph
from .volume import normalized_volume, triangulation

__all__ = [
    "Graph", "SympolyError", "count_facets", "enumerate_facets", "h_star",
    "lattice_points", "load_graph", "normalized_volume", "polar_dual_points",
    "triangulation",
]
