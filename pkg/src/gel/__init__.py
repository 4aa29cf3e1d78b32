"""Editing distance of graphs to families defined by forbidden induced subgraphs."""
from .chib import binary_chromatic, binary_chromatic_number, c_min_c_max, exists_partition
from .editdist import deletion_only_dist, dist_graphs, dist_n_forb, dist_to_forb
from .errors import DegenerateInput, GelError, Graph6Error, SolverTimeout
from .families import NAMED_GRAPHS, Q_FAMILY, ForbiddenFamily, parse_family, parse_graph
from .graph import Graph, VertexPair
from .limits import Limits

__version__ = "0.1.0"

__all__ = [
    "Graph", "VertexPair", "Limits", "ForbiddenFamily", "NAMED_GRAPHS", "Q_FAMILY",
    "parse_graph", "parse_family", "binary_chromatic", "binary_chromatic_number",
    "c_min_c_max", "exists_partition", "dist_to_forb", "deletion_only_dist",
    "dist_graphs", "dist_n_forb", "GelError", "Graph6Error", "SolverTimeout",
    "DegenerateInput",
]
