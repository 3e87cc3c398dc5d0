"""Distance signless Laplacian spectral radius and Hamiltonian properties of small graphs."""

from .graph import Graph, basic_stats, complement, disjoint_union, join
from .expr import parse_expr, print_expr
from .graph6 import emit_graph6, parse_graph6
from .metric import DistanceData, QDMatrix, all_pairs_distances, qd_matrix
from .spectral import SpectralEstimate, rho_d, spectral_radius
from .theorems import Outcome, Verdict, check

__all__ = [
    "Graph", "basic_stats", "complement", "disjoint_union", "join",
    "parse_expr", "print_expr", "emit_graph6", "parse_graph6",
    "DistanceData", "QDMatrix", "all_pairs_distances", "qd_matrix",
    "SpectralEstimate", "rho_d", "spectral_radius",
    "Outcome", "Verdict", "check",
]
