"""DP-colouring of squares of subcubic graphs, with exact verification tools."""

from .budget import Budget
from .density import girth_mad_bound, mad_bruteforce, mad_exact
from .dp import Cover, build_cover, dp_chromatic, find_transversal, identity_cover, is_dp_k_colorable
from .errors import BudgetError, InputError, InvalidCoverError
from .generators import generate
from .graph import Graph, build_graph, degree_stats, find_threads, girth, square, y_profile
from .iso import is_isomorphic

__all__ = [
    "Budget", "BudgetError", "Cover", "Graph", "InputError", "InvalidCoverError",
    "build_cover", "build_graph", "degree_stats", "dp_chromatic", "find_threads",
    "find_transversal", "generate", "girth", "girth_mad_bound", "identity_cover",
    "is_dp_k_colorable", "is_isomorphic", "mad_bruteforce", "mad_exact", "square", "y_profile",
]
