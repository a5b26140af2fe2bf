"""Exact homomorphism counts, antiferromagnetic and Lorentzian certificates."""

from .graphs import WeightedGraph, complete_graph, make_family, tensor_with_k2
from .homcount import bipartite_hom_count, g_chromatic_polynomial, g_volume, hom_count
from .poly import SparsePolynomial, is_lorentzian, mixed_form
from .spectrum import is_antiferromagnetic

__version__ = "0.1.0"

__all__ = [
    "SparsePolynomial",
    "WeightedGraph",
    "bipartite_hom_count",
    "complete_graph",
    "g_chromatic_polynomial",
    "g_volume",
    "hom_count",
    "is_antiferromagnetic",
    "is_lorentzian",
    "make_family",
    "mixed_form",
    "tensor_with_k2",
]
