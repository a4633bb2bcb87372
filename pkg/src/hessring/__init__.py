"""Exact computations for the cohomology of Hessenberg varieties."""

from .hessenberg import HessFn, enumerate_hn, fixed_points, incomparability_graph
from .perm import Permutation, enumerate_sn, minimal_hess
from .polyring import MPoly, PolyRing, UniPoly

__version__ = "0.1.0"

__all__ = [
    "HessFn", "Permutation", "MPoly", "PolyRing", "UniPoly",
    "enumerate_hn", "enumerate_sn", "fixed_points", "incomparability_graph",
    "minimal_hess",
]
