"""Exact combinatorics of real hyperplane arrangements."""
from .arrangement import (Arrangement, FamilySpec, Hyperplane, braid, catalan, contract, delete, essentialize,
                          generic, graphical, is_general_position, linial, make_family, shi)
from .exact_math import Polynomial
from .graph import Graph
from .orlik_solomon import graded_dimensions, hilbert_polynomial
from .poset import (build_poset, chi_via_deletion_contraction, chi_via_finite_field, chi_via_mobius,
                    count_complement_points)
from .regions import Region, enumerate_regions, zaslavsky_counts

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "FamilySpec", "Graph", "Hyperplane", "Polynomial", "Region", "braid", "build_poset", "catalan",
    "chi_via_deletion_contraction", "chi_via_finite_field", "chi_via_mobius", "contract",
    "count_complement_points", "delete", "enumerate_regions", "essentialize", "generic", "graded_dimensions",
    "graphical", "hilbert_polynomial", "is_general_position", "linial", "make_family", "shi", "zaslavsky_counts",
]
