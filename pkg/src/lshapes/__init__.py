"""Minimum distance diagrams of weighted circulant digraphs and L-shapes of
numerical semigroups, computed exactly."""

__version__ = "0.1.0"

from .cayley import MinWeightTable, WeightedCayleyDigraph, diameter, distance, min_weight_table
from .diagrams import (
    Diagram, apery_digraph, enumerate_mdds, is_lshape, is_mdd, lshapes_apery,
    lshapes_closed, render,
)
from .errors import DomainError, UnsupportedRender, VerificationError
from .factorization import factorization_graph, factorizations, minimal_presentation
from .semigroup import (
    NumericalSemigroup, apery, contains, frobenius, is_closed, pseudo_frobenius,
)
