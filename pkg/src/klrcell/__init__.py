"""Exact computations in KLR algebras of type A_infinity.

Normal forms, graded dimensions, and per-degree checks of the affine cellular
structure built from root partitions.
"""

from .combinatorics import RootPartition, RootVector, positive_roots, root_partitions
from .engine import Element, KLRAlgebra, get_algebra
from .qseries import QSeries

__all__ = [
    "RootVector", "RootPartition", "positive_roots", "root_partitions",
    "KLRAlgebra", "Element", "get_algebra", "QSeries",
]

__version__ = "0.1.0"
