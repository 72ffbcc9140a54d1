"""
Algèbre linéaire exacte sur Q et sur les polynômes de Laurent.
"""

from .matrix import MatrixR, commutator, q_commutator, unit_vector
from .laurent_matrix import MatrixL, MatrixL2
from .reduction import (
    EchelonBasis,
    RowReduction,
    invariant_span,
    joint_kernel,
    rank,
    rank_of_vectors,
    rref_rank_kernel,
)

__all__ = [
    "MatrixR",
    "MatrixL",
    "MatrixL2",
    "commutator",
    "q_commutator",
    "unit_vector",
    "EchelonBasis",
    "RowReduction",
    "invariant_span",
    "joint_kernel",
    "rank",
    "rank_of_vectors",
    "rref_rank_kernel",
]
