"""
Représentations L(λ) de U_q(gl_n) en base de Gelfand-Tsetlin.
"""

from .representation import GlnRep, T_matrices, build_rep, export_rep, root_vector_matrix
from .relations import constant_r_matrix, highest_vector_space, verify_gln_relations
from .report import RelationReport

__all__ = [
    "GlnRep",
    "T_matrices",
    "build_rep",
    "export_rep",
    "root_vector_matrix",
    "RelationReport",
    "constant_r_matrix",
    "highest_vector_space",
    "verify_gln_relations",
]
