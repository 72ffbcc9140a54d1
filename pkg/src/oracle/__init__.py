"""
Oracle d'irréductibilité: cyclicité, espace singulier et contrôle de Burnside.
"""

from .oracle import (
    OracleVerdict,
    burnside_algebra_dim,
    burnside_check,
    is_cyclic_from_top,
    oracle_irreducible,
    singular_contains,
    singular_space,
)

__all__ = [
    "OracleVerdict",
    "burnside_algebra_dim",
    "burnside_check",
    "is_cyclic_from_top",
    "oracle_irreducible",
    "singular_contains",
    "singular_space",
]
