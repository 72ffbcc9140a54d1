"""
Combinatoire des motifs de Gelfand-Tsetlin.
"""

from .patterns import (
    GTPattern,
    HighestWeight,
    dominant_weights,
    enumerate_patterns,
    highest_pattern,
    l_values,
    pattern_weight,
    shift_pattern,
    weyl_dimension,
)

__all__ = [
    "GTPattern",
    "HighestWeight",
    "dominant_weights",
    "enumerate_patterns",
    "highest_pattern",
    "l_values",
    "pattern_weight",
    "shift_pattern",
    "weyl_dimension",
]
