"""
Arithmétique exacte: rationnels, q et polynômes de Laurent.
"""

from .rational import (
    QValue,
    format_rational,
    parse_rational,
    q_int,
    q_power,
    q_power_exponent,
)
from .laurent import LaurentAction, LaurentPoly, laurent_calc

__all__ = [
    "QValue",
    "format_rational",
    "parse_rational",
    "q_int",
    "q_power",
    "q_power_exponent",
    "LaurentAction",
    "LaurentPoly",
    "laurent_calc",
]
