"""
Critère combinatoire d'irréductibilité et réduction des paramètres généraux.
"""

from .sets import (
    ThetaCase,
    Verdict,
    WeightSet,
    a_set,
    bracket,
    check_pairwise,
    check_theorem,
    crossing_witness,
    is_crossing,
    pair_condition,
    theta_case,
    theta_cases,
)
from .general import GeneralParams, GeneralReduction, check_general, multi_factor_check, reduce_general

__all__ = [
    "ThetaCase",
    "Verdict",
    "WeightSet",
    "a_set",
    "bracket",
    "check_pairwise",
    "check_theorem",
    "crossing_witness",
    "is_crossing",
    "pair_condition",
    "theta_case",
    "theta_cases",
    "GeneralParams",
    "GeneralReduction",
    "check_general",
    "multi_factor_check",
    "reduce_general",
]
