"""
Vecteur singulier θ des configurations réductibles.

θ = 𝒯_{n−p+1,1}(q^{−λ_1}, k_1)·𝒯'_{n−p+2,2}(q^{−λ_2}, k_2)⋯𝒯'_{n,p}(q^{−λ_p}, k_p)·(ξ ⊗ ξ'),
les facteurs étant construits dans la normalisation ``tensor`` et les
facteurs primés dérivés en u.
"""

from typing import List

from ..core.exceptions import CaseDataError
from ..core.logging_config import get_logger
from ..criterion.sets import ThetaCase, theta_case
from ..linalg.matrix import Vector
from .lowering import LoweringVariant, apply_tau_product, lowering_tau
from .modules import TensorModule

logger = get_logger(__name__)


def _check_case(tm: TensorModule, case: ThetaCase) -> None:
    if len(tm.factors) != 2:
        raise CaseDataError("not a reducible configuration: θ is defined on two factors")
    left, right = tm.factors
    if left.a != 1 or right.a != 1:
        raise CaseDataError("not a reducible configuration: evaluation parameters must be 1")
    if left.lam != case.lam or right.lam != case.mu:
        raise CaseDataError(
            "not a reducible configuration: case data does not match the module",
            details={"module": [list(left.lam), list(right.lam)], "case": case.to_dict()},
        )
    expected = theta_case(case.lam, case.mu)
    if expected is None or (expected.p, expected.ks) != (case.p, case.ks):
        raise CaseDataError("not a reducible configuration", details={"case": case.to_dict()})


def theta_vector(tm: TensorModule, case: ThetaCase) -> Vector:
    """
    Construit θ sur L(λ) ⊗ L(μ).

    Args:
        tm: Produit tensoriel L_1(case.lam) ⊗ L_1(case.mu)
        case: Données normalisées (voir ``criterion.theta_case``)

    Returns:
        Le vecteur θ dans la base produit

    Raises:
        CaseDataError: Si la configuration ne satisfait pas les hypothèses
    """
    _check_case(tm, case)
    q = tm.q
    v = tm.top_vector()
    factors = case.factors()
    # le facteur le plus à droite s'applique en premier
    for position in range(len(factors) - 1, -1, -1):
        r, a, lam_a, k = factors[position]
        tau = lowering_tau(tm, r, a, LoweringVariant.TENSOR)
        v = apply_tau_product(tm, tau, q.power(-lam_a), k, v, derivative=position > 0)
    logger.debug(f"θ construit pour {case.to_dict()}")
    return v


def leading_component(tm: TensorModule, theta: Vector) -> Vector:
    """Coordonnées de θ sur les vecteurs (·) ⊗ ξ'."""
    right_dim = tm.right.dim
    return [theta[x * right_dim] for x in range(tm.left.dim)]


def expected_leading_vector(tm: TensorModule, case: ThetaCase) -> Vector:
    """ξ_Λ = 𝒯_{n−p+1,1}(q^{−λ_1}, k_1)⋯𝒯_{n,p}(q^{−λ_p}, k_p)·ξ dans L(λ)."""
    left = tm.left
    q = tm.q
    v = left.top_vector()
    factors: List = case.factors()
    for r, a, lam_a, k in reversed(factors):
        tau = lowering_tau(left, r, a, LoweringVariant.EVAL)
        v = apply_tau_product(left, tau, q.power(-lam_a), k, v)
    return v
