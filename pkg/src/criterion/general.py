"""
Réduction des paramètres généraux (h, ε, λ, a) au cas a = a' = 1, et
extension à k facteurs par la propriété binaire.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Tuple

from ..arith.rational import QValue, format_rational, q_power_exponent
from ..core.exceptions import ValidationError
from ..core.logging_config import get_logger
from ..gt.patterns import HighestWeight
from .sets import Verdict, check_theorem, crossing_witness

logger = get_logger(__name__)


@dataclass(frozen=True)
class GeneralParams:
    """Plus haut poids α_i = h·ε_i·q^{λ_i} et paramètre d'évaluation a."""

    lam: HighestWeight
    h: Fraction = Fraction(1)
    eps: Tuple[int, ...] = ()
    a: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "h", Fraction(self.h))
        object.__setattr__(self, "a", Fraction(self.a))
        eps = tuple(int(x) for x in self.eps) or tuple([1] * self.lam.n)
        object.__setattr__(self, "eps", eps)
        if self.h == 0:
            raise ValidationError("h doit être non nul", field="h")
        if self.a == 0:
            raise ValidationError("a doit être non nul", field="a")
        if len(eps) != self.lam.n or any(x not in (1, -1) for x in eps):
            raise ValidationError(f"ε doit être un {self.lam.n}-uplet de ±1", field="eps")

    @property
    def b(self) -> Fraction:
        """Paramètre normalisé b = a·h^{-2}."""
        return self.a / (self.h * self.h)

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam.entries),
            "h": format_rational(self.h),
            "eps": list(self.eps),
            "a": format_rational(self.a),
        }


@dataclass
class GeneralReduction:
    """Résultat de la réduction: verdict immédiat ou paire normalisée."""

    ratio: Fraction
    k: Optional[int] = None
    pair: Optional[Tuple[HighestWeight, HighestWeight]] = None
    verdict: Optional[Verdict] = None
    reason: Optional[str] = None

    @property
    def is_decided(self) -> bool:
        return self.pair is None

    def to_dict(self) -> dict:
        out = {"ratio": format_rational(self.ratio), "k": self.k}
        if self.pair is not None:
            out["normalized"] = {"lambda": list(self.pair[0].entries), "mu": list(self.pair[1].entries)}
        if self.verdict is not None:
            out["verdict"] = self.verdict.value
        if self.reason:
            out["reason"] = self.reason
        return out


def reduce_general(p: GeneralParams, p2: GeneralParams, q: QValue) -> GeneralReduction:
    """
    Ramène L(h, ε, λ; a) ⊗ L(h', ε', λ'; a') à L_1(λ) ⊗ L_1(μ̃).

    Avec b = a·h^{-2} et b' = a'·h'^{-2}: si b/b' ∉ q^{2Z} le module est
    irréductible; sinon b'/b = q^{2k} et la paire est (λ, λ' − k·I).
    """
    if p.lam.n != p2.lam.n:
        raise ValidationError("Les deux facteurs doivent avoir le même rang", field="lambda")
    ratio = p.b / p2.b
    k = q_power_exponent(1 / ratio, q.value ** 2)
    if k is None:
        logger.debug(f"b/b'={format_rational(ratio)} hors de q^(2Z): irréductible")
        return GeneralReduction(ratio=ratio, verdict=Verdict.IRREDUCIBLE, reason="ratio not in q^{2Z}")
    return GeneralReduction(ratio=ratio, k=k, pair=(p.lam, p2.lam.shifted(-k)))


def check_general(p: GeneralParams, p2: GeneralParams, q: QValue) -> Tuple[Verdict, GeneralReduction, Optional[Tuple[int, ...]]]:
    """Verdict complet pour deux facteurs: réduction puis critère des ensembles."""
    reduction = reduce_general(p, p2, q)
    if reduction.is_decided:
        return reduction.verdict, reduction, None
    lam, mu = reduction.pair
    verdict = check_theorem(lam, mu)
    reduction.verdict = verdict
    witness = crossing_witness(lam, mu) if verdict is Verdict.REDUCIBLE else None
    return verdict, reduction, witness


def multi_factor_check(params: Sequence[GeneralParams], q: QValue) -> Verdict:
    """Irréductible si chaque paire (i, j), i < j, l'est."""
    if not params:
        raise ValidationError("Au moins un facteur est requis", field="params")
    for i, j in combinations(range(len(params)), 2):
        verdict, _, _ = check_general(params[i], params[j], q)
        if verdict is Verdict.REDUCIBLE:
            logger.debug(f"Paire ({i + 1}, {j + 1}) réductible")
            return Verdict.REDUCIBLE
    return Verdict.IRREDUCIBLE
