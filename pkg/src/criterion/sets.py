"""
Critère combinatoire d'irréductibilité de L(λ) ⊗ L(μ).

Ensembles A_λ = {l_i = λ_i − i + 1}, test de croisement, forme par paires
avec les ensembles ⟨x_j, x_i⟩, et détection des configurations réductibles
pour lesquelles un vecteur singulier θ est construit explicitement.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..core.config import settings
from ..core.exceptions import InvariantFailure, PatternError
from ..core.logging_config import get_logger
from ..gt.patterns import HighestWeight

logger = get_logger(__name__)


class Verdict(str, Enum):
    """Verdict d'irréductibilité."""
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"

    @classmethod
    def from_bool(cls, irreducible: bool) -> "Verdict":
        return cls.IRREDUCIBLE if irreducible else cls.REDUCIBLE


@dataclass(frozen=True)
class WeightSet:
    """Ensemble fini d'entiers (A_λ ou différence de deux A-ensembles)."""

    elements: FrozenSet[int]

    @classmethod
    def of(cls, values: Iterable[int]) -> "WeightSet":
        return cls(frozenset(int(x) for x in values))

    def __sub__(self, other: "WeightSet") -> "WeightSet":
        return WeightSet(self.elements - other.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def sorted(self) -> List[int]:
        return sorted(self.elements)


def a_set(lam: HighestWeight) -> WeightSet:
    """A_λ = {l_1, ..., l_n}."""
    return WeightSet.of(lam.l_values())


def _witness(a: WeightSet, b: WeightSet) -> Optional[Tuple[int, int, int, int]]:
    """Premier quadruplet a1 < b1 < a2 < b2 trouvé, ou None."""
    sa, sb = a.sorted(), b.sorted()
    for a1, a2 in combinations(sa, 2):
        inside = [x for x in sb if a1 < x < a2]
        if not inside:
            continue
        outside = [x for x in sb if x > a2]
        if outside:
            return a1, inside[0], a2, outside[0]
    return None


def is_crossing(a: WeightSet, b: WeightSet) -> bool:
    """Vrai s'il existe a1 < b1 < a2 < b2 ou b1 < a1 < b2 < a2."""
    return _witness(a, b) is not None or _witness(b, a) is not None


def crossing_witness(lam: HighestWeight, mu: HighestWeight) -> Optional[Tuple[int, int, int, int]]:
    """Les quatre entiers (triés) réalisant un croisement des différences, ou None."""
    a, b = a_set(lam), a_set(mu)
    d1, d2 = a - b, b - a
    found = _witness(d1, d2) or _witness(d2, d1)
    return tuple(sorted(found)) if found else None


def _check_same_rank(lam: HighestWeight, mu: HighestWeight) -> None:
    if lam.n != mu.n:
        raise PatternError(f"Rangs différents: {lam.n} et {mu.n}")


def check_theorem(lam: HighestWeight, mu: HighestWeight) -> Verdict:
    """
    Irréductible si et seulement si A_λ∖A_μ et A_μ∖A_λ ne se croisent pas.

    En mode debug, le verdict est recoupé avec la forme par paires.
    """
    _check_same_rank(lam, mu)
    a, b = a_set(lam), a_set(mu)
    verdict = Verdict.from_bool(not is_crossing(a - b, b - a))
    if settings.debug:
        other = check_pairwise(lam, mu)
        if other != verdict:
            raise InvariantFailure(
                "Désaccord entre le critère des ensembles et le critère par paires",
                details={"lambda": list(lam), "mu": list(mu), "theorem": verdict.value, "pairwise": other.value},
            )
    logger.debug(f"λ=({lam}) μ=({mu}): {verdict.value}")
    return verdict


def bracket(values: Sequence[int], i: int, j: int) -> FrozenSet[int]:
    """
    ⟨x_j, x_i⟩ = {x_j, x_j + 1, ..., x_i} ∖ {x_j, x_{j−1}, ..., x_i} pour i < j
    (indices à partir de 1).
    """
    lo, hi = values[j - 1], values[i - 1]
    removed = {values[k - 1] for k in range(i, j + 1)}
    return frozenset(x for x in range(lo, hi + 1) if x not in removed)


def pair_condition(l: Sequence[int], m: Sequence[int], i: int, j: int) -> bool:
    """Condition de la paire (i, j): m_j, m_i ∉ ⟨l_j, l_i⟩ ou l_j, l_i ∉ ⟨m_j, m_i⟩."""
    bl, bm = bracket(l, i, j), bracket(m, i, j)
    first = m[j - 1] not in bl and m[i - 1] not in bl
    second = l[j - 1] not in bm and l[i - 1] not in bm
    return first or second


def check_pairwise(lam: HighestWeight, mu: HighestWeight) -> Verdict:
    """Irréductible si la condition de paire vaut pour tout 1 <= i < j <= n."""
    _check_same_rank(lam, mu)
    l, m = lam.l_values(), mu.l_values()
    ok = all(pair_condition(l, m, i, j) for i, j in combinations(range(1, lam.n + 1), 2))
    return Verdict.from_bool(ok)


@dataclass(frozen=True)
class ThetaCase:
    """
    Configuration réductible normalisée: L(lam) ⊗ L(mu) avec la seule paire
    (1, n) en défaut, m_n ∈ ⟨l_{p+1}, l_p⟩ et l_1 ∈ ⟨m_{n−p+1}, m_{n−p}⟩.
    """

    lam: HighestWeight
    mu: HighestWeight
    p: int
    ks: Tuple[int, ...]
    swapped: bool = False

    @property
    def n(self) -> int:
        return self.lam.n

    def factors(self) -> List[Tuple[int, int, int, int]]:
        """(r, a, λ_a, k_a) pour chaque facteur 𝒯_{n−p+a, a}(q^{−λ_a}, k_a)."""
        n, p = self.n, self.p
        return [(n - p + a, a, self.lam[a - 1], self.ks[a - 1]) for a in range(1, p + 1)]

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam.entries),
            "mu": list(self.mu.entries),
            "p": self.p,
            "k": list(self.ks),
            "swapped": self.swapped,
        }


def theta_case(lam: HighestWeight, mu: HighestWeight) -> Optional[ThetaCase]:
    """
    Données de construction de θ pour L(λ) ⊗ L(μ) dans cet ordre, ou None si
    la paire ne relève pas de la construction.
    """
    _check_same_rank(lam, mu)
    n = lam.n
    if n < 2:
        return None
    l, m = lam.l_values(), mu.l_values()
    others = [(i, j) for i, j in combinations(range(1, n + 1), 2) if (i, j) != (1, n)]
    if not all(pair_condition(l, m, i, j) for i, j in others):
        return None
    if m[n - 1] not in bracket(l, 1, n) or l[0] not in bracket(m, 1, n):
        return None
    for p in range(1, n):
        if m[n - 1] in bracket(l, p, p + 1) and l[0] in bracket(m, n - p, n - p + 1):
            ks = tuple(l[i - 1] - m[n - p + i - 1] for i in range(1, p + 1))
            if all(k > 0 for k in ks):
                return ThetaCase(lam=lam, mu=mu, p=p, ks=ks)
    return None


def theta_cases(lam: HighestWeight, mu: HighestWeight) -> List[ThetaCase]:
    """Configurations applicables dans les deux ordres; toutes sont renvoyées."""
    out = []
    direct = theta_case(lam, mu)
    if direct is not None:
        out.append(direct)
    swapped = theta_case(mu, lam)
    if swapped is not None:
        out.append(ThetaCase(lam=swapped.lam, mu=swapped.mu, p=swapped.p, ks=swapped.ks, swapped=True))
    return out
