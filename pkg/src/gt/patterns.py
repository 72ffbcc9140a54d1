"""
Motifs de Gelfand-Tsetlin: énumération, poids, décalages et coordonnées l.

Un motif Λ est stocké ligne du haut en premier: rows[0] = Λ_n = λ, ...,
rows[n-1] = Λ_1. Les indices k (ligne) et i (position) suivent la
convention mathématique et commencent à 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, List, Optional, Tuple

from ..core.exceptions import PatternError
from ..core.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class HighestWeight:
    """Plus haut poids λ = (λ_1 >= ... >= λ_n) de gl_n."""

    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise PatternError("Un plus haut poids doit avoir au moins une composante")
        for i in range(len(entries) - 1):
            if entries[i] < entries[i + 1]:
                raise PatternError(
                    f"Plus haut poids non dominant: {list(entries)}",
                    details={"position": i + 1},
                )

    @property
    def n(self) -> int:
        return len(self.entries)

    def shifted(self, t: int) -> "HighestWeight":
        """λ + t·(1, ..., 1)."""
        return HighestWeight(tuple(x + t for x in self.entries))

    def l_values(self) -> Tuple[int, ...]:
        """l_i = λ_i − i + 1."""
        return tuple(x - i for i, x in enumerate(self.entries))

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.entries)


@dataclass(frozen=True)
class GTPattern:
    """Motif de Gelfand-Tsetlin, ligne du haut en premier."""

    rows: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def row(self, k: int) -> Tuple[int, ...]:
        """Ligne Λ_k = (λ_k1, ..., λ_kk), 1 <= k <= n."""
        return self.rows[self.n - k]

    def entry(self, k: int, i: int) -> int:
        """λ_ki."""
        return self.row(k)[i - 1]

    def is_valid(self) -> bool:
        for idx, r in enumerate(self.rows):
            if len(r) != self.n - idx:
                return False
        for k in range(1, self.n):
            upper, lower = self.row(k + 1), self.row(k)
            for i in range(k):
                if not (upper[i + 1] <= lower[i] <= upper[i]):
                    return False
        return True

    def to_json(self) -> List[List[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return " / ".join(",".join(str(x) for x in r) for r in self.rows)


def highest_pattern(lam: HighestWeight) -> GTPattern:
    """Motif dont chaque ligne est maximale: Λ_k = (λ_1, ..., λ_k)."""
    n = lam.n
    return GTPattern(tuple(tuple(lam.entries[:n - idx]) for idx in range(n)))


def _below(upper: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Lignes interlacées sous upper, ordre lexicographique décroissant."""
    ranges = [range(upper[i], upper[i + 1] - 1, -1) for i in range(len(upper) - 1)]
    return product(*ranges)


@lru_cache(maxsize=256)
def _enumerate(top: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    if len(top) <= 1:
        return ((top,),)
    out = []
    for row in _below(top):
        for tail in _enumerate(row):
            out.append((top,) + tail)
    return tuple(out)


def enumerate_patterns(lam: HighestWeight) -> List[GTPattern]:
    """
    Tous les motifs de ligne supérieure λ, chacun une fois.

    Ordre: lexicographique décroissant sur la concaténation des lignes
    n−1, ..., 1; le motif le plus haut vient en premier.

    Args:
        lam: Plus haut poids

    Returns:
        Liste ordonnée des motifs
    """
    patterns = [GTPattern(rows) for rows in _enumerate(lam.entries)]
    logger.debug(f"{len(patterns)} motifs pour λ=({lam})")
    return patterns


def pattern_weight(pattern: GTPattern) -> Tuple[int, ...]:
    """w_k = Σ_i λ_ki − Σ_i λ_{k−1,i}: t_k agit par q^{w_k}."""
    sums = [0] + [sum(pattern.row(k)) for k in range(1, pattern.n + 1)]
    return tuple(sums[k] - sums[k - 1] for k in range(1, pattern.n + 1))


def shift_pattern(pattern: GTPattern, k: int, j: int, sign: int) -> Optional[GTPattern]:
    """
    Λ ± δ_kj, ou None si la betweenness n'est plus satisfaite.

    Raises:
        PatternError: Si les indices sortent de 1 <= j <= k <= n−1
    """
    n = pattern.n
    if not (1 <= j <= k <= n - 1) or sign not in (1, -1):
        raise PatternError(
            f"Décalage invalide (k={k}, j={j}, signe={sign}) pour n={n}",
            details={"k": k, "j": j, "sign": sign, "n": n},
        )
    idx = n - k
    row = list(pattern.rows[idx])
    row[j - 1] += sign
    rows = list(pattern.rows)
    rows[idx] = tuple(row)
    shifted = GTPattern(tuple(rows))
    return shifted if shifted.is_valid() else None


def l_values(pattern: GTPattern, k: int) -> Tuple[int, ...]:
    """(l_k1, ..., l_kk) avec l_ki = λ_ki − i + 1."""
    if not (1 <= k <= pattern.n):
        raise PatternError(f"Ligne {k} hors de 1..{pattern.n}")
    return tuple(x - i for i, x in enumerate(pattern.row(k)))


def weyl_dimension(lam: HighestWeight) -> int:
    """Formule de Weyl ∏_{i<j} (λ_i − λ_j + j − i)/(j − i)."""
    value = Fraction(1)
    for i, j in combinations(range(lam.n), 2):
        value *= Fraction(lam[i] - lam[j] + j - i, j - i)
    return int(value)


def dominant_weights(n: int, low: int, high: int, max_width: Optional[int] = None) -> List[HighestWeight]:
    """Plus hauts poids à entrées dans [low, high], ordre lexicographique décroissant."""
    out = []

    def rec(prefix: List[int], bound: int) -> None:
        if len(prefix) == n:
            if max_width is None or prefix[0] - prefix[-1] <= max_width:
                out.append(HighestWeight(tuple(prefix)))
            return
        for x in range(bound, low - 1, -1):
            rec(prefix + [x], x)

    rec([], high)
    return out
