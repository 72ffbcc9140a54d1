"""
R-matrices, q-permutation et q-antisymmetriseur.

Convention d'indices sur C^n ⊗ C^n: (i, k) -> i·n + k, indices à partir de 0.
Sur la puissance r-ième, (x_1, ..., x_r) -> Σ x_s·n^{r-s}.
"""

from collections import deque
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Sequence, Tuple, Union

from ..arith.rational import QValue
from ..core.exceptions import DimensionError, ValidationError
from ..core.logging_config import get_logger
from ..gln.relations import constant_r_matrix
from ..linalg.laurent_matrix import MatrixL2
from ..linalg.matrix import MatrixR, Scalar

logger = get_logger(__name__)


class RMatrixKind(str, Enum):
    """Familles de R-matrices disponibles."""
    CONSTANT = "constant"
    TRIGONOMETRIC = "trigonometric"
    FUSED = "fused"


class TrigRMatrix:
    """R(u, v) = u·R_u + v·R_v, linéaire en (u, v)."""

    def __init__(self, n: int, q: QValue):
        self.n = n
        self.q = q
        qv, qi = q.value, 1 / q.value
        ru, rv = [], []
        for i in range(n):
            for k in range(n):
                idx = i * n + k
                if i == k:
                    ru.append((idx, idx, qi))
                    rv.append((idx, idx, -qv))
                else:
                    ru.append((idx, idx, 1))
                    rv.append((idx, idx, -1))
                    target = ru if i > k else rv
                    target.append((idx, k * n + i, qi - qv))
        self.r_u = MatrixR.from_triplets(n * n, n * n, ru)
        self.r_v = MatrixR.from_triplets(n * n, n * n, rv)

    def evaluate(self, u: Scalar, v: Scalar) -> MatrixR:
        return self.r_u.scale(u) + self.r_v.scale(v)

    def as_bivariate(self) -> MatrixL2:
        return MatrixL2(self.n * self.n, self.n * self.n, {(1, 0): self.r_u, (0, 1): self.r_v})

    def entry_poly(self, row: int, col: int) -> Dict[Tuple[int, int], Fraction]:
        """Entrée (row, col) comme polynôme {(1,0): coef de u, (0,1): coef de v}."""
        out = {}
        cu, cv = self.r_u.entry(row, col), self.r_v.entry(row, col)
        if cu:
            out[(1, 0)] = cu
        if cv:
            out[(0, 1)] = cv
        return out

    def row_support(self, row: int) -> List[int]:
        return sorted(set(self.r_u.row(row)) | set(self.r_v.row(row)))

    def col_support(self, col: int) -> List[int]:
        return [r for r in range(self.n * self.n) if self.r_u.entry(r, col) or self.r_v.entry(r, col)]


def trigonometric_r_matrix(n: int, q: QValue) -> TrigRMatrix:
    return TrigRMatrix(n, q)


def q_permutation(n: int, q: QValue) -> MatrixR:
    """P = Σ E_ii⊗E_ii + q·Σ_{i>j} E_ij⊗E_ji + q^{-1}·Σ_{i<j} E_ij⊗E_ji."""
    trip = []
    for i in range(n):
        for j in range(n):
            if i == j:
                trip.append((i * n + i, i * n + i, 1))
            else:
                trip.append((i * n + j, j * n + i, q.value if i > j else 1 / q.value))
    return MatrixR.from_triplets(n * n, n * n, trip)


def embed_pair(m: MatrixR, n: int, r: int, s: int, t: int) -> MatrixR:
    """
    Plonge un opérateur de C^n ⊗ C^n dans les copies s < t de (C^n)^{⊗r}
    (positions à partir de 1).
    """
    if m.shape != (n * n, n * n):
        raise DimensionError(f"Opérateur {m.shape} incompatible avec n={n}")
    if not (1 <= s < t <= r):
        raise DimensionError(f"Copies ({s}, {t}) invalides pour r={r}")
    dim = n ** r
    trip = []
    for col_digits in product(range(n), repeat=r):
        col = 0
        for d in col_digits:
            col = col * n + d
        source = col_digits[s - 1] * n + col_digits[t - 1]
        for target in range(n * n):
            # colonne source -> lignes atteintes
            value = m.entry(target, source)
            if not value:
                continue
            digits = list(col_digits)
            digits[s - 1], digits[t - 1] = divmod(target, n)
            row = 0
            for d in digits:
                row = row * n + d
            trip.append((row, col, value))
    return MatrixR.from_triplets(dim, dim, trip)


def _length(perm: Tuple[int, ...]) -> int:
    return sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])


@lru_cache(maxsize=32)
def _permutation_operators(n: int, r: int, q_value: Fraction) -> Tuple[Tuple[Tuple[int, ...], MatrixR], ...]:
    """P_σ pour tout σ ∈ S_r, par mots réduits (parcours en largeur)."""
    q = QValue(q_value)
    dim = n ** r
    simple = [embed_pair(q_permutation(n, q), n, r, i, i + 1) for i in range(1, r)]
    start = tuple(range(r))
    ops: Dict[Tuple[int, ...], MatrixR] = {start: MatrixR.identity(dim)}
    queue = deque([start])
    while queue:
        sigma = queue.popleft()
        length = _length(sigma)
        for i in range(r - 1):
            # σ·s_i: échange des positions i et i+1
            nxt = list(sigma)
            nxt[i], nxt[i + 1] = nxt[i + 1], nxt[i]
            nxt = tuple(nxt)
            if nxt in ops or _length(nxt) != length + 1:
                continue
            ops[nxt] = ops[sigma] @ simple[i]
            queue.append(nxt)
    return tuple(sorted(ops.items()))


def antisymmetrizer(n: int, r: int, q: QValue) -> MatrixR:
    """A_r = Σ_σ sgn(σ)·P_σ sur (C^n)^{⊗r}."""
    if r < 1:
        raise ValidationError(f"Antisymétriseur d'ordre {r} indéfini", field="r")
    dim = n ** r
    total = MatrixR.zeros(dim)
    for sigma, op in _permutation_operators(n, r, q.value):
        total = total + (op if _length(sigma) % 2 == 0 else -op)
    return total


def fused_r_matrix(n: int, q: QValue, params: Sequence[Scalar]) -> MatrixR:
    """
    R(u_1, ..., u_r) = Π_{i<j} R_ij(u_i, u_j), produit dans l'ordre
    lexicographique des paires, aux valeurs numériques données.
    """
    r = len(params)
    if r < 2:
        raise ValidationError("Il faut au moins deux paramètres", field="params")
    trig = TrigRMatrix(n, q)
    total = MatrixR.identity(n ** r)
    for s, t in combinations(range(1, r + 1), 2):
        factor = embed_pair(trig.evaluate(params[s - 1], params[t - 1]), n, r, s, t)
        total = total @ factor
    return total


def antisymmetrizer_scalar(q: QValue, r: int) -> Fraction:
    """Π_{0<=i<j<=r-1} (q^{-2i} − q^{-2j})."""
    out = Fraction(1)
    for i, j in combinations(range(r), 2):
        out *= q.power(-2 * i) - q.power(-2 * j)
    return out


def r_matrix(kind: RMatrixKind, n: int, q: QValue, params: Sequence[Scalar] = ()) -> Union[MatrixR, TrigRMatrix]:
    """
    Sélection d'une R-matrice par famille.

    Args:
        kind: constant, trigonometric ou fused
        n: Rang
        q: Paramètre de déformation
        params: Paramètres spectraux (fused uniquement)
    """
    kind = RMatrixKind(kind)
    if kind is RMatrixKind.CONSTANT:
        return constant_r_matrix(n, q)
    if kind is RMatrixKind.TRIGONOMETRIC:
        return trigonometric_r_matrix(n, q)
    return fused_r_matrix(n, q, params)
