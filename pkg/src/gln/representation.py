"""
Module irréductible L(λ) de U_q(gl_n) en base de Gelfand-Tsetlin.

Les matrices des générateurs t_k^{±1}, e_k, f_k sont remplies directement par
les formules d'action sur les vecteurs ξ_Λ; convention: la colonne d'indice s
porte l'image du vecteur de base s.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from ..arith.rational import QValue, format_rational
from ..core.exceptions import InvariantFailure, PatternError
from ..core.logging_config import get_logger
from ..gt.patterns import (
    GTPattern,
    HighestWeight,
    enumerate_patterns,
    l_values,
    pattern_weight,
    shift_pattern,
)
from ..linalg.matrix import MatrixR, q_commutator

logger = get_logger(__name__)


@dataclass
class GlnRep:
    """Matrices de t_k^{±1} (k=1..n), e_k, f_k (k=1..n−1) sur L(λ)."""

    lam: HighestWeight
    q: QValue
    basis: List[GTPattern]
    t: List[MatrixR]
    t_inv: List[MatrixR]
    e: List[MatrixR]
    f: List[MatrixR]
    weights: List[Tuple[int, ...]] = field(default_factory=list)
    _root_cache: Dict[Tuple[int, int], MatrixR] = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.lam.n

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def index(self) -> Dict[GTPattern, int]:
        return {p: i for i, p in enumerate(self.basis)}

    # Accesseurs 1-indexés, comme dans les formules
    def t_k(self, k: int) -> MatrixR:
        return self.t[k - 1]

    def t_k_inv(self, k: int) -> MatrixR:
        return self.t_inv[k - 1]

    def e_k(self, k: int) -> MatrixR:
        return self.e[k - 1]

    def f_k(self, k: int) -> MatrixR:
        return self.f[k - 1]

    def highest_vector(self) -> List[Fraction]:
        """ξ: premier vecteur de la base."""
        v = [Fraction(0)] * self.dim
        v[0] = Fraction(1)
        return v

    @cached_property
    def T(self) -> List[List[MatrixR]]:
        return T_matrices(self)[0]

    @cached_property
    def T_bar(self) -> List[List[MatrixR]]:
        return T_matrices(self)[1]


def _q_product(q: QValue, values) -> Fraction:
    out = Fraction(1)
    for m in values:
        out *= q.q_int(m)
    return out


def _coefficient(q: QValue, numerators, denominators) -> Fraction:
    den = _q_product(q, denominators)
    if den == 0:
        raise InvariantFailure(
            "Dénominateur nul dans les formules de Gelfand-Tsetlin",
            details={"denominators": list(denominators)},
        )
    return _q_product(q, numerators) / den


def build_rep(lam: HighestWeight, q: QValue) -> GlnRep:
    """
    Construit L(λ) en base de Gelfand-Tsetlin.

    Args:
        lam: Plus haut poids dominant
        q: Paramètre de déformation

    Returns:
        GlnRep avec toutes les matrices des générateurs
    """
    n = lam.n
    basis = enumerate_patterns(lam)
    index = {p: i for i, p in enumerate(basis)}
    dim = len(basis)
    weights = [pattern_weight(p) for p in basis]

    t = [MatrixR.diagonal([q.power(w[k]) for w in weights]) for k in range(n)]
    t_inv = [MatrixR.diagonal([q.power(-w[k]) for w in weights]) for k in range(n)]

    e_trip: List[List[Tuple[int, int, Fraction]]] = [[] for _ in range(n - 1)]
    f_trip: List[List[Tuple[int, int, Fraction]]] = [[] for _ in range(n - 1)]
    for s, pattern in enumerate(basis):
        for k in range(1, n):
            lk = l_values(pattern, k)
            lk_up = l_values(pattern, k + 1)
            lk_down = l_values(pattern, k - 1) if k >= 2 else ()
            for j in range(1, k + 1):
                ref = lk[j - 1]
                denominators = [lk[i] - ref for i in range(k) if i != j - 1]

                raised = shift_pattern(pattern, k, j, +1)
                if raised is not None:
                    c = -_coefficient(q, [x - ref for x in lk_up], denominators)
                    if c:
                        e_trip[k - 1].append((index[raised], s, c))

                lowered = shift_pattern(pattern, k, j, -1)
                if lowered is not None:
                    c = _coefficient(q, [x - ref for x in lk_down], denominators)
                    if c:
                        f_trip[k - 1].append((index[lowered], s, c))

    e = [MatrixR.from_triplets(dim, dim, trip) for trip in e_trip]
    f = [MatrixR.from_triplets(dim, dim, trip) for trip in f_trip]
    logger.debug(f"L({lam}) construit: dimension {dim}, q={q}")
    return GlnRep(lam=lam, q=q, basis=basis, t=t, t_inv=t_inv, e=e, f=f, weights=weights)


def root_vector_matrix(rep: GlnRep, i: int, j: int, middle: Optional[int] = None) -> MatrixR:
    """
    Vecteur de racine e_ij par la récurrence des q-commutateurs.

    e_{i,i+1} = e_i, e_{i+1,i} = f_i, e_ij = [e_ik, e_kj]_q si i<k<j et
    [e_ik, e_kj]_{q^{-1}} si i>k>j. Sans ``middle``, k = i+1 (resp. i−1).

    Raises:
        PatternError: Si i = j ou si middle n'est pas strictement entre i et j
    """
    n = rep.n
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise PatternError(f"Vecteur de racine e_{i}{j} indéfini pour n={n}")
    if j == i + 1:
        return rep.e_k(i)
    if i == j + 1:
        return rep.f_k(j)
    if middle is None:
        key = (i, j)
        cached = rep._root_cache.get(key)
        if cached is not None:
            return cached
        middle = i + 1 if i < j else i - 1
    else:
        key = None
    if not (min(i, j) < middle < max(i, j)):
        raise PatternError(f"Indice intermédiaire {middle} hors de ]{i}, {j}[")
    zeta = rep.q.value if i < j else 1 / rep.q.value
    out = q_commutator(root_vector_matrix(rep, i, middle), root_vector_matrix(rep, middle, j), zeta)
    if key is not None:
        rep._root_cache[key] = out
    return out


def T_matrices(rep: GlnRep) -> Tuple[List[List[MatrixR]], List[List[MatrixR]]]:
    """
    Matrices t_ij et t̄_ij (indices de grille à partir de 0).

    t_ii = t_i, t̄_ii = t_i^{-1}; t_ij = (q − q^{-1}) t_j e_ij pour i > j;
    t̄_ij = −(q − q^{-1}) e_ij t_i^{-1} pour i < j; les autres sont nuls.
    """
    n, dim = rep.n, rep.dim
    c = rep.q.q_minus_inv
    zero = MatrixR.zeros(dim)
    T = [[zero] * n for _ in range(n)]
    T_bar = [[zero] * n for _ in range(n)]
    for i in range(1, n + 1):
        T[i - 1][i - 1] = rep.t_k(i)
        T_bar[i - 1][i - 1] = rep.t_k_inv(i)
        for j in range(1, n + 1):
            if i > j:
                T[i - 1][j - 1] = (rep.t_k(j) @ root_vector_matrix(rep, i, j)).scale(c)
            elif i < j:
                T_bar[i - 1][j - 1] = (root_vector_matrix(rep, i, j) @ rep.t_k_inv(i)).scale(-c)
    return T, T_bar


def export_rep(rep: GlnRep) -> dict:
    """Sérialisation JSON: λ, q, motifs et matrices en triplets."""
    return {
        "lambda": list(rep.lam.entries),
        "q": format_rational(rep.q.value),
        "dimension": rep.dim,
        "basis": [p.to_json() for p in rep.basis],
        "t": [m.to_json() for m in rep.t],
        "t_inv": [m.to_json() for m in rep.t_inv],
        "e": [m.to_json() for m in rep.e],
        "f": [m.to_json() for m in rep.f],
    }
