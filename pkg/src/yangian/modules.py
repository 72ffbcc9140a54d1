"""
Modules d'évaluation et produits tensoriels sur la q-Yangienne.

Les opérateurs t_ij(u) sont des MatrixL en u (support dans {0, −1, ..., −k}
pour k facteurs). Les t_ij(u) sont calculés à la construction; les modules sont
ensuite traités comme immuables, seul `operator_cache` se remplit à la demande.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from ..arith.laurent import LaurentPoly
from ..arith.rational import QValue, format_rational
from ..core.exceptions import ArithmeticDomainError, DimensionError
from ..core.logging_config import get_logger
from ..gln.representation import GlnRep
from ..linalg.laurent_matrix import MatrixL
from ..linalg.matrix import MatrixR, Vector, unit_vector

logger = get_logger(__name__)

OperatorPoly = MatrixL
Weight = Tuple[int, ...]


class YangianModule(ABC):
    """Interface commune des modules sur lesquels agissent les t_ij(u)."""

    q: QValue
    n: int

    @property
    @abstractmethod
    def dim(self) -> int:
        pass

    @property
    @abstractmethod
    def degree(self) -> int:
        """Plus grand r tel que t_ij^{(r)} puisse être non nul."""
        pass

    @abstractmethod
    def t(self, i: int, j: int) -> OperatorPoly:
        """Opérateur t_ij(u), indices à partir de 1."""
        pass

    @abstractmethod
    def t_bar(self, i: int, j: int) -> OperatorPoly:
        """Opérateur t̄_ij(u) (série en u), pour les contrôles de restriction."""
        pass

    @property
    @abstractmethod
    def weights(self) -> List[Weight]:
        """Poids gl_n de chaque vecteur de base."""
        pass

    def coefficient(self, i: int, j: int, r: int) -> MatrixR:
        """t_ij^{(r)}: coefficient de u^{-r}."""
        return self.t(i, j).coefficient(-r)

    @cached_property
    def operator_cache(self) -> Dict[tuple, OperatorPoly]:
        """Opérateurs dérivés (τ_ra...) mémorisés avec le module, libérés avec lui."""
        return {}

    def top_vector(self) -> Vector:
        return unit_vector(self.dim, 0)

    def action_matrices(self, r_min: int = 0) -> List[Tuple[int, int, int, MatrixR]]:
        """Matrices t_ij^{(r)} non nulles, r_min <= r <= degré."""
        out = []
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                for r in range(r_min, self.degree + 1):
                    m = self.coefficient(i, j, r)
                    if not m.is_zero():
                        out.append((i, j, r, m))
        return out

    def raising_matrices(self) -> List[Tuple[int, int, int, MatrixR]]:
        """t_ij^{(r)} pour i < j et r >= 1 (r = 0 est nul pour i < j)."""
        return [(i, j, r, m) for i, j, r, m in self.action_matrices(r_min=1) if i < j]

    def export(self) -> dict:
        """Opérateurs t_ij(u) au format exposant -> triplets."""
        return {
            "dimension": self.dim,
            "q": format_rational(self.q.value),
            "operators": {
                f"{i},{j}": self.t(i, j).to_coefficient_json()
                for i in range(1, self.n + 1)
                for j in range(1, self.n + 1)
            },
        }


class EvalModule(YangianModule):
    """Module d'évaluation L_a(λ): t_ij(u) = t_ij − a·t̄_ij·u^{-1}."""

    def __init__(self, rep: GlnRep, a: Fraction = Fraction(1)):
        a = Fraction(a)
        if a == 0:
            raise ArithmeticDomainError("Paramètre d'évaluation nul")
        self.rep = rep
        self.a = a
        self.q = rep.q
        self.n = rep.n
        T, T_bar = rep.T, rep.T_bar
        self._t: Dict[Tuple[int, int], MatrixL] = {}
        self._t_bar: Dict[Tuple[int, int], MatrixL] = {}
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                self._t[(i, j)] = MatrixL(rep.dim, rep.dim, {
                    0: T[i - 1][j - 1],
                    -1: T_bar[i - 1][j - 1].scale(-a),
                })
                self._t_bar[(i, j)] = MatrixL(rep.dim, rep.dim, {
                    0: T_bar[i - 1][j - 1],
                    1: T[i - 1][j - 1].scale(-1 / a),
                })

    @property
    def dim(self) -> int:
        return self.rep.dim

    @property
    def degree(self) -> int:
        return 1

    @property
    def lam(self):
        return self.rep.lam

    def t(self, i: int, j: int) -> OperatorPoly:
        return self._t[(i, j)]

    def t_bar(self, i: int, j: int) -> OperatorPoly:
        return self._t_bar[(i, j)]

    @property
    def weights(self) -> List[Weight]:
        return self.rep.weights

    def highest_weight(self) -> List[LaurentPoly]:
        """(q^{λ_i} − a·q^{−λ_i}·u^{-1})_i."""
        return [
            LaurentPoly({0: self.q.power(x), -1: -self.a * self.q.power(-x)})
            for x in self.lam.entries
        ]

    def __repr__(self) -> str:
        return f"EvalModule(λ=({self.lam}), a={format_rational(self.a)}, dim={self.dim})"


class TensorModule(YangianModule):
    """
    Produit tensoriel L_{a1}(λ^1) ⊗ ... ⊗ L_{ak}(λ^k) par le coproduit
    itéré: t_ij(u) = Σ t_{i c1}(u) ⊗ t_{c1 c2}(u) ⊗ ... ⊗ t_{c_{k-1} j}(u).

    L'indice de base (x_1, ..., x_k) est l'ordre lexicographique, cohérent
    avec le produit de Kronecker; le vecteur ξ ⊗ ... ⊗ ξ' est d'indice 0.
    """

    def __init__(self, factors: Sequence[EvalModule]):
        if len(factors) < 2:
            raise DimensionError("Un produit tensoriel demande au moins deux facteurs")
        n = factors[0].n
        if any(f.n != n for f in factors):
            raise DimensionError("Facteurs de rangs différents")
        q = factors[0].q
        if any(f.q != q for f in factors):
            raise DimensionError("Facteurs construits avec des q différents")
        self.factors: List[EvalModule] = list(factors)
        self.q = q
        self.n = n
        self._t = self._coproduct(lambda f, i, j: f.t(i, j))
        self._t_bar = self._coproduct(lambda f, i, j: f.t_bar(i, j))
        logger.debug(f"Produit tensoriel de dimension {self.dim} ({len(self.factors)} facteurs)")

    def _coproduct(self, entry) -> Dict[Tuple[int, int], MatrixL]:
        n = self.n
        current = {(i, j): entry(self.factors[0], i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
        for factor in self.factors[1:]:
            nxt = {}
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    total = None
                    for c in range(1, n + 1):
                        term = current[(i, c)].kron(entry(factor, c, j))
                        total = term if total is None else total + term
                    nxt[(i, j)] = total
            current = nxt
        return current

    @property
    def left(self) -> EvalModule:
        return self.factors[0]

    @property
    def right(self) -> EvalModule:
        return self.factors[-1]

    @cached_property
    def _dim(self) -> int:
        d = 1
        for f in self.factors:
            d *= f.dim
        return d

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def degree(self) -> int:
        return len(self.factors)

    def t(self, i: int, j: int) -> OperatorPoly:
        return self._t[(i, j)]

    def t_bar(self, i: int, j: int) -> OperatorPoly:
        return self._t_bar[(i, j)]

    @cached_property
    def weights(self) -> List[Weight]:
        out: List[Weight] = [tuple([0] * self.n)]
        for f in self.factors:
            out = [tuple(a + b for a, b in zip(w1, w2)) for w1 in out for w2 in f.weights]
        return out

    def split(self) -> Tuple[EvalModule, YangianModule]:
        """(premier facteur, produit des suivants)."""
        rest = self.factors[1:]
        return self.factors[0], rest[0] if len(rest) == 1 else TensorModule(rest)

    def __repr__(self) -> str:
        return f"TensorModule({', '.join(repr(f) for f in self.factors)})"


def eval_tij(module: EvalModule, i: int, j: int) -> OperatorPoly:
    """t_ij(u) sur L_a(λ)."""
    return module.t(i, j)


def tensor_tij(module: TensorModule, i: int, j: int) -> OperatorPoly:
    """t_ij(u) sur le produit tensoriel, par le coproduit."""
    return module.t(i, j)


def tensor_highest_weight(module: YangianModule) -> List[LaurentPoly]:
    """
    Séries ν_i(u) du vecteur ξ ⊗ ... ⊗ ξ': produit des plus hauts poids des facteurs.
    """
    factors = module.factors if isinstance(module, TensorModule) else [module]
    out = [LaurentPoly.one() for _ in range(module.n)]
    for f in factors:
        out = [acc * nu for acc, nu in zip(out, f.highest_weight())]
    return out
