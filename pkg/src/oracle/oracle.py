"""
Oracle d'irréductibilité par algèbre linéaire exacte.

Un produit tensoriel est déclaré irréductible si ξ ⊗ ξ' est cyclique et si
l'espace singulier est de dimension 1. Le contrôle de Burnside calcule
l'algèbre engendrée par l'action et la compare à End(V).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from ..core.config import settings
from ..core.exceptions import GuardError, InvariantFailure
from ..core.logging_config import get_logger
from ..linalg.matrix import MatrixR, Vector
from ..linalg.reduction import invariant_span, joint_kernel, rank_of_vectors, restrict_columns
from ..yangian.modules import YangianModule

logger = get_logger(__name__)


@dataclass
class OracleVerdict:
    """Résultat de l'oracle sur un produit tensoriel."""

    cyclic_from_top: bool
    singular_dim: int
    irreducible: bool
    burnside_algebra_dim: Optional[int] = None

    def to_dict(self) -> dict:
        out = {
            "cyclic_from_top": self.cyclic_from_top,
            "singular_dim": self.singular_dim,
            "irreducible": self.irreducible,
        }
        if self.burnside_algebra_dim is not None:
            out["burnside_algebra_dim"] = self.burnside_algebra_dim
        return out


def _weight_blocks(module: YangianModule) -> Dict[Tuple[int, ...], List[int]]:
    blocks: Dict[Tuple[int, ...], List[int]] = {}
    for index, weight in enumerate(module.weights):
        blocks.setdefault(weight, []).append(index)
    return blocks


def _raising(module: YangianModule) -> List[MatrixR]:
    return [m for _, _, _, m in module.raising_matrices()]


def singular_space(module: YangianModule, blocked: bool = True) -> List[Vector]:
    """
    Base des vecteurs annulés par tous les t_ij^{(r)}, i < j, r >= 1.

    Args:
        module: Produit tensoriel (ou module d'évaluation)
        blocked: Calcul par bloc de poids (les matrices t_ii^{(0)} sont
            diagonales en base produit)

    Returns:
        Base exacte de l'espace singulier
    """
    raising = _raising(module)
    dim = module.dim
    if not blocked:
        basis = joint_kernel(raising, dim)
    else:
        basis = []
        for _, columns in sorted(_weight_blocks(module).items()):
            restricted = [restrict_columns(m, columns) for m in raising]
            for v in joint_kernel(restricted, len(columns)):
                full = [Fraction(0)] * dim
                for k, c in enumerate(columns):
                    full[c] = v[k]
                basis.append(full)
    for v in basis:
        if any(any(m.apply(v)) for m in raising):
            raise InvariantFailure("Vecteur singulier non annulé par un générateur montant")
    logger.debug(f"Espace singulier de dimension {len(basis)} ({module!r})")
    return basis


def _grading(module: YangianModule) -> List[Hashable]:
    return list(module.weights)


def _span_dimension(generators: Sequence[MatrixR], module: YangianModule) -> int:
    span = invariant_span(generators, [module.top_vector()], grading=_grading(module), dim=module.dim)
    return len(span)


def is_cyclic_from_top(module: YangianModule) -> bool:
    """
    ξ ⊗ ξ' engendre-t-il tout le module sous les t_ij^{(r)} ?

    En mode debug, la clôture est refaite en ajoutant les coefficients des
    t̄_ij(u) et les deux dimensions doivent coïncider.
    """
    generators = [m for _, _, _, m in module.action_matrices()]
    dimension = _span_dimension(generators, module)
    if settings.debug:
        extended = list(generators)
        for i in range(1, module.n + 1):
            for j in range(1, module.n + 1):
                for _, coeff in module.t_bar(i, j).coefficients():
                    if not coeff.is_zero():
                        extended.append(coeff)
        with_bar = _span_dimension(extended, module)
        if with_bar != dimension:
            raise InvariantFailure(
                "Le span cyclique change avec les opérateurs t̄",
                details={"t": dimension, "t_and_t_bar": with_bar},
            )
    return dimension == module.dim


def oracle_irreducible(module: YangianModule, with_burnside: bool = False) -> OracleVerdict:
    """
    Verdict: irréductible ssi cyclique depuis le haut et espace singulier de dimension 1.

    Args:
        module: Produit tensoriel à tester
        with_burnside: Ajouter la dimension de l'algèbre engendrée (si la
            borne de dimension le permet)

    Returns:
        OracleVerdict
    """
    cyclic = is_cyclic_from_top(module)
    singular_dim = len(singular_space(module))
    if singular_dim < 1:
        raise InvariantFailure("Le vecteur de plus haut poids doit être singulier")
    verdict = OracleVerdict(
        cyclic_from_top=cyclic,
        singular_dim=singular_dim,
        irreducible=cyclic and singular_dim == 1,
    )
    if with_burnside and module.dim <= settings.burnside_bound:
        verdict.burnside_algebra_dim = burnside_algebra_dim(module)
    logger.debug(f"Oracle {module!r}: {verdict.to_dict()}")
    return verdict


def burnside_algebra_dim(module: YangianModule, bound: Optional[int] = None) -> int:
    """
    Dimension de l'algèbre engendrée par l'identité et les t_ij^{(r)}.

    Une matrice M est vue comme vecteur de Q^{d²} (indice x·d + y); la
    multiplication à gauche par g y agit par g ⊗ I. Le degré de la
    coordonnée (x, y) est la différence des poids. La clôture s'arrête dès que
    l'algèbre atteint d², soit End(V).

    Raises:
        GuardError: Si d dépasse la borne
    """
    d = module.dim
    bound = settings.burnside_bound if bound is None else bound
    if d > bound:
        raise GuardError("burnside bound", details={"dimension": d, "bound": bound})
    ident = MatrixR.identity(d)
    generators = [m.kron(ident) for _, _, _, m in module.action_matrices()]
    weights = module.weights
    grading = [
        tuple(a - b for a, b in zip(weights[x], weights[y]))
        for x in range(d)
        for y in range(d)
    ]
    seed = [ident.entry(x, y) for x in range(d) for y in range(d)]
    span = invariant_span(generators, [seed], grading=grading, dim=d * d, limit=d * d)
    return len(span)


def burnside_check(module: YangianModule, bound: Optional[int] = None) -> bool:
    """True si l'algèbre engendrée est End(V) tout entier."""
    return burnside_algebra_dim(module, bound) == module.dim ** 2


def singular_contains(module: YangianModule, vector: Sequence) -> bool:
    """vector appartient-il à l'espace singulier ?"""
    basis = singular_space(module)
    return rank_of_vectors(basis + [list(vector)]) == len(basis)
