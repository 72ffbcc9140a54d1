"""
Opérateurs d'abaissement τ_ra(u), produits 𝒯 et vecteurs de Gelfand-Tsetlin.

Deux normalisations coexistent:

- ``eval``: T_ij(u) = (u·t_ij − u^{-1}·t̄_ij)/(q − q^{-1}) sur L(λ), avec le
  préfacteur q^{r−a} dans τ_ra;
- ``tensor``: T_ij(u) = u^{2k}·t_ij(u²) sur un produit de k modules
  d'évaluation, sans préfacteur. Le facteur u^{2k} rend l'opérateur
  polynomial, ce qu'exige la dérivation de 𝒯.

Dans les deux cas les mineurs utilisent le pas q^{-1} entre arguments.
"""

from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence

from ..core.exceptions import PatternError, ValidationError
from ..core.logging_config import get_logger
from ..gt.patterns import GTPattern
from ..linalg.laurent_matrix import MatrixL
from ..linalg.matrix import Vector
from .minors import quantum_minor
from .modules import EvalModule, OperatorPoly, TensorModule, YangianModule

logger = get_logger(__name__)


class LoweringVariant(str, Enum):
    """Normalisation des générateurs T_ij(u) des opérateurs d'abaissement."""
    EVAL = "eval"
    TENSOR = "tensor"


def lowering_entries(module: YangianModule, variant: LoweringVariant) -> Callable[[int, int], MatrixL]:
    """Fonction (i, j) -> T_ij(u) dans la normalisation choisie."""
    variant = LoweringVariant(variant)
    if variant is LoweringVariant.EVAL:
        if not isinstance(module, EvalModule) or module.a != 1:
            raise ValidationError("La normalisation eval demande un module L_1(λ)", field="module")
        rep = module.rep
        c = rep.q.q_minus_inv
        cache = {}

        def entry(i: int, j: int) -> MatrixL:
            if (i, j) not in cache:
                cache[(i, j)] = MatrixL(module.dim, module.dim, {
                    1: rep.T[i - 1][j - 1].scale(1 / c),
                    -1: rep.T_bar[i - 1][j - 1].scale(-1 / c),
                })
            return cache[(i, j)]
        return entry

    if not isinstance(module, TensorModule):
        raise ValidationError("La normalisation tensor demande un produit tensoriel", field="module")
    shift = 2 * module.degree

    def tensor_entry(i: int, j: int) -> MatrixL:
        return module.t(i, j).substitute_power(2).shift(shift)
    return tensor_entry


def lowering_tau(module: YangianModule, r: int, a: int, variant: LoweringVariant = LoweringVariant.EVAL) -> OperatorPoly:
    """
    τ_ra(u) = [q^{r−a}·] T^{a+1…r}_{a…r−1}(u).

    Args:
        module: L_1(λ) pour ``eval``, produit tensoriel pour ``tensor``
        r, a: Indices avec 1 <= a < r <= n
        variant: Normalisation

    Returns:
        Opérateur exact en u
    """
    variant = LoweringVariant(variant)
    if not (1 <= a < r <= module.n):
        raise PatternError(f"τ_{r}{a} indéfini pour n={module.n}")
    key = ("tau", r, a, variant)
    if key in module.operator_cache:
        return module.operator_cache[key]
    q = module.q
    minor = quantum_minor(
        module,
        rows=list(range(a + 1, r + 1)),
        cols=list(range(a, r)),
        step=1 / q.value,
        entries=lowering_entries(module, variant),
    )
    if variant is LoweringVariant.EVAL:
        minor = minor.scale(q.power(r - a))
    module.operator_cache[key] = minor
    return minor


def lowering_minor(module: YangianModule, rows: Sequence[int], cols: Sequence[int],
                   variant: LoweringVariant = LoweringVariant.EVAL) -> OperatorPoly:
    """Mineur T^{rows}_{cols}(u) en générateurs T_ij(u), pas q^{-1}."""
    return quantum_minor(module, rows, cols, step=1 / module.q.value, entries=lowering_entries(module, variant))


def _points(point: Fraction, k: int, ratio: Fraction):
    return [point * ratio ** i for i in range(k)]


def apply_tau_product(module: YangianModule, tau: OperatorPoly, point: Fraction, k: int, vector: Vector,
                      derivative: bool = False) -> Vector:
    """
    𝒯(u, k)·v évalué en u = point, où 𝒯(u, k) = Π_{i=1}^{k} τ(q^{i−1}u).

    Avec ``derivative``, applique d𝒯/du (règle de Leibniz sur les facteurs).
    """
    if k < 0:
        raise ValidationError(f"Nombre de facteurs négatif: {k}", field="k")
    points = _points(Fraction(point), k, module.q.value)
    evaluated = [tau.eval_at(x) for x in points]
    if not derivative:
        v = list(vector)
        for m in reversed(evaluated):
            v = m.apply(v)
        return v

    if k == 0:
        return [Fraction(0)] * len(vector)
    d_tau = tau.derivative()
    total: Optional[Vector] = None
    for i in range(k):
        v = list(vector)
        for j in range(k - 1, -1, -1):
            if j == i:
                # d/du τ(c·u) = c·τ'(c·u)
                v = d_tau.eval_at(points[j]).scale(points[j] / point).apply(v)
            else:
                v = evaluated[j].apply(v)
        total = v if total is None else [x + y for x, y in zip(total, v)]
    return total


def branching_vector(module: EvalModule, mu: Sequence[int]) -> Vector:
    """
    ξ_μ = Π_a τ_na(q^{−μ_a−1})⋯τ_na(q^{−λ_a})·ξ.

    Raises:
        PatternError: Si μ n'est pas entrelacé avec λ
    """
    lam = module.lam
    n = lam.n
    mu = tuple(int(x) for x in mu)
    if len(mu) != n - 1 or any(not (lam[i + 1] <= mu[i] <= lam[i]) for i in range(n - 1)):
        raise PatternError(f"μ={list(mu)} n'est pas entrelacé avec λ=({lam})")
    q = module.q
    v = module.top_vector()
    for a in range(1, n):
        tau = lowering_tau(module, n, a, LoweringVariant.EVAL)
        v = apply_tau_product(module, tau, q.power(-lam[a - 1]), lam[a - 1] - mu[a - 1], v)
    return v


def gt_vector(module: EvalModule, pattern: GTPattern) -> Vector:
    """
    Vecteur ξ_Λ: produits de τ_ra appliqués à ξ, les facteurs r = n
    d'abord, les facteurs r = 2 en dernier.
    """
    n = module.n
    if pattern.n != n or pattern.row(n) != module.lam.entries or not pattern.is_valid():
        raise PatternError(f"Motif {pattern} incompatible avec λ=({module.lam})")
    q = module.q
    v = module.top_vector()
    for r in range(n, 1, -1):
        for a in range(1, r):
            upper, lower = pattern.entry(r, a), pattern.entry(r - 1, a)
            if upper == lower:
                continue
            tau = lowering_tau(module, r, a, LoweringVariant.EVAL)
            v = apply_tau_product(module, tau, q.power(-upper), upper - lower, v)
    return v


def branching_eigenvalues(module: EvalModule, mu: Sequence[int]) -> Optional[dict]:
    """
    Valeurs propres des mineurs centraux sur ξ_{μ'}.

    Pour a le plus petit indice avec λ_a > μ_a et μ' = μ où μ_a est remplacé
    par λ_a, renvoie les vecteurs T^{a+1…n−1}_{a+1…n−1}(q^{−μ_a−1})·ξ_{μ'} et
    T^{a+1…n}_{a+1…n}(q^{−μ_a−1})·ξ_{μ'} avec les produits attendus
    Π[m_i − m_a] et Π[l_i − m_a]. None si μ = λ_−.
    """
    lam = module.lam
    n = lam.n
    mu = [int(x) for x in mu]
    q = module.q
    a = next((i + 1 for i in range(n - 1) if lam[i] > mu[i]), None)
    if a is None:
        return None
    mu_prime = list(mu)
    mu_prime[a - 1] = lam[a - 1]
    xi = branching_vector(module, mu_prime)
    point = q.power(-mu[a - 1] - 1)
    m = [mu[i] - i for i in range(n - 1)]
    l = lam.l_values()

    inner_idx = list(range(a + 1, n))
    outer_idx = list(range(a + 1, n + 1))
    inner = lowering_minor(module, inner_idx, inner_idx).eval_at(point).apply(xi)
    outer = lowering_minor(module, outer_idx, outer_idx).eval_at(point).apply(xi)

    inner_value = Fraction(1)
    for i in range(a + 1, n):
        inner_value *= q.q_int(m[i - 1] - m[a - 1])
    outer_value = Fraction(1)
    for i in range(a + 1, n + 1):
        outer_value *= q.q_int(l[i - 1] - m[a - 1])
    return {
        "a": a,
        "vector": xi,
        "inner": inner,
        "inner_expected": [inner_value * x for x in xi],
        "outer": outer,
        "outer_expected": [outer_value * x for x in xi],
    }
