"""
Identités des mineurs quantiques vérifiées exactement sur un module.

Les relations à deux paramètres spectraux sont comparées sur la grille
complète des coefficients (u^a v^b); les relations fusionnées utilisent des
spécialisations u_i = c_i·u.
"""

from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..core.logging_config import get_logger
from ..gln.report import RelationReport
from ..linalg.laurent_matrix import MatrixL, MatrixL2
from ..linalg.reduction import rank_of_vectors
from .lowering import (
    LoweringVariant,
    branching_eigenvalues,
    branching_vector,
    gt_vector,
    lowering_tau,
)
from .minors import MinorForm, comatrix, qdet, quantum_minor
from .modules import EvalModule, TensorModule, YangianModule
from .rmatrix import TrigRMatrix, antisymmetrizer, antisymmetrizer_scalar, fused_r_matrix

logger = get_logger(__name__)

IdentityReport = RelationReport

Poly2 = Dict[Tuple[int, int], Fraction]


class MinorIdentity(str, Enum):
    """Familles d'identités vérifiables."""
    RTT = "rtt"
    FUSION = "fusion"
    ANTISYMMETRIZER = "antisymmetrizer"
    ROW_COLUMN = "row_column"
    MINOR_GENERATOR = "minor_generator"
    CENTRALITY = "centrality"
    QDET = "qdet"
    MINOR_RELATION = "minor_relation"
    COMATRIX = "comatrix"
    COMATRIX_R = "comatrix_r"
    COPRODUCT = "coproduct"


RTT_SUITE = (MinorIdentity.RTT, MinorIdentity.FUSION, MinorIdentity.ANTISYMMETRIZER)
MINOR_SUITE = (
    MinorIdentity.ROW_COLUMN,
    MinorIdentity.MINOR_GENERATOR,
    MinorIdentity.CENTRALITY,
    MinorIdentity.QDET,
    MinorIdentity.MINOR_RELATION,
    MinorIdentity.COMATRIX,
    MinorIdentity.COMATRIX_R,
    MinorIdentity.COPRODUCT,
)


class _MinorCache:
    """Mineurs t^{rows}_{cols}(u) calculés une seule fois par vérification."""

    def __init__(self, module: YangianModule):
        self.module = module
        self._store: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], MatrixL] = {}

    def __call__(self, rows: Sequence[int], cols: Sequence[int]) -> MatrixL:
        key = (tuple(rows), tuple(cols))
        if key not in self._store:
            self._store[key] = quantum_minor(self.module, rows, cols)
        return self._store[key]


def _subsets(n: int, r: int) -> List[Tuple[int, ...]]:
    return list(combinations(range(1, n + 1), r))


# ---------------------------------------------------------------------------
# Relations R(u, v)·X_1(u)·Y_2(v) = Y_2(v)·X_1(u)·R(u, v)
# ---------------------------------------------------------------------------

def _rtt_bivariate(report: RelationReport, name: str, trig: TrigRMatrix, X, Y, dim: int) -> None:
    """X, Y: fonctions (a, b) -> MatrixL (indices à partir de 0)."""
    n = trig.n
    for i, k, j, l in product(range(n), repeat=4):
        row, col = i * n + k, j * n + l
        lhs = MatrixL2.zeros(dim)
        for ab in trig.row_support(row):
            a, b = divmod(ab, n)
            lhs = lhs + MatrixL2.product_uv(X(a, j), Y(b, l)).scale_poly(trig.entry_poly(row, ab))
        rhs = MatrixL2.zeros(dim)
        for ab in trig.col_support(col):
            a, b = divmod(ab, n)
            rhs = rhs + MatrixL2.product_vu(Y(k, b), X(i, a)).scale_poly(trig.entry_poly(ab, col))
        report.record(name, lhs == rhs, indices=[i + 1, k + 1, j + 1, l + 1])


def check_rtt(module: YangianModule, report: RelationReport) -> None:
    trig = TrigRMatrix(module.n, module.q)

    def t(a: int, b: int) -> MatrixL:
        return module.t(a + 1, b + 1)
    _rtt_bivariate(report, "rtt", trig, t, t, module.dim)


def check_fusion(module: YangianModule, report: RelationReport, params: Optional[Sequence[Fraction]] = None,
                 max_instances: Optional[int] = None) -> None:
    """
    R(c_1u, …, c_ru)·T_1(c_1u)⋯T_r(c_ru) = T_r(c_ru)⋯T_1(c_1u)·R(c_1u, …, c_ru).

    R(c·u) = u^{r(r−1)/2}·R(c), la relation se vérifie avec R(c) numérique.
    """
    n = module.n
    q = module.q.value
    points = [tuple(params)] if params else [(Fraction(1), q ** -2, q ** -4), (Fraction(1), Fraction(2), Fraction(5))]
    for c in points:
        r = len(c)
        R = fused_r_matrix(n, module.q, c)
        scaled = {}

        def t(a: int, b: int, s: int) -> MatrixL:
            key = (a, b, s)
            if key not in scaled:
                scaled[key] = module.t(a + 1, b + 1).scale_arg(c[s])
            return scaled[key]

        def digits(x: int) -> Tuple[int, ...]:
            out = []
            for _ in range(r):
                x, d = divmod(x, n)
                out.append(d)
            return tuple(reversed(out))

        forward: Dict[Tuple[int, int], MatrixL] = {}
        backward: Dict[Tuple[int, int], MatrixL] = {}

        def fwd(cc: int, b: int) -> MatrixL:
            key = (cc, b)
            if key not in forward:
                dc, db = digits(cc), digits(b)
                m = t(dc[0], db[0], 0)
                for s in range(1, r):
                    m = m @ t(dc[s], db[s], s)
                forward[key] = m
            return forward[key]

        def bwd(a: int, cc: int) -> MatrixL:
            key = (a, cc)
            if key not in backward:
                da, dc = digits(a), digits(cc)
                m = t(da[r - 1], dc[r - 1], r - 1)
                for s in range(r - 2, -1, -1):
                    m = m @ t(da[s], dc[s], s)
                backward[key] = m
            return backward[key]

        size = n ** r
        count = 0
        for a, b in product(range(size), repeat=2):
            if max_instances is not None and count >= max_instances:
                break
            lhs = MatrixL.zeros(module.dim)
            for cc, coeff in R.row(a).items():
                lhs = lhs + fwd(cc, b).scale(coeff)
            rhs = MatrixL.zeros(module.dim)
            for cc in range(size):
                coeff = R.entry(cc, b)
                if coeff:
                    rhs = rhs + bwd(a, cc).scale(coeff)
            report.record("fusion", lhs == rhs, point=[str(x) for x in c], row=list(digits(a)), col=list(digits(b)))
            count += 1


def check_antisymmetrizer(module: YangianModule, report: RelationReport, max_r: int = 3) -> None:
    """R(1, q^{-2}, …, q^{-2r+2}) = Π(q^{-2i} − q^{-2j})·A_r."""
    q = module.q
    for r in range(2, max_r + 1):
        params = [q.power(-2 * i) for i in range(r)]
        lhs = fused_r_matrix(module.n, q, params)
        rhs = antisymmetrizer(module.n, r, q).scale(antisymmetrizer_scalar(q, r))
        report.record("antisymmetrizer", lhs == rhs, r=r)


# ---------------------------------------------------------------------------
# Mineurs
# ---------------------------------------------------------------------------

def _inversions(seq: Sequence[int]) -> int:
    return sum(1 for i, j in combinations(range(len(seq)), 2) if seq[i] > seq[j])


def check_row_column(module: YangianModule, report: RelationReport, max_r: Optional[int] = None) -> None:
    """Formes par lignes et par colonnes, et règles de signe des permutations."""
    n = module.n
    mq = -module.q.value
    for r in range(1, (max_r or n) + 1):
        for rows in _subsets(n, r):
            for cols in _subsets(n, r):
                by_rows = quantum_minor(module, rows, cols, form=MinorForm.ROW)
                by_cols = quantum_minor(module, rows, cols, form=MinorForm.COLUMN)
                report.record("row_column", by_rows == by_cols, rows=list(rows), cols=list(cols))
                if r < 2:
                    continue
                # une permutation non triviale de chaque côté suffit
                perm_rows = tuple(reversed(rows))
                permuted = quantum_minor(module, perm_rows, cols, form=MinorForm.COLUMN)
                report.record("row_sign", permuted == by_rows.scale(mq ** _inversions(perm_rows)),
                              rows=list(perm_rows), cols=list(cols))
                perm_cols = tuple(reversed(cols))
                permuted = quantum_minor(module, rows, perm_cols, form=MinorForm.ROW)
                report.record("column_sign", permuted == by_cols.scale(mq ** (-_inversions(perm_cols))),
                              rows=list(rows), cols=list(perm_cols))


def _insert_after(seq: Sequence[int], drop: int, value: int, position: int) -> Tuple[int, ...]:
    """Retire seq[drop] puis insère value après les ``position`` premiers éléments d'origine."""
    out = list(seq[:position]) + [value] + list(seq[position:])
    index = drop if drop < position else drop + 1
    del out[index]
    return tuple(out)


def _minor_generator_sides(module: YangianModule, minors: _MinorCache, a: int, b: int,
                           c: Tuple[int, ...], d: Tuple[int, ...]) -> Tuple[MatrixL2, MatrixL2]:
    q = module.q.value
    mq = -q
    dq = 1 / q - q
    t_ab = module.t(a, b)
    M = minors(c, d)
    r = len(c)

    if a in c:
        lhs = MatrixL2.product_uv(t_ab, M).scale_poly({(1, 0): 1 / q, (0, 1): -q})
    else:
        k = sum(1 for x in c if x < a)
        lhs = MatrixL2.product_uv(t_ab, M).scale_poly({(1, 0): 1, (0, 1): -1})
        for i in range(1, r + 1):
            rows = _insert_after(c, i - 1, a, k)
            term = MatrixL2.product_uv(module.t(c[i - 1], b), minors(rows, d))
            if i <= k:
                lhs = lhs + term.scale_poly({(1, 0): dq * mq ** (k - i)})
            else:
                lhs = lhs + term.scale_poly({(0, 1): dq * mq ** (k - i + 1)})

    if b in d:
        rhs = MatrixL2.product_vu(M, t_ab).scale_poly({(1, 0): 1 / q, (0, 1): -q})
    else:
        l = sum(1 for x in d if x < b)
        rhs = MatrixL2.product_vu(M, t_ab).scale_poly({(1, 0): 1, (0, 1): -1})
        for i in range(1, r + 1):
            cols = _insert_after(d, i - 1, b, l)
            term = MatrixL2.product_vu(minors(c, cols), module.t(a, d[i - 1]))
            if i <= l:
                rhs = rhs + term.scale_poly({(0, 1): dq * mq ** (i - l)})
            else:
                rhs = rhs + term.scale_poly({(1, 0): dq * mq ** (i - l - 1)})
    return lhs, rhs


def minor_generator_instances(n: int) -> Iterable[Tuple[int, int, Tuple[int, ...], Tuple[int, ...]]]:
    """(a, b, c, d) par taille de mineur croissante."""
    for r in range(1, n + 1):
        for c in _subsets(n, r):
            for d in _subsets(n, r):
                for a in range(1, n + 1):
                    for b in range(1, n + 1):
                        yield a, b, c, d


def check_minor_generator(module: YangianModule, report: RelationReport, minors: _MinorCache,
                          max_instances: Optional[int] = None) -> None:
    for count, (a, b, c, d) in enumerate(minor_generator_instances(module.n)):
        if max_instances is not None and count >= max_instances:
            break
        lhs, rhs = _minor_generator_sides(module, minors, a, b, c, d)
        report.record("minor_generator", lhs == rhs, a=a, b=b, c=list(c), d=list(d))


def check_centrality(module: YangianModule, report: RelationReport, minors: _MinorCache,
                     max_r: Optional[int] = None) -> None:
    """[t_{c_i d_j}(u), t^{c}_{d}(v)] = 0, puis qdet commute avec tout t_ij^{(r)}."""
    n = module.n
    for r in range(1, (max_r or n) + 1):
        for c in _subsets(n, r):
            for d in _subsets(n, r):
                M = minors(c, d)
                for ci in c:
                    for dj in d:
                        t = module.t(ci, dj)
                        holds = MatrixL2.product_uv(t, M) == MatrixL2.product_vu(M, t)
                        report.record("centrality", holds, c=list(c), d=list(d), i=ci, j=dj)

    det = qdet(module)
    actions = module.action_matrices()
    for e, coeff in det.coefficients():
        for i, j, r, m in actions:
            report.record("qdet_central", (coeff @ m) == (m @ coeff), exponent=e, i=i, j=j, r=r)


def qdet_highest_eigenvalue(module: EvalModule) -> Dict[int, Fraction]:
    """Π_i (q^{λ_i} − a·q^{−λ_i+2i−2}·u^{-1}) développé en u."""
    q = module.q
    poly: Dict[int, Fraction] = {0: Fraction(1)}
    for i, x in enumerate(module.lam.entries, start=1):
        factor = {0: q.power(x), -1: -module.a * q.power(-x + 2 * i - 2)}
        nxt: Dict[int, Fraction] = {}
        for e1, c1 in poly.items():
            for e2, c2 in factor.items():
                nxt[e1 + e2] = nxt.get(e1 + e2, Fraction(0)) + c1 * c2
        poly = {e: c for e, c in nxt.items() if c}
    return poly


def check_qdet(module: YangianModule, report: RelationReport) -> None:
    if isinstance(module, EvalModule):
        det = qdet(module)
        top = module.top_vector()
        expected = qdet_highest_eigenvalue(module)
        applied = det.apply(top)
        zero = [Fraction(0)] * module.dim
        holds = all(
            applied.get(e, zero) == [expected.get(e, Fraction(0)) * x for x in top]
            for e in set(applied) | set(expected)
        )
        report.record("qdet_highest_eigenvalue", holds)
        report.record("qdet_scalar", det.as_scalar() is not None)


def check_minor_relation(module: YangianModule, report: RelationReport, minors: _MinorCache) -> None:
    """
    t^{2…n}_{1…n−2,n}·t^{2…n−1}_{2…n−1} =
    t^{2…n−1}_{1…n−2}·t^{2…n}_{2…n} + q·t^{2…n}_{1…n−1}·t^{2…n−1}_{2…n−2,n}.
    """
    n = module.n
    if n < 3:
        return
    top = tuple(range(2, n + 1))
    mid = tuple(range(2, n))
    left = minors(top, tuple(range(1, n - 1)) + (n,)) @ minors(mid, mid)
    right = (minors(mid, tuple(range(1, n - 1))) @ minors(top, top)
             + (minors(top, tuple(range(1, n))) @ minors(mid, tuple(range(2, n - 1)) + (n,))).scale(module.q.value))
    report.record("minor_relation", left == right, n=n)


def check_comatrix(module: YangianModule, report: RelationReport) -> Tuple[List[List[MatrixL]], MatrixL]:
    """Σ_k t̂_ik(u)·t_kj(q^{−2n+2}u) = δ_ij·qdet(u)."""
    n = module.n
    hat = comatrix(module)
    det = qdet(module)
    shift = module.q.power(-2 * n + 2)
    for i in range(n):
        for j in range(n):
            total = MatrixL.zeros(module.dim)
            for k in range(n):
                total = total + hat[i][k] @ module.t(k + 1, j + 1).scale_arg(shift)
            expected = det if i == j else MatrixL.zeros(module.dim)
            report.record("comatrix", total == expected, i=i + 1, j=j + 1)
    return hat, det


def check_comatrix_r(module: YangianModule, report: RelationReport, hat: List[List[MatrixL]]) -> None:
    """R(u, v)·T̂_2(v)·T̂_1(u) = T̂_1(u)·T̂_2(v)·R(u, v)."""
    n = module.n
    trig = TrigRMatrix(n, module.q)
    for i, k, j, l in product(range(n), repeat=4):
        row, col = i * n + k, j * n + l
        lhs = MatrixL2.zeros(module.dim)
        for ab in trig.row_support(row):
            a, b = divmod(ab, n)
            lhs = lhs + MatrixL2.product_vu(hat[b][l], hat[a][j]).scale_poly(trig.entry_poly(row, ab))
        rhs = MatrixL2.zeros(module.dim)
        for ab in trig.col_support(col):
            a, b = divmod(ab, n)
            rhs = rhs + MatrixL2.product_uv(hat[i][a], hat[k][b]).scale_poly(trig.entry_poly(ab, col))
        report.record("comatrix_r", lhs == rhs, indices=[i + 1, k + 1, j + 1, l + 1])


def check_coproduct(module: TensorModule, report: RelationReport, max_r: Optional[int] = None) -> None:
    """Δ(t^{a}_{b}(u)) = Σ_{c_1<…<c_r} t^{a}_{c}(u) ⊗ t^{c}_{b}(u)."""
    n = module.n
    first, rest = module.split()
    for r in range(1, (max_r or n) + 1):
        subsets = _subsets(n, r)
        for rows in subsets:
            for cols in subsets:
                expected = MatrixL.zeros(module.dim)
                for c in subsets:
                    expected = expected + quantum_minor(first, rows, c).kron(quantum_minor(rest, c, cols))
                report.record("coproduct", quantum_minor(module, rows, cols) == expected,
                              rows=list(rows), cols=list(cols))


def verify_minor_identities(
    module: YangianModule,
    identities: Optional[Iterable[MinorIdentity]] = None,
    max_instances: Optional[int] = None,
) -> IdentityReport:
    """
    Vérifie les identités demandées sur le module.

    Args:
        module: Module d'évaluation ou produit tensoriel
        identities: Familles à vérifier (toutes celles applicables par défaut)
        max_instances: Plafond par famille pour les familles volumineuses

    Returns:
        Rapport des identités vérifiées et des échecs
    """
    selected = [MinorIdentity(x) for x in identities] if identities is not None else list(MinorIdentity)
    report = IdentityReport()
    minors = _MinorCache(module)
    hat = None
    for identity in selected:
        logger.debug(f"Identité {identity.value} sur {module!r}")
        if identity is MinorIdentity.RTT:
            check_rtt(module, report)
        elif identity is MinorIdentity.FUSION:
            check_fusion(module, report, max_instances=max_instances)
        elif identity is MinorIdentity.ANTISYMMETRIZER:
            check_antisymmetrizer(module, report)
        elif identity is MinorIdentity.ROW_COLUMN:
            check_row_column(module, report)
        elif identity is MinorIdentity.MINOR_GENERATOR:
            check_minor_generator(module, report, minors, max_instances=max_instances)
        elif identity is MinorIdentity.CENTRALITY:
            check_centrality(module, report, minors)
        elif identity is MinorIdentity.QDET:
            check_qdet(module, report)
        elif identity is MinorIdentity.MINOR_RELATION:
            check_minor_relation(module, report, minors)
        elif identity is MinorIdentity.COMATRIX:
            hat, _ = check_comatrix(module, report)
        elif identity is MinorIdentity.COMATRIX_R:
            check_comatrix_r(module, report, hat if hat is not None else comatrix(module))
        elif identity is MinorIdentity.COPRODUCT:
            if isinstance(module, TensorModule):
                check_coproduct(module, report)
    return report


# ---------------------------------------------------------------------------
# Base de Gelfand-Tsetlin
# ---------------------------------------------------------------------------

def _is_proportional_to_unit(v: Sequence[Fraction], index: int) -> bool:
    return v[index] != 0 and all(x == 0 for i, x in enumerate(v) if i != index)


def verify_gt_vectors(module: EvalModule) -> IdentityReport:
    """
    Vecteurs ξ_Λ et ξ_μ: non nuls, indépendants, alignés sur la base de
    Gelfand-Tsetlin, propriétés de plus haut poids pour gl_{n−1},
    valeurs propres des mineurs et commutation des τ.
    """
    report = IdentityReport()
    rep = module.rep
    n = module.n
    vectors = []
    for pattern in rep.basis:
        v = gt_vector(module, pattern)
        vectors.append(v)
        report.record("gt_nonzero", any(v), pattern=str(pattern))
        report.record("gt_basis_direction", _is_proportional_to_unit(v, rep.index[pattern]), pattern=str(pattern))
    report.record("gt_independent", rank_of_vectors(vectors) == rep.dim, dimension=rep.dim)

    seen = set()
    for pattern in rep.basis:
        if n < 2:
            break
        mu = pattern.row(n - 1)
        if mu in seen:
            continue
        seen.add(mu)
        xi = branching_vector(module, mu)
        report.record("branching_nonzero", any(xi), mu=list(mu))
        for k in range(1, n - 1):
            report.record("branching_singular", not any(rep.e_k(k).apply(xi)), mu=list(mu), k=k)
        for k in range(1, n):
            expected = [rep.q.power(mu[k - 1]) * x for x in xi]
            report.record("branching_weight", rep.t_k(k).apply(xi) == expected, mu=list(mu), k=k)
        data = branching_eigenvalues(module, mu)
        if data is not None:
            report.record("minor_eigenvalue_inner", data["inner"] == data["inner_expected"], mu=list(mu), a=data["a"])
            report.record("minor_eigenvalue_outer", data["outer"] == data["outer_expected"], mu=list(mu), a=data["a"])

    for r in range(2, n + 1):
        for a in range(1, r):
            for s in range(r, n + 1):
                for b in range(1, a + 1):
                    x = lowering_tau(module, r, a, LoweringVariant.EVAL)
                    y = lowering_tau(module, s, b, LoweringVariant.EVAL)
                    holds = MatrixL2.product_uv(x, y) == MatrixL2.product_vu(y, x)
                    report.record("lowering_commute", holds, ra=[r, a], sb=[s, b])
    return report
