"""
Vérification exacte des relations de U_q(gl_n) sur une représentation L(λ).
"""

from itertools import combinations
from typing import List

from ..arith.rational import QValue
from ..core.logging_config import get_logger
from ..linalg.matrix import MatrixR, Vector, commutator, q_commutator
from ..linalg.reduction import joint_kernel
from .report import RelationReport
from .representation import GlnRep, root_vector_matrix

logger = get_logger(__name__)


def constant_r_matrix(n: int, q: QValue) -> MatrixR:
    """
    R = q·Σ E_ii⊗E_ii + Σ_{i≠j} E_ii⊗E_jj + (q − q^{-1})·Σ_{i<j} E_ij⊗E_ji.

    Convention d'indices sur C^n ⊗ C^n: (i, k) -> i·n + k.
    """
    trip = []
    for i in range(n):
        for k in range(n):
            trip.append((i * n + k, i * n + k, q.value if i == k else 1))
    c = q.q_minus_inv
    for i, j in combinations(range(n), 2):
        trip.append((i * n + j, j * n + i, c))
    return MatrixR.from_triplets(n * n, n * n, trip)


def _rtt_constant(report: RelationReport, name: str, R: MatrixR, X, Y, n: int) -> None:
    """R·X_1·Y_2 = Y_2·X_1·R composante par composante."""
    dim = X[0][0].rows
    for i in range(n):
        for k in range(n):
            row = i * n + k
            for j in range(n):
                for l in range(n):
                    col = j * n + l
                    lhs = MatrixR.zeros(dim)
                    for ab, c in R.row(row).items():
                        a, b = divmod(ab, n)
                        lhs = lhs + (X[a][j] @ Y[b][l]).scale(c)
                    rhs = MatrixR.zeros(dim)
                    for a in range(n):
                        for b in range(n):
                            c = R.entry(a * n + b, col)
                            if c:
                                rhs = rhs + (Y[k][b] @ X[i][a]).scale(c)
                    report.record(name, lhs == rhs, indices=[i + 1, k + 1, j + 1, l + 1])


def highest_vector_space(rep: GlnRep) -> List[Vector]:
    """
    Vecteurs de poids λ annulés par tous les e_ij, i < j.

    Noyau commun des e_ij et des t_k − q^{λ_k}; de dimension 1 sur un
    module irréductible.
    """
    ident = MatrixR.identity(rep.dim)
    conditions = [
        rep.t_k(k) - ident.scale(rep.q.power(rep.lam.entries[k - 1]))
        for k in range(1, rep.n + 1)
    ]
    conditions += [
        root_vector_matrix(rep, i, j)
        for i, j in combinations(range(1, rep.n + 1), 2)
    ]
    return joint_kernel(conditions, rep.dim)


def verify_gln_relations(rep: GlnRep, include_rtt: bool = True) -> RelationReport:
    """
    Contrôle toutes les relations de définition sur L(λ).

    Args:
        rep: Représentation construite par build_rep
        include_rtt: Vérifier aussi les trois relations RTT à R constante

    Returns:
        RelationReport (vide d'échecs si tout est satisfait)
    """
    report = RelationReport()
    n, q = rep.n, rep.q
    qv = q.value
    c = q.q_minus_inv
    ident = MatrixR.identity(rep.dim)

    for i in range(1, n + 1):
        report.record("t_inverse", rep.t_k(i) @ rep.t_k_inv(i) == ident, i=i)
        for j in range(i + 1, n + 1):
            report.record("t_commute", commutator(rep.t_k(i), rep.t_k(j)).is_zero(), i=i, j=j)

    for i in range(1, n + 1):
        for j in range(1, n):
            exp = (1 if i == j else 0) - (1 if i == j + 1 else 0)
            conj_e = rep.t_k(i) @ rep.e_k(j) @ rep.t_k_inv(i)
            conj_f = rep.t_k(i) @ rep.f_k(j) @ rep.t_k_inv(i)
            report.record("t_e_conjugation", conj_e == rep.e_k(j).scale(q.power(exp)), i=i, j=j)
            report.record("t_f_conjugation", conj_f == rep.f_k(j).scale(q.power(-exp)), i=i, j=j)

    for i in range(1, n):
        k_i = rep.t_k(i) @ rep.t_k_inv(i + 1)
        k_inv = rep.t_k_inv(i) @ rep.t_k(i + 1)
        for j in range(1, n):
            expected = (k_i - k_inv).scale(1 / c) if i == j else MatrixR.zeros(rep.dim)
            report.record("e_f_bracket", commutator(rep.e_k(i), rep.f_k(j)) == expected, i=i, j=j)

    for i, j in combinations(range(1, n), 2):
        if j - i > 1:
            report.record("far_commute", commutator(rep.e_k(i), rep.e_k(j)).is_zero(), i=i, j=j)
            report.record("far_commute", commutator(rep.f_k(i), rep.f_k(j)).is_zero(), i=i, j=j)

    for i in range(1, n):
        for j in (i - 1, i + 1):
            if not (1 <= j <= n - 1):
                continue
            for name, gen in (("serre_e", rep.e_k), ("serre_f", rep.f_k)):
                inner = q_commutator(gen(j), gen(i), qv)
                report.record(name, q_commutator(gen(i), inner, qv).is_zero(), i=i, j=j)

    # e_ij ne dépend pas de l'indice intermédiaire choisi
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if abs(i - j) < 2:
                continue
            reference = root_vector_matrix(rep, i, j)
            lo, hi = min(i, j), max(i, j)
            for k in range(lo + 1, hi):
                report.record("root_vector_middle", root_vector_matrix(rep, i, j, middle=k) == reference,
                              i=i, j=j, middle=k)

    T, T_bar = rep.T, rep.T_bar
    for i in range(1, n):
        e_iso = (T_bar[i - 1][i] @ T[i - 1][i - 1]).scale(-1 / c)
        f_iso = (T_bar[i - 1][i - 1] @ T[i][i - 1]).scale(1 / c)
        report.record("isomorphism_e", e_iso == rep.e_k(i), i=i)
        report.record("isomorphism_f", f_iso == rep.f_k(i), i=i)

    report.record("highest_vector_unique", len(highest_vector_space(rep)) == 1)

    if include_rtt:
        R = constant_r_matrix(n, q)
        _rtt_constant(report, "rtt_T_T", R, T, T, n)
        _rtt_constant(report, "rtt_Tbar_Tbar", R, T_bar, T_bar, n)
        _rtt_constant(report, "rtt_Tbar_T", R, T_bar, T, n)

    if report.ok:
        logger.debug(f"L({rep.lam}): {report.total} relations vérifiées")
    else:
        logger.warning(f"L({rep.lam}): {len(report.failures)} relations en échec")
    return report
