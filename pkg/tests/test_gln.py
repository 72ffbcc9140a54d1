import subprocess
import sys
from pathlib import Path

import pytest

from src.arith import QValue
from src.gln import T_matrices, build_rep, highest_vector_space, root_vector_matrix, verify_gln_relations
from src.linalg import MatrixR, rank_of_vectors, unit_vector

from .conftest import hw


@pytest.fixture(scope="module")
def rep10():
    return build_rep(hw(1, 0), QValue.parse("3/2"))


def test_two_dimensional_module(rep10):
    top, low = unit_vector(2, 0), unit_vector(2, 1)
    assert rep10.f_k(1).apply(top) == low
    assert rep10.e_k(1).apply(low) == top
    assert rep10.t_k(1) == MatrixR.diagonal([rep10.q.value, 1])


@pytest.mark.parametrize("lam", [(1, 0), (2, 1, 0), (1, 0, -1), (1, 0, 0, -1)])
def test_highest_vector_is_killed_by_raising(q, lam):
    rep = build_rep(hw(*lam), q)
    for k in range(1, rep.n):
        assert not any(rep.e_k(k).apply(rep.highest_vector()))


def test_root_vectors_n3(q):
    rep = build_rep(hw(2, 1, 0), q)
    e1, e2 = rep.e_k(1), rep.e_k(2)
    assert root_vector_matrix(rep, 1, 2) == e1
    assert root_vector_matrix(rep, 1, 3) == e1 @ e2 - (e2 @ e1).scale(q.value)
    e32, e21 = root_vector_matrix(rep, 3, 2), root_vector_matrix(rep, 2, 1)
    assert root_vector_matrix(rep, 3, 1) == e32 @ e21 - (e21 @ e32).scale(1 / q.value)


def test_T_matrices_entries(q):
    rep = build_rep(hw(2, 1, 0), q)
    T, T_bar = T_matrices(rep)
    c = q.q_minus_inv
    assert T[1][0] == (rep.t_k(1) @ rep.f_k(1)).scale(c)
    assert T_bar[0][1] == (rep.e_k(1) @ rep.t_k_inv(1)).scale(-c)
    for i in range(3):
        for j in range(i + 1, 3):
            assert T[i][j].is_zero()
            assert T_bar[j][i].is_zero()


@pytest.mark.parametrize("lam", [(0, 0), (1, 0), (2, 1, 0), (1, 0, 0), (1, 0, 0, 0)])
def test_relations_hold(q, lam):
    report = verify_gln_relations(build_rep(hw(*lam), q))
    assert report.ok, report.failures
    assert report.checked.get("rtt_Tbar_T", 0) > 0


def test_serre_relations_counted(q):
    report = verify_gln_relations(build_rep(hw(2, 1, 0), q))
    assert report.checked["serre_e"] > 0 and report.checked["serre_f"] > 0


@pytest.mark.parametrize("q_text", ["2", "7/5", "-3"])
def test_relations_independent_of_q(q_text):
    assert verify_gln_relations(build_rep(hw(1, 0, -1), QValue.parse(q_text))).ok


@pytest.mark.parametrize("lam", [(0, 0), (2, 0), (2, 1, 0), (1, 0, -1), (1, 1, 0, 0)])
def test_highest_vector_is_unique(q, lam):
    rep = build_rep(hw(*lam), q)
    space = highest_vector_space(rep)
    assert len(space) == 1
    assert rank_of_vectors([space[0], rep.highest_vector()]) == 1


def test_uniqueness_is_reported(q):
    report = verify_gln_relations(build_rep(hw(2, 1, 0), q), include_rtt=False)
    assert report.checked["highest_vector_unique"] == 1


@pytest.mark.parametrize("statement", ["import src.gln", "import src.yangian", "import src.oracle"])
def test_package_imports_alone(statement):
    """Chaque paquet s'importe seul, dans un interpréteur neuf."""
    root = Path(__file__).resolve().parent.parent
    result = subprocess.run([sys.executable, "-c", statement], cwd=root, capture_output=True, text=True)
    assert result.returncode == 0, result.stderr
