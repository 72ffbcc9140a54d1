"""
Tests des services du pipeline: suites, critère, oracle, balayages, export.
"""

from fractions import Fraction

import pytest

from src.arith.rational import QValue
from src.core.exceptions import CaseDataError, ValidationError
from src.pipeline import (
    CheckService,
    Command,
    ExportService,
    OracleService,
    Pipeline,
    RunConfig,
    Suite,
    SuiteRangeService,
    SweepService,
    run_sweep_case,
)

from .conftest import hw

Q = QValue.parse("3/2")


def config(command: Command, **kwargs) -> RunConfig:
    return RunConfig(command=command, q=kwargs.pop("q", Q), **kwargs)


class TestSuites:

    @pytest.mark.parametrize("suite, lam", [
        (Suite.RELATIONS, (1, 0, 0)),
        (Suite.RTT, (1, 0)),
        (Suite.MINORS, (2, 1, 0)),
        (Suite.GT, (2, 1, 0)),
    ])
    def test_suite_passes(self, suite, lam):
        payload, ok = Pipeline(config(Command.VERIFY, lam=hw(*lam), suite=suite, max_instances=4)).run()
        assert ok
        assert payload["ok"] is True
        assert payload["suite"] == suite.value
        assert payload["total"] > 0
        assert payload["failures"] == []

    def test_minors_on_tensor_product(self):
        cfg = config(Command.VERIFY, lam=hw(1, 0), mu=hw(0, -1), suite=Suite.MINORS)
        payload, ok = Pipeline(cfg).run()
        assert ok
        assert payload["checked"]["coproduct"] == 5

    def test_theta_suite(self):
        cfg = config(Command.VERIFY, lam=hw(1, 0), mu=hw(0, -1), suite=Suite.THETA)
        payload, ok = Pipeline(cfg).run()
        assert ok
        cases = payload["details"]["cases"]
        assert len(cases) == 1
        assert cases[0]["swapped"] is True
        assert cases[0]["k"] == [1]
        assert cases[0]["singular_dim"] >= 2
        assert payload["checked"]["theta_leading"] == 1

    def test_theta_suite_rejects_irreducible_pair(self):
        cfg = config(Command.VERIFY, lam=hw(1, 0), mu=hw(1, 0), suite=Suite.THETA)
        with pytest.raises(CaseDataError, match="not a reducible configuration"):
            Pipeline(cfg).run()

    def test_missing_suite(self):
        with pytest.raises(ValidationError):
            Pipeline(config(Command.VERIFY, lam=hw(1, 0))).run()

    def test_missing_weight(self):
        with pytest.raises(ValidationError):
            Pipeline(config(Command.VERIFY, suite=Suite.GT)).run()


class TestCheckAndOracle:

    def test_check_reducible(self):
        report = CheckService().check(config(Command.CHECK, lam=hw(1, 0), mu=hw(0, -1)))
        assert report.to_dict() == {
            "lambda": [1, 0],
            "mu": [0, -1],
            "verdict": "reducible",
            "witness": [-2, -1, 0, 1],
        }

    def test_check_generic_ratio(self):
        cfg = config(Command.CHECK, q=QValue.parse("2"), lam=hw(1, 0), mu=hw(1, 0), b=Fraction(8))
        out = CheckService().check(cfg).to_dict()
        assert out["verdict"] == "irreducible"
        assert out["reason"] == "ratio not in q^{2Z}"
        assert out["reduction"]["ratio"] == "1/8"

    def test_check_debug_reports_pairwise(self, debug):
        out = CheckService().check(config(Command.CHECK, lam=hw(1, 0), mu=hw(1, 0))).to_dict()
        assert out["pairwise"] == "irreducible"

    def test_oracle_agrees(self):
        report = OracleService().run(config(Command.ORACLE, lam=hw(1, 0), mu=hw(0, -1)))
        assert report.agree
        out = report.to_dict()
        assert out["irreducible"] is False
        assert out["criterion"] == "reducible"
        assert out["burnside_algebra_dim"] < 16

    def test_oracle_general_parameters(self):
        cfg = config(Command.ORACLE, q=QValue.parse("2"), lam=hw(1, 0), mu=hw(1, 0),
                     h=Fraction(2), a=Fraction(4), b=Fraction(4))
        report = OracleService().run(cfg)
        assert report.agree
        assert report.criterion.value == "reducible"

    def test_export_evaluation_module(self):
        out = ExportService().export(config(Command.EXPORT, lam=hw(1, 0)))
        assert out["module"]["dimension"] == 2
        assert set(out["module"]["operators"]) == {"1,1", "1,2", "2,1", "2,2"}

    def test_export_tensor(self):
        out = ExportService().export(config(Command.EXPORT, lam=hw(1, 0), mu=hw(0, -1)))
        assert out["module"]["dimension"] == 4


class TestSweep:

    def test_exhaustive_gl2(self):
        cfg = config(Command.SWEEP, n=2, width=1, max_dim=100)
        first = SweepService(verbose=False).run(cfg).to_dict()
        second = SweepService(verbose=False).run(cfg).to_dict()
        assert first == second
        assert first["summary"]["total"] == 12
        assert first["summary"]["all_agree"] is True
        keys = [(c["lambda"], c["mu"]) for c in first["cases"]]
        assert keys == sorted(keys)

    def test_case_list(self):
        cases = SweepService.two_factor_cases(2, 1, 100)
        assert ((1, 0), (0, -1)) in cases
        assert all(lam[1] == 0 for lam, _ in cases)

    def test_empty_range(self):
        payload, ok = Pipeline(config(Command.SWEEP, n=2, width=1, max_dim=0), verbose=False).run()
        assert ok
        assert payload["cases"] == []
        assert payload["summary"]["total"] == 0

    def test_sampled_gl3_is_reproducible(self):
        cfg = config(Command.SWEEP, n=3, width=1, samples=3, max_dim=9, seed=7)
        service = SweepService(verbose=False)
        assert service.cases(cfg) == service.cases(cfg)
        report = service.run(cfg)
        assert len(report.cases) == 3
        assert report.agree

    def test_three_factors(self):
        cfg = config(Command.SWEEP, n=2, width=1, samples=4, max_dim=8, factors=3, seed=1, burnside=True)
        payload = SweepService(verbose=False).run(cfg).to_dict()
        assert payload["summary"]["total"] == 4
        assert payload["summary"]["all_agree"] is True
        assert all("weights" in c for c in payload["cases"])

    @pytest.mark.parametrize("q_text", ["2", "3", "5/7"])
    def test_verdicts_do_not_depend_on_q(self, q_text):
        case = run_sweep_case(q_text, ((1, 0), (0, -1)), True, False)
        assert case.oracle.value == "reducible"
        assert case.burnside is False
        assert case.agree

    def test_case_error_is_recorded(self):
        case = run_sweep_case("3/2", ((1, 0), (1, 0, 0)), False, False)
        assert case.error is not None
        assert not case.agree


class TestSuiteRanges:
    """Suites exécutées sur toute une boîte de poids."""

    def test_relations_gl2(self):
        cfg = config(Command.VERIFY, n=2, suite=Suite.RELATIONS, all_weights=True, width=3, max_dim=200)
        payload, ok = Pipeline(cfg, verbose=False).run()
        assert ok
        assert [c["lambda"] for c in payload["details"]["cases"]] == [[3, 0], [2, 0], [1, 0], [0, 0]]
        assert payload["checked"]["highest_vector_unique"] == 4
        assert payload["checked"]["qdet_highest_eigenvalue"] == 4

    @pytest.mark.parametrize("n, width, expected", [(3, 2, 6), (4, 1, 4)])
    def test_relations_higher_rank(self, n, width, expected):
        cfg = config(Command.VERIFY, n=n, suite=Suite.RELATIONS, all_weights=True, width=width, max_dim=200)
        payload, ok = Pipeline(cfg, verbose=False).run()
        assert ok
        assert len(payload["details"]["cases"]) == expected
        assert payload["checked"]["qdet_scalar"] == expected

    def test_max_dim_filters_weights(self):
        cfg = config(Command.VERIFY, n=3, suite=Suite.GT, all_weights=True, width=2, max_dim=3)
        subjects = SuiteRangeService.subjects(cfg)
        assert [lam.entries for lam, _ in subjects] == [(1, 1, 0), (1, 0, 0), (0, 0, 0)]

    @pytest.mark.parametrize("suite, n, width", [
        (Suite.MINORS, 2, 3),
        (Suite.GT, 3, 2),
    ])
    def test_minors_and_gt(self, suite, n, width):
        cfg = config(Command.VERIFY, n=n, suite=suite, all_weights=True, width=width, max_dim=50, max_instances=4)
        payload, ok = Pipeline(cfg, verbose=False).run()
        assert ok
        assert all(c["ok"] and c["total"] > 0 for c in payload["details"]["cases"])
        assert payload["subject"]["all"] is True

    def test_theta_on_reducible_pairs(self):
        cfg = config(Command.VERIFY, n=2, suite=Suite.THETA, all_weights=True, width=2, max_dim=200)
        payload, ok = Pipeline(cfg, verbose=False).run()
        assert ok
        cases = payload["details"]["cases"]
        assert len(cases) == 7
        assert {"lambda": [1, 0], "mu": [2, 1], "ok": True, "total": 4} in cases
        assert payload["checked"]["theta_singular"] == 7
