"""
Tests de la ligne de commande: sorties JSON et codes de sortie.
"""

import json

import pytest

from src.cli import build_parser, main
from src.cli.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE


@pytest.fixture(autouse=True)
def _isolate_logging(root_handlers):
    yield


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


class TestCheck:

    def test_reducible_pair(self, capsys):
        code, out = run(capsys, "check", "--lambda", "1,0", "--mu", "0,-1")
        assert code == EXIT_OK
        assert out["verdict"] == "reducible"
        assert out["witness"] == [-2, -1, 0, 1]

    def test_generic_ratio(self, capsys):
        code, out = run(capsys, "check", "--q", "2", "--lambda", "1,0", "--mu", "1,0", "--b", "8")
        assert code == EXIT_OK
        assert out["verdict"] == "irreducible"
        assert out["reason"] == "ratio not in q^{2Z}"

    def test_sorted_keys(self, capsys):
        main(["check", "--lambda", "2,0", "--mu", "1,0"])
        text = capsys.readouterr().out
        assert text.index('"lambda"') < text.index('"mu"') < text.index('"verdict"')

    def test_debug_flag(self, capsys, restore_settings):
        code, out = run(capsys, "check", "--lambda", "1,0", "--mu", "1,0", "--debug")
        assert code == EXIT_OK
        assert out["pairwise"] == "irreducible"


class TestUsageErrors:

    @pytest.mark.parametrize("argv", [
        ["check", "--lambda", "0,1", "--mu", "0,0"],
        ["check", "--lambda", "1,x", "--mu", "0,0"],
        ["check", "--n", "3", "--lambda", "1,0", "--mu", "0,-1"],
        ["check", "--q", "1", "--lambda", "1,0", "--mu", "0,-1"],
        ["check", "--a", "0", "--lambda", "1,0", "--mu", "0,-1"],
        ["check", "--lambda", "1,0"],
        ["sweep", "--factors", "1"],
        ["verify", "--suite", "gt", "--all", "--lambda", "1,0"],
    ])
    def test_exit_usage(self, capsys, argv):
        code, out = run(capsys, *argv)
        assert code == EXIT_USAGE
        assert out is None

    def test_unknown_suite(self):
        with pytest.raises(SystemExit) as exc:
            build_parser().parse_args(["verify", "--suite", "unknown", "--lambda", "1,0"])
        assert exc.value.code == 2


class TestCommands:

    def test_verify_relations(self, capsys):
        code, out = run(capsys, "verify", "--suite", "relations", "--lambda", "1,0")
        assert code == EXIT_OK
        assert out["ok"] is True

    def test_verify_theta(self, capsys):
        code, out = run(capsys, "verify", "--suite", "theta", "--n", "2", "--lambda", "0,-1", "--mu", "1,0")
        assert code == EXIT_OK
        assert out["checked"]["theta_singular"] == 1
        assert out["details"]["cases"][0]["swapped"] is False

    def test_verify_all_weights(self, capsys):
        code, out = run(capsys, "verify", "--suite", "theta", "--all", "--n", "2", "--width", "2")
        assert code == EXIT_OK
        assert out["subject"] == {"command": "verify", "q": "3/2", "n": 2, "all": True, "width": 2, "max_dim": 200}
        assert len(out["details"]["cases"]) == 7

    def test_theta_on_irreducible_pair_fails(self, capsys):
        code, out = run(capsys, "verify", "--suite", "theta", "--lambda", "1,0", "--mu", "1,0")
        assert code == EXIT_FAILURE
        assert out is None

    def test_oracle(self, capsys):
        code, out = run(capsys, "oracle", "--lambda", "2,0", "--mu", "1,0")
        assert code == EXIT_OK
        assert out["irreducible"] is True
        assert out["agree"] is True

    def test_sweep(self, capsys):
        code, out = run(capsys, "sweep", "--n", "2", "--width", "1")
        assert code == EXIT_OK
        assert out["summary"]["all_agree"] is True
        assert out["summary"]["total"] == len(out["cases"]) == 12

    def test_sweep_with_workers(self, capsys, restore_settings):
        _, sequential = run(capsys, "sweep", "--n", "2", "--width", "1")
        _, parallel = run(capsys, "sweep", "--n", "2", "--width", "1", "--workers", "2")
        assert parallel == sequential

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out = run(capsys, "export", "--lambda", "1,0", "--out", str(target))
        assert code == EXIT_OK
        assert out is None
        data = json.loads(target.read_text(encoding="utf-8"))
        assert data["module"]["dimension"] == 2
