"""
Tests du socle: configuration, exceptions, logging et progression.
"""

import io
import logging
from fractions import Fraction
from logging.handlers import RotatingFileHandler

import pydantic
import pytest

from src.core import (
    ConfigurationError,
    ErrorType,
    GuardError,
    ProgressBar,
    QYLError,
    Settings,
    ValidationError,
    setup_logging,
    setup_logging_from_settings,
)


class TestSettings:

    def test_q_is_parsed(self):
        assert Settings(q=" 2/3 ").q_value().value == Fraction(2, 3)

    @pytest.mark.parametrize("q", ["0", "1", "-1", "abc", "1/0"])
    def test_rejects_degenerate_q(self, q):
        with pytest.raises(pydantic.ValidationError):
            Settings(q=q)

    def test_bounds_are_validated(self):
        with pytest.raises(pydantic.ValidationError):
            Settings(burnside_bound=0)
        with pytest.raises(pydantic.ValidationError):
            Settings(max_workers=0)

    def test_environment_prefix(self, monkeypatch):
        monkeypatch.setenv("QYL_BURNSIDE_BOUND", "12")
        monkeypatch.setenv("QYL_REPORTS_DIR", "out/json")
        s = Settings()
        assert s.burnside_bound == 12
        assert s.reports_dir.parts == ("out", "json")


class TestErrors:

    def test_message_carries_type(self):
        err = GuardError("burnside bound", details={"dimension": 40, "bound": 36})
        assert str(err) == "[oracle] burnside bound"
        assert err.details["bound"] == 36
        assert isinstance(err, QYLError)

    def test_validation_field(self):
        err = ValidationError("poids non dominant", field="lambda")
        assert err.error_type is ErrorType.VALIDATION
        assert err.details == {"field": "lambda"}

    def test_original_error_is_named(self):
        err = ConfigurationError("q invalide", original_error=ZeroDivisionError())
        assert str(err).endswith("(Original: ZeroDivisionError)")


class TestLogging:

    def test_single_stderr_handler(self, root_handlers):
        setup_logging("bogus")
        assert root_handlers.level == logging.INFO
        assert len(root_handlers.handlers) == 1
        assert logging.getLogger("hypothesis").level == logging.WARNING

    def test_rotating_file(self, root_handlers, tmp_path):
        log_file = tmp_path / "logs" / "qyl.log"
        setup_logging("DEBUG", log_file=log_file)
        assert root_handlers.level == logging.DEBUG
        assert any(isinstance(h, RotatingFileHandler) for h in root_handlers.handlers)
        logging.getLogger("src.test").debug("écrit")
        for handler in root_handlers.handlers:
            handler.flush()
        assert "écrit" in log_file.read_text(encoding="utf-8")

    def test_process_name_with_workers(self, root_handlers):
        setup_logging_from_settings(Settings(max_workers=4))
        assert "processName" in root_handlers.handlers[0].formatter._fmt
        setup_logging_from_settings(Settings(max_workers=1))
        assert "processName" not in root_handlers.handlers[0].formatter._fmt


class TestProgressBar:

    def test_lines_every_ten_percent(self):
        stream = io.StringIO()
        bar = ProgressBar(4, prefix="Balayage", stream=stream)
        for agree in (True, False, True, True):
            bar.advance(agree)
        bar.finish()
        lines = stream.getvalue().splitlines()
        assert len(lines) == 4
        assert lines[-1] == "  Balayage: 4/4 (100%) désaccords: 1"
        assert bar.disagreements == 1

    def test_disabled(self):
        stream = io.StringIO()
        bar = ProgressBar(3, stream=stream, enabled=False)
        bar.advance(False)
        assert stream.getvalue() == ""

    def test_empty_total(self):
        stream = io.StringIO()
        ProgressBar(0, stream=stream).advance()
        assert stream.getvalue() == ""
