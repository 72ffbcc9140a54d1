"""
Orchestration entre la ligne de commande et le calcul.
"""

from .pipeline import Pipeline
from .services import (
    SUITES,
    CheckService,
    ExportService,
    OracleService,
    SuiteRangeService,
    SweepService,
    eval_module,
    run_sweep_case,
    tensor_module,
)
from .models import (
    CheckReport,
    Command,
    OracleReport,
    RunConfig,
    Suite,
    SuiteReport,
    SweepCase,
    SweepReport,
)

__all__ = [
    "Pipeline",
    "SUITES",
    "CheckService",
    "ExportService",
    "OracleService",
    "SuiteRangeService",
    "SweepService",
    "eval_module",
    "run_sweep_case",
    "tensor_module",
    "CheckReport",
    "Command",
    "OracleReport",
    "RunConfig",
    "Suite",
    "SuiteReport",
    "SweepCase",
    "SweepReport",
]
