"""
Module core contenant les éléments fondamentaux de la bibliothèque.
"""

from .config import Settings, settings
from .logging_config import setup_logging, setup_logging_from_settings, get_logger
from .exceptions import (
    QYLError,
    ErrorType,
    ArithmeticDomainError,
    DimensionError,
    PatternError,
    CaseDataError,
    GuardError,
    InvariantFailure,
    ConfigurationError,
    ValidationError,
)
from .progress import ProgressBar

__all__ = [
    "Settings",
    "settings",
    "setup_logging",
    "setup_logging_from_settings",
    "get_logger",
    "QYLError",
    "ErrorType",
    "ArithmeticDomainError",
    "DimensionError",
    "PatternError",
    "CaseDataError",
    "GuardError",
    "InvariantFailure",
    "ConfigurationError",
    "ValidationError",
    "ProgressBar",
]
