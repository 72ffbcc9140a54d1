"""
Fixtures partagées: q par défaut et petits modules construits une fois.
"""

import logging

import pytest

from src.arith.rational import QValue
from src.core.config import settings
from src.gt.patterns import HighestWeight
from src.pipeline.services import eval_module, tensor_module


def hw(*entries: int) -> HighestWeight:
    return HighestWeight(entries)


@pytest.fixture
def q() -> QValue:
    return QValue.parse("3/2")


@pytest.fixture
def restore_settings():
    """Rétablit debug et max_workers après un test qui les modifie."""
    previous = settings.debug, settings.max_workers
    yield settings
    settings.debug, settings.max_workers = previous


@pytest.fixture
def debug(restore_settings):
    restore_settings.debug = True
    yield


@pytest.fixture
def root_handlers():
    """Rétablit les handlers du logger racine après un setup_logging."""
    root = logging.getLogger()
    saved, level = list(root.handlers), root.level
    yield root
    for handler in root.handlers:
        if handler not in saved:
            handler.close()
    root.handlers[:] = saved
    root.setLevel(level)


@pytest.fixture(scope="session")
def L10():
    """L_1(1,0) pour gl_2."""
    return eval_module(hw(1, 0), QValue.parse("3/2"))


@pytest.fixture(scope="session")
def L210():
    """L_1(2,1,0) pour gl_3, dimension 8."""
    return eval_module(hw(2, 1, 0), QValue.parse("3/2"))


@pytest.fixture(scope="session")
def L10_L10():
    return tensor_module([hw(1, 0), hw(1, 0)], QValue.parse("3/2"))


@pytest.fixture(scope="session")
def L10_L0m1():
    """Paire réductible L(1,0) ⊗ L(0,−1)."""
    return tensor_module([hw(1, 0), hw(0, -1)], QValue.parse("3/2"))


@pytest.fixture(scope="session")
def L0m1_L10():
    return tensor_module([hw(0, -1), hw(1, 0)], QValue.parse("3/2"))
