"""
Interfaces abstraites des services du pipeline.
"""

from abc import ABC, abstractmethod

from .models import RunConfig, SuiteReport


class IVerificationSuite(ABC):
    """Interface d'une suite de vérification."""

    @abstractmethod
    def run(self, config: RunConfig) -> SuiteReport:
        """Exécute la suite sur le sujet décrit par config."""
        pass
