"""
Classe principale du pipeline - Orchestration des services.
"""

from dataclasses import replace
from typing import Optional, Tuple

from ..core import ErrorType, QYLError, ValidationError, get_logger

from .models import Command, RunConfig, Suite
from .services import SUITES, CheckService, ExportService, OracleService, SuiteRangeService, SweepService

logger = get_logger(__name__)


class Pipeline:
    """
    Pipeline principal: associe chaque commande à son service.
    """

    def __init__(self, config: RunConfig, verbose: bool = True):
        """
        Initialise le pipeline.

        Args:
            config: Configuration de l'exécution
            verbose: Afficher la progression des balayages
        """
        self.config = config
        self.check_service = CheckService()
        self.oracle_service = OracleService()
        self.sweep_service = SweepService(verbose=verbose)
        self.export_service = ExportService()
        self.range_service = SuiteRangeService(verbose=verbose)

    def run(self) -> Tuple[dict, bool]:
        """
        Exécute la commande configurée.

        Returns:
            Tuple (charge utile JSON, succès); le succès est faux pour une
            suite en échec ou un balayage en désaccord

        Raises:
            QYLError: Toute erreur, les exceptions inattendues étant enveloppées
        """
        command = self.config.command
        logger.info(f"Commande {command.value} (q={self.config.q})")
        try:
            if command is Command.CHECK:
                return self.check_service.check(self.config).to_dict(), True
            if command is Command.ORACLE:
                report = self.oracle_service.run(self.config)
                return report.to_dict(), True
            if command is Command.SWEEP:
                report = self.sweep_service.run(self.config)
                return report.to_dict(), report.agree
            if command is Command.VERIFY:
                report = self.verify()
                return report.to_dict(), report.ok
            return self.export_service.export(self.config), True
        except QYLError:
            raise
        except Exception as e:
            raise QYLError(
                ErrorType.UNKNOWN,
                f"Erreur inattendue pendant {command.value}: {e}",
                original_error=e,
            )

    def verify(self, suite: Optional[str] = None):
        """Exécute une suite de vérification, sur un poids ou sur toute une boîte."""
        chosen = suite or self.config.suite
        if chosen is None:
            raise ValidationError("--suite est requis pour verify", field="suite")
        chosen = Suite(chosen)
        if self.config.all_weights:
            report = self.range_service.run(replace(self.config, suite=chosen))
        else:
            report = SUITES[chosen].run(self.config)
        if report.ok:
            logger.info(f"Suite {report.suite.value}: {sum(report.checked.values())} contrôles réussis")
        else:
            logger.warning(f"Suite {report.suite.value}: {len(report.failures)} échec(s)")
        return report
