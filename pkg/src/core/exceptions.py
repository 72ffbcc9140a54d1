"""
Exceptions personnalisées de la bibliothèque.

Un résultat mathématique (module réductible, identité en échec) n'est jamais
une exception: il est rapporté comme donnée. Les exceptions signalent une
entrée invalide, une garde dépassée ou un bug.
"""

import logging
from enum import Enum
from typing import ClassVar, Optional

logger = logging.getLogger(__name__)


class ErrorType(Enum):
    """Types d'erreurs."""
    ARITHMETIC = "arithmetic"
    LINALG = "linalg"
    PATTERN = "pattern"
    REPRESENTATION = "representation"
    MODULE = "module"
    CRITERION = "criterion"
    ORACLE = "oracle"
    CONFIGURATION = "configuration"
    VALIDATION = "validation"
    UNKNOWN = "unknown"


class QYLError(Exception):
    """Exception de base de la bibliothèque."""

    log_level: ClassVar[int] = logging.ERROR

    def __init__(
        self,
        error_type: ErrorType,
        message: str,
        original_error: Optional[Exception] = None,
        details: Optional[dict] = None,
    ):
        """
        Args:
            error_type: Type d'erreur
            message: Message d'erreur
            original_error: Exception d'origine (optionnel)
            details: Contexte du cas (poids, dimensions...)
        """
        self.error_type = error_type
        self.message = message
        self.original_error = original_error
        self.details = details or {}
        super().__init__(message)

        logger.log(
            self.log_level,
            f"{error_type.value}: {message}",
            exc_info=original_error,
            extra={"error_type": error_type.value, "details": self.details},
        )

    def __str__(self) -> str:
        text = f"[{self.error_type.value}] {self.message}"
        if self.original_error:
            text += f" (Original: {type(self.original_error).__name__})"
        return text


class _TypedError(QYLError):
    """Base des erreurs dont le type est fixé par la classe."""

    error_kind: ClassVar[ErrorType] = ErrorType.UNKNOWN

    def __init__(self, message: str, details: Optional[dict] = None, original_error: Optional[Exception] = None):
        super().__init__(self.error_kind, message, original_error, details)


class ArithmeticDomainError(_TypedError):
    """Opération arithmétique hors de son domaine (q invalide, polynôme attendu...)."""
    error_kind = ErrorType.ARITHMETIC


class DimensionError(_TypedError):
    """Dimensions de matrices incompatibles."""
    error_kind = ErrorType.LINALG


class PatternError(_TypedError):
    """Poids dominant invalide ou décalage de motif hors des bornes."""
    error_kind = ErrorType.PATTERN


class CaseDataError(_TypedError):
    """Données de cas incompatibles avec la construction du vecteur singulier."""
    error_kind = ErrorType.MODULE


class GuardError(_TypedError):
    """Garde de dimension dépassée; le calcul est sauté, pas faux."""
    error_kind = ErrorType.ORACLE
    log_level = logging.WARNING


class InvariantFailure(_TypedError):
    """Invariant interne violé: signale un bug, pas un cas mathématique."""
    error_kind = ErrorType.REPRESENTATION


class ConfigurationError(_TypedError):
    """Erreur de configuration."""
    error_kind = ErrorType.CONFIGURATION

    def __init__(self, message: str, original_error: Optional[Exception] = None):
        super().__init__(message, original_error=original_error)


class ValidationError(_TypedError):
    """Entrée utilisateur invalide (code de sortie 2 en ligne de commande)."""
    error_kind = ErrorType.VALIDATION
    log_level = logging.WARNING

    def __init__(self, message: str, field: Optional[str] = None, original_error: Optional[Exception] = None):
        super().__init__(message, {"field": field} if field else None, original_error)
