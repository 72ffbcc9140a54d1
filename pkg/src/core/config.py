"""
Configuration centralisée de la bibliothèque avec validation Pydantic.

Toutes les variables d'environnement portent le préfixe QYL_ (ex: QYL_Q=2).
"""

from fractions import Fraction
from pathlib import Path
from typing import Optional
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

_project_root = Path(__file__).parent.parent.parent
_env_file = _project_root / ".env"
if _env_file.exists():
    load_dotenv(_env_file, override=False)
else:
    load_dotenv(override=False)


class Settings(BaseSettings):
    """Configuration centralisée de la bibliothèque."""

    model_config = SettingsConfigDict(
        env_prefix="QYL_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # ===== Paramètre de déformation =====
    q: str = Field(default="3/2", description="Valeur rationnelle de q au format p/q (ni 0, ni 1, ni -1)")

    # ===== Oracle =====
    burnside_bound: int = Field(
        default=36, ge=1,
        description="Dimension maximale autorisée pour le contrôle de Burnside",
    )
    debug: bool = Field(
        default=False,
        description="Contrôles croisés: théorème vs condition par paires, span étendu aux t̄",
    )

    # ===== Balayages =====
    max_workers: Optional[int] = Field(default=None, ge=1, description="Nombre max de processus (None = séquentiel)")
    sweep_seed: int = Field(default=0, description="Graine du tirage aléatoire pour n=3")
    sweep_samples: int = Field(default=100, ge=0, description="Nombre de paires tirées pour n=3")
    reports_dir: Path = Field(default=Path("./reports"), description="Répertoire des rapports JSON relatifs")

    # ===== Logging =====
    log_level: str = Field(default="INFO", description="Niveau de logging")
    log_file: Optional[Path] = Field(default=None, description="Fichier de log (None = console uniquement)")

    @field_validator("q", mode="before")
    @classmethod
    def validate_q(cls, v):
        """Vérifie que q est un rationnel admissible."""
        try:
            value = Fraction(str(v).strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"q invalide: {v!r}") from e
        if value in (0, 1, -1):
            raise ValueError(f"q ne peut valoir 0, 1 ou -1 (reçu {v!r})")
        return str(v).strip()

    @field_validator("reports_dir", "log_file", mode="before")
    @classmethod
    def validate_paths(cls, v):
        """Convertit les strings en Path."""
        if isinstance(v, str):
            return Path(v)
        return v

    def q_value(self):
        """
        Retourne q sous forme de QValue.

        Returns:
            QValue construite depuis le champ q
        """
        from ..arith.rational import QValue

        return QValue.parse(self.q)


# Instance globale de configuration
settings = Settings()
