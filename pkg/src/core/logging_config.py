"""
Configuration du système de logging structuré.

La sortie standard est réservée aux rapports JSON: les logs partent sur stderr.
Les balayages parallèles forkent des processus de calcul; leurs messages
portent alors le nom du processus.
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Iterable, Optional

_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
_FORMAT_WORKERS = "%(asctime)s - %(processName)s - %(name)s - %(levelname)s - %(message)s"
_DATEFMT = "%Y-%m-%d %H:%M:%S"

QUIET_LIBRARIES = ("hypothesis",)


def setup_logging(
    level: str = "INFO",
    log_file: Optional[Path] = None,
    *,
    with_process: bool = False,
    quiet: Iterable[str] = QUIET_LIBRARIES,
    max_bytes: int = 10 * 1024 * 1024,
    backup_count: int = 5,
) -> None:
    """
    Configure le logger racine.

    Args:
        level: Niveau (DEBUG, INFO, WARNING, ERROR); inconnu -> INFO
        log_file: Fichier avec rotation en plus de stderr (None = stderr seul)
        with_process: Ajoute le nom du processus au format (balayages parallèles)
        quiet: Loggers de bibliothèques ramenés à WARNING
        max_bytes: Taille du fichier avant rotation
        backup_count: Nombre de fichiers conservés
    """
    numeric_level = logging.getLevelName(level.upper())
    if not isinstance(numeric_level, int):
        numeric_level = logging.INFO
    formatter = logging.Formatter(_FORMAT_WORKERS if with_process else _FORMAT, datefmt=_DATEFMT)

    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(RotatingFileHandler(
            log_file, maxBytes=max_bytes, backupCount=backup_count, encoding="utf-8",
        ))

    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    root_logger.setLevel(numeric_level)
    for handler in handlers:
        handler.setFormatter(formatter)
        handler.setLevel(numeric_level)
        root_logger.addHandler(handler)

    for name in quiet:
        logging.getLogger(name).setLevel(logging.WARNING)


def setup_logging_from_settings(config) -> None:
    """Configure le logging depuis un objet Settings."""
    workers = config.max_workers or 1
    setup_logging(level=config.log_level, log_file=config.log_file, with_process=workers > 1)


def get_logger(name: str) -> logging.Logger:
    """Logger d'un module (passer ``__name__``)."""
    return logging.getLogger(name)
