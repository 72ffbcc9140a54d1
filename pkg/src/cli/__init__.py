"""
Module CLI - Interface en ligne de commande.
"""

from .cli import build_parser, config_from_args, main

__all__ = ["build_parser", "config_from_args", "main"]
