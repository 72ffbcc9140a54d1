"""Progression des balayages sur stderr, avec le compte des désaccords."""

import sys
from typing import Optional, TextIO


class ProgressBar:
    """
    Suit l'avancement d'un balayage cas par cas.

    Sur un terminal la ligne est réécrite à chaque cas; sinon une ligne est
    émise tous les 10 %. Le suffixe affiche le nombre de désaccords
    critère/oracle rencontrés jusque-là.
    """

    def __init__(
        self,
        total: int,
        prefix: str = "",
        width: int = 32,
        enabled: bool = True,
        stream: Optional[TextIO] = None,
    ):
        self.total = total
        self.prefix = prefix
        self.width = width
        self.stream = stream or sys.stderr
        self.enabled = enabled and total > 0
        self.interactive = self.enabled and self.stream.isatty()
        self.done = 0
        self.disagreements = 0
        self._next_step = 0

    def advance(self, agree: bool = True) -> None:
        """Compte un cas terminé."""
        self.done = min(self.done + 1, self.total)
        if not agree:
            self.disagreements += 1
        self._render()

    def _status(self) -> str:
        pct = 100 * self.done // max(self.total, 1)
        status = f"{self.done}/{self.total} ({pct}%)"
        if self.disagreements:
            status += f" désaccords: {self.disagreements}"
        return status

    def _render(self) -> None:
        if not self.enabled:
            return
        if self.interactive:
            filled = self.width * self.done // self.total
            bar = ("=" * filled + ">").ljust(self.width)[: self.width]
            self.stream.write(f"\r  {self.prefix} [{bar}] {self._status()}".ljust(100))
        else:
            pct = 100 * self.done // self.total
            if pct < self._next_step and self.done < self.total:
                return
            self._next_step = pct - pct % 10 + 10
            self.stream.write(f"  {self.prefix}: {self._status()}\n")
        self.stream.flush()

    def finish(self) -> None:
        """Termine la ligne interactive."""
        if self.interactive:
            self.stream.write("\n")
            self.stream.flush()
