"""
Rapport de vérification partagé par les suites de relations et d'identités.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class RelationReport:
    """Décompte des relations vérifiées et liste des échecs."""

    checked: Dict[str, int] = field(default_factory=dict)
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, relation: str, holds: bool, **detail: Any) -> None:
        self.checked[relation] = self.checked.get(relation, 0) + 1
        if not holds:
            self.failures.append({"relation": relation, **detail})

    def merge(self, other: "RelationReport") -> "RelationReport":
        for name, count in other.checked.items():
            self.checked[name] = self.checked.get(name, 0) + count
        self.failures.extend(other.failures)
        return self

    @property
    def total(self) -> int:
        return sum(self.checked.values())

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checked": dict(sorted(self.checked.items())),
            "total": self.total,
            "failures": self.failures,
        }
