"""
Modèles de données pour le pipeline.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from ..arith.rational import QValue, format_rational
from ..criterion.sets import Verdict
from ..gt.patterns import HighestWeight


class Command(str, Enum):
    """Sous-commandes disponibles."""
    CHECK = "check"
    ORACLE = "oracle"
    SWEEP = "sweep"
    VERIFY = "verify"
    EXPORT = "export"


class Suite(str, Enum):
    """Suites de vérification de la commande verify."""
    RELATIONS = "relations"
    RTT = "rtt"
    MINORS = "minors"
    GT = "gt"
    THETA = "theta"


@dataclass
class RunConfig:
    """Configuration d'une exécution."""
    command: Command
    q: QValue
    n: Optional[int] = None
    lam: Optional[HighestWeight] = None
    mu: Optional[HighestWeight] = None

    # Paramètres généraux des deux facteurs
    a: Fraction = Fraction(1)
    b: Fraction = Fraction(1)
    h: Fraction = Fraction(1)
    hp: Fraction = Fraction(1)
    eps: Tuple[int, ...] = ()
    epsp: Tuple[int, ...] = ()

    # verify
    suite: Optional[Suite] = None
    max_instances: Optional[int] = None
    all_weights: bool = False

    # sweep
    width: int = 4
    samples: int = 100
    max_dim: int = 1000
    factors: int = 2
    seed: int = 0
    burnside: bool = False

    # Sortie
    out: Optional[Path] = None
    debug: bool = False

    def to_dict(self) -> dict:
        out: Dict[str, Any] = {"command": self.command.value, "q": format_rational(self.q.value)}
        if self.n is not None:
            out["n"] = self.n
        if self.lam is not None:
            out["lambda"] = list(self.lam.entries)
        if self.mu is not None:
            out["mu"] = list(self.mu.entries)
        if self.all_weights:
            out.update({"all": True, "width": self.width, "max_dim": self.max_dim})
        return out


@dataclass
class CheckReport:
    """Verdict du critère pour deux facteurs."""
    lam: HighestWeight
    mu: HighestWeight
    verdict: Verdict
    witness: Optional[Tuple[int, ...]] = None
    reason: Optional[str] = None
    reduction: Optional[dict] = None
    pairwise: Optional[Verdict] = None

    def to_dict(self) -> dict:
        out: Dict[str, Any] = {
            "lambda": list(self.lam.entries),
            "mu": list(self.mu.entries),
            "verdict": self.verdict.value,
        }
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.reason:
            out["reason"] = self.reason
        if self.reduction is not None:
            out["reduction"] = self.reduction
        if self.pairwise is not None:
            out["pairwise"] = self.pairwise.value
        return out


@dataclass
class OracleReport:
    """Verdict de l'oracle, accompagné du verdict du critère."""
    lam: HighestWeight
    mu: HighestWeight
    dimension: int
    oracle: dict
    criterion: Verdict

    @property
    def agree(self) -> bool:
        return self.oracle["irreducible"] == (self.criterion is Verdict.IRREDUCIBLE)

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam.entries),
            "mu": list(self.mu.entries),
            "dimension": self.dimension,
            **self.oracle,
            "criterion": self.criterion.value,
            "agree": self.agree,
        }


@dataclass
class SweepCase:
    """Un cas de balayage: critère, condition par paires et oracle."""
    weights: Tuple[Tuple[int, ...], ...]
    criterion: Verdict
    oracle: Optional[Verdict]
    pairwise: Optional[Verdict] = None
    dimension: int = 0
    singular_dim: Optional[int] = None
    cyclic_from_top: Optional[bool] = None
    burnside: Optional[bool] = None
    error: Optional[str] = None

    @property
    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return self.weights

    @property
    def agree(self) -> bool:
        if self.error is not None or self.oracle is None:
            return False
        agree = self.criterion is self.oracle
        if self.pairwise is not None:
            agree = agree and self.pairwise is self.criterion
        if self.burnside is not None:
            agree = agree and self.burnside == (self.oracle is Verdict.IRREDUCIBLE)
        return agree

    def to_dict(self) -> dict:
        out: Dict[str, Any] = {
            "criterion": self.criterion.value,
            "oracle": self.oracle.value if self.oracle else None,
            "agree": self.agree,
            "dimension": self.dimension,
        }
        if len(self.weights) == 2:
            out["lambda"], out["mu"] = list(self.weights[0]), list(self.weights[1])
        else:
            out["weights"] = [list(w) for w in self.weights]
        for name in ("singular_dim", "cyclic_from_top", "burnside", "error"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        if self.pairwise is not None:
            out["pairwise"] = self.pairwise.value
        return out


@dataclass
class SweepReport:
    """Rapport de balayage, trié par clé de cas."""
    q: QValue
    n: int
    factors: int
    seed: Optional[int] = None
    cases: List[SweepCase] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return all(c.agree for c in self.cases)

    def matrix(self) -> Dict[str, int]:
        """Comptage critère/oracle."""
        counts: Dict[str, int] = {}
        for c in self.cases:
            key = f"{c.criterion.value}/{c.oracle.value if c.oracle else 'error'}"
            counts[key] = counts.get(key, 0) + 1
        return counts

    def to_dict(self) -> dict:
        cases = sorted(self.cases, key=lambda c: c.key)
        return {
            "q": format_rational(self.q.value),
            "n": self.n,
            "factors": self.factors,
            "seed": self.seed,
            "cases": [c.to_dict() for c in cases],
            "summary": {
                "total": len(cases),
                "agree": sum(1 for c in cases if c.agree),
                "all_agree": self.agree,
                "matrix": self.matrix(),
            },
        }


@dataclass
class SuiteReport:
    """Résultat d'une suite de vérification."""
    suite: Suite
    subject: dict
    checked: Dict[str, int] = field(default_factory=dict)
    failures: List[dict] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def absorb(self, report) -> "SuiteReport":
        """Ajoute les compteurs d'un RelationReport."""
        for name, count in report.checked.items():
            self.checked[name] = self.checked.get(name, 0) + count
        self.failures.extend(report.failures)
        return self

    def record(self, name: str, holds: bool, **detail: Any) -> None:
        self.checked[name] = self.checked.get(name, 0) + 1
        if not holds:
            self.failures.append({"relation": name, **detail})

    def to_dict(self) -> dict:
        return {
            "suite": self.suite.value,
            "subject": self.subject,
            "ok": self.ok,
            "checked": dict(sorted(self.checked.items())),
            "total": sum(self.checked.values()),
            "failures": self.failures,
            **({"details": self.details} if self.details else {}),
        }
