"""
Polynômes de Laurent en la variable spectrale u, à coefficients rationnels.

Stockage creux: dictionnaire exposant -> Fraction, sans coefficient nul.
Les instances sont immuables.
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from ..core.exceptions import ArithmeticDomainError, ValidationError
from .rational import format_rational, parse_rational

Scalar = Union[Fraction, int]


class LaurentPoly:
    """Polynôme de Laurent creux et immuable."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Optional[Mapping[int, Scalar]] = None):
        cleaned: Dict[int, Fraction] = {}
        if coeffs:
            for exp, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    cleaned[int(exp)] = c
        self._coeffs = cleaned
        self._hash = None

    # ----- constructeurs -----

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Scalar, exp: int) -> "LaurentPoly":
        """c·u^exp."""
        return cls({exp: c})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    # ----- accès -----

    def coefficient(self, exp: int) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """Couples (exposant, coefficient) par exposant croissant."""
        return iter(sorted(self._coeffs.items()))

    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_exponent(self) -> Optional[int]:
        return min(self._coeffs) if self._coeffs else None

    def max_exponent(self) -> Optional[int]:
        return max(self._coeffs) if self._coeffs else None

    def is_polynomial(self) -> bool:
        """Vrai si aucun exposant négatif."""
        return all(e >= 0 for e in self._coeffs)

    # ----- arithmétique -----

    def __add__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        other = _coerce(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        out: Dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "LaurentPoly":
        c = Fraction(c)
        return LaurentPoly({e: c * v for e, v in self._coeffs.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiplie par u^k."""
        return LaurentPoly({e + k: v for e, v in self._coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    # ----- opérations du calcul -----

    def scale_arg(self, c: Scalar) -> "LaurentPoly":
        """Substitution u -> c·u: le coefficient d'exposant e est multiplié par c^e."""
        c = Fraction(c)
        if c == 0:
            raise ArithmeticDomainError("scale_arg: facteur nul")
        return LaurentPoly({e: v * c ** e for e, v in self._coeffs.items()})

    def derivative(self) -> "LaurentPoly":
        """Dérivée formelle en u; réservée aux vrais polynômes."""
        if not self.is_polynomial():
            raise ArithmeticDomainError(
                "not a polynomial",
                details={"min_exponent": self.min_exponent()},
            )
        return LaurentPoly({e - 1: e * v for e, v in self._coeffs.items() if e != 0})

    def eval_at(self, x: Scalar) -> Fraction:
        """Valeur exacte en u = x (x non nul)."""
        x = Fraction(x)
        if x == 0:
            raise ArithmeticDomainError("eval_at: point d'évaluation nul")
        return sum((v * x ** e for e, v in self._coeffs.items()), Fraction(0))

    # ----- sérialisation -----

    def to_json(self) -> Dict[str, str]:
        """Objet JSON exposant -> "p/q", exposants croissants."""
        return {str(e): format_rational(v) for e, v in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentPoly":
        try:
            return cls({int(e): parse_rational(v) for e, v in data.items()})
        except ValueError as e:
            raise ValidationError("Polynôme de Laurent mal formé", field="laurent", original_error=e)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "LaurentPoly(0)"
        terms = " + ".join(f"{format_rational(v)}*u^{e}" for e, v in self.items())
        return f"LaurentPoly({terms})"


def _coerce(value: Union[LaurentPoly, Scalar]) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly.constant(value)


class LaurentAction(str, Enum):
    """Actions disponibles dans le calculateur."""
    ADD = "add"
    MULTIPLY = "multiply"
    SCALE_ARG = "scale_arg"
    DERIVATIVE = "derivative"
    EVAL_AT = "eval_at"


def laurent_calc(
    p: LaurentPoly,
    action: LaurentAction,
    operand: Union[LaurentPoly, Scalar, None] = None,
) -> Union[LaurentPoly, Fraction]:
    """
    Applique une action du calculateur à p.

    Args:
        p: Polynôme de départ
        action: Action à effectuer
        operand: Polynôme (add, multiply) ou scalaire (scale_arg, eval_at)

    Returns:
        Polynôme résultat, ou rationnel pour eval_at
    """
    action = LaurentAction(action)
    if action is LaurentAction.DERIVATIVE:
        return p.derivative()
    if operand is None:
        raise ValidationError(f"L'action {action.value} exige un opérande", field="operand")
    if action is LaurentAction.ADD:
        return p + operand
    if action is LaurentAction.MULTIPLY:
        return p * operand
    if action is LaurentAction.SCALE_ARG:
        return p.scale_arg(operand)
    return p.eval_at(operand)
