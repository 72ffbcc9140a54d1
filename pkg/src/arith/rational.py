"""
Scalaires exacts: rationnels, paramètre de déformation q et q-entiers.

Les rationnels sont des ``fractions.Fraction`` (toujours réduits, dénominateur
positif). Aucun flottant n'intervient.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from ..core.exceptions import ArithmeticDomainError, ValidationError

RationalLike = Union[Fraction, int, str]


def parse_rational(text: RationalLike) -> Fraction:
    """
    Convertit "p/q", "p" ou un entier en Fraction.

    Args:
        text: Représentation du rationnel

    Returns:
        Fraction exacte

    Raises:
        ValidationError: Si la chaîne n'est pas un rationnel
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"Rationnel invalide: {text!r}", field="rational", original_error=e)


def format_rational(value: Fraction) -> str:
    """Sérialise un rationnel en "p/q" (ou "p" si q=1), signe au numérateur."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@lru_cache(maxsize=4096)
def _power(value: Fraction, k: int) -> Fraction:
    return value ** k


@lru_cache(maxsize=4096)
def _q_int(value: Fraction, m: int) -> Fraction:
    return (value ** m - value ** (-m)) / (value - 1 / value)


@dataclass(frozen=True)
class QValue:
    """Paramètre de déformation q, rationnel hors de {0, 1, -1}."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value in (0, 1, -1):
            raise ArithmeticDomainError(
                f"q invalide: {format_rational(self.value)} (doit éviter 0, 1 et -1)",
                details={"q": format_rational(self.value)},
            )

    @classmethod
    def parse(cls, text: RationalLike) -> "QValue":
        """Construit q depuis "p/q"."""
        return cls(parse_rational(text))

    def power(self, k: int) -> Fraction:
        """q^k exact."""
        return _power(self.value, k)

    def q_int(self, m: int) -> Fraction:
        """q-entier [m] = (q^m - q^{-m}) / (q - q^{-1})."""
        return _q_int(self.value, m)

    @property
    def q_minus_inv(self) -> Fraction:
        """q - q^{-1}, facteur omniprésent des générateurs."""
        return self.value - 1 / self.value

    def __str__(self) -> str:
        return format_rational(self.value)


def q_power(q: QValue, k: int) -> Fraction:
    """Fonction libre équivalente à ``q.power(k)``."""
    return q.power(k)


def q_int(q: QValue, m: int) -> Fraction:
    """Fonction libre équivalente à ``q.q_int(m)``."""
    return q.q_int(m)


def q_power_exponent(ratio: Fraction, base: Fraction) -> Union[int, None]:
    """
    Cherche k entier tel que ratio = base^k, par comparaison exacte.

    Seuls les |k| compatibles avec la taille binaire de ratio sont essayés:
    si base = P/Q réduit avec P != Q, alors |k| <= taille binaire du numérateur
    et du dénominateur de ratio.

    Args:
        ratio: Rationnel non nul à tester
        base: Base rationnelle hors de {0, 1, -1}

    Returns:
        k si ratio est une puissance entière de base, sinon None
    """
    ratio = Fraction(ratio)
    base = Fraction(base)
    if ratio == 0:
        raise ArithmeticDomainError("Rapport nul: aucune puissance de q ne convient")
    if ratio == 1:
        return 0
    bound = max(ratio.numerator.bit_length(), ratio.denominator.bit_length()) + 1
    for k in range(1, bound + 1):
        if base ** k == ratio:
            return k
        if base ** (-k) == ratio:
            return -k
    return None
