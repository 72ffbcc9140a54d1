"""
Matrices à coefficients polynômes de Laurent.

Une MatrixL est stockée par décomposition M(u) = Σ_e u^e M_e, chaque M_e
étant une MatrixR non nulle. MatrixL2 fait de même en deux variables (u, v)
pour les identités à deux paramètres spectraux.
"""

from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from ..arith.laurent import LaurentPoly
from ..core.exceptions import ArithmeticDomainError, DimensionError
from .matrix import MatrixR, Scalar, Vector

Exponent2 = Tuple[int, int]


def _add_into(store: Dict, key, m: MatrixR) -> None:
    if m.is_zero():
        return
    current = store.get(key)
    total = m if current is None else current + m
    if total.is_zero():
        store.pop(key, None)
    else:
        store[key] = total


class MatrixL:
    """Matrice de polynômes de Laurent en u, immuable."""

    __slots__ = ("rows", "cols", "_coeffs")

    def __init__(self, rows: int, cols: int, coeffs: Optional[Mapping[int, MatrixR]] = None):
        self.rows = rows
        self.cols = cols
        self._coeffs: Dict[int, MatrixR] = {}
        for e, m in (coeffs or {}).items():
            if m.shape != (rows, cols):
                raise DimensionError(f"Coefficient u^{e} de forme {m.shape}, attendu {(rows, cols)}")
            if not m.is_zero():
                self._coeffs[int(e)] = m

    # ----- constructeurs -----

    @classmethod
    def constant(cls, m: MatrixR) -> "MatrixL":
        return cls(m.rows, m.cols, {0: m})

    @classmethod
    def monomial(cls, m: MatrixR, exp: int) -> "MatrixL":
        return cls(m.rows, m.cols, {exp: m})

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "MatrixL":
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, n: int) -> "MatrixL":
        return cls.constant(MatrixR.identity(n))

    @classmethod
    def scalar(cls, p: LaurentPoly, n: int) -> "MatrixL":
        """p(u)·Id."""
        ident = MatrixR.identity(n)
        return cls(n, n, {e: ident.scale(c) for e, c in p.items()})

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[LaurentPoly]]) -> "MatrixL":
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        triplets: Dict[int, List[Tuple[int, int, Fraction]]] = {}
        for i, line in enumerate(entries):
            for j, p in enumerate(line):
                for e, c in p.items():
                    triplets.setdefault(e, []).append((i, j, c))
        return cls(rows, cols, {e: MatrixR.from_triplets(rows, cols, t) for e, t in triplets.items()})

    # ----- accès -----

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def coefficient(self, e: int) -> MatrixR:
        """Matrice M_e (nulle si absente)."""
        m = self._coeffs.get(e)
        return m if m is not None else MatrixR.zeros(self.rows, self.cols)

    def coefficients(self) -> Iterator[Tuple[int, MatrixR]]:
        """Couples (e, M_e) par exposant croissant."""
        return iter(sorted(self._coeffs.items()))

    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def entry(self, i: int, j: int) -> LaurentPoly:
        return LaurentPoly({e: m.entry(i, j) for e, m in self._coeffs.items()})

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._coeffs)

    def as_scalar(self) -> Optional[LaurentPoly]:
        """Retourne p si la matrice vaut p(u)·Id, sinon None."""
        if self.rows != self.cols:
            return None
        out: Dict[int, Fraction] = {}
        for e, m in self._coeffs.items():
            if not m.is_diagonal():
                return None
            values = {m.entry(i, i) for i in range(self.rows)}
            if len(values) != 1:
                return None
            out[e] = values.pop()
        return LaurentPoly(out)

    # ----- arithmétique -----

    def __add__(self, other: "MatrixL") -> "MatrixL":
        if self.shape != other.shape:
            raise DimensionError(f"addition: {self.shape} vs {other.shape}")
        out = dict(self._coeffs)
        for e, m in other._coeffs.items():
            _add_into(out, e, m)
        return MatrixL(self.rows, self.cols, out)

    def __neg__(self) -> "MatrixL":
        return MatrixL(self.rows, self.cols, {e: -m for e, m in self._coeffs.items()})

    def __sub__(self, other: "MatrixL") -> "MatrixL":
        return self + (-other)

    def scale(self, c: Union[Scalar, LaurentPoly]) -> "MatrixL":
        """Multiplication par un scalaire ou par un polynôme de Laurent."""
        if isinstance(c, LaurentPoly):
            out: Dict[int, MatrixR] = {}
            for e1, a in c.items():
                for e2, m in self._coeffs.items():
                    _add_into(out, e1 + e2, m.scale(a))
            return MatrixL(self.rows, self.cols, out)
        c = Fraction(c)
        return MatrixL(self.rows, self.cols, {e: m.scale(c) for e, m in self._coeffs.items()})

    def __mul__(self, c: Union[Scalar, LaurentPoly]) -> "MatrixL":
        if isinstance(c, (MatrixL, MatrixR)):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "MatrixL") -> "MatrixL":
        if isinstance(other, MatrixR):
            other = MatrixL.constant(other)
        if self.cols != other.rows:
            raise DimensionError(f"produit: {self.shape} @ {other.shape}")
        out: Dict[int, MatrixR] = {}
        for e1, a in self._coeffs.items():
            for e2, b in other._coeffs.items():
                _add_into(out, e1 + e2, a @ b)
        return MatrixL(self.rows, other.cols, out)

    def __rmatmul__(self, other: MatrixR) -> "MatrixL":
        return MatrixL.constant(other) @ self

    def kron(self, other: "MatrixL") -> "MatrixL":
        out: Dict[int, MatrixR] = {}
        for e1, a in self._coeffs.items():
            for e2, b in other._coeffs.items():
                _add_into(out, e1 + e2, a.kron(b))
        return MatrixL(self.rows * other.rows, self.cols * other.cols, out)

    def shift(self, k: int) -> "MatrixL":
        """Multiplie par u^k."""
        return MatrixL(self.rows, self.cols, {e + k: m for e, m in self._coeffs.items()})

    def scale_arg(self, c: Scalar) -> "MatrixL":
        """Substitution u -> c·u."""
        c = Fraction(c)
        return MatrixL(self.rows, self.cols, {e: m.scale(c ** e) for e, m in self._coeffs.items()})

    def substitute_power(self, k: int) -> "MatrixL":
        """Substitution u -> u^k (k entier non nul)."""
        return MatrixL(self.rows, self.cols, {e * k: m for e, m in self._coeffs.items()})

    def derivative(self) -> "MatrixL":
        """Dérivée formelle en u, entrée par entrée."""
        if not self.is_polynomial():
            raise ArithmeticDomainError("not a polynomial", details={"support": list(self.support())})
        return MatrixL(self.rows, self.cols, {e - 1: m.scale(e) for e, m in self._coeffs.items() if e != 0})

    def eval_at(self, x: Scalar) -> MatrixR:
        """Spécialisation exacte en u = x."""
        x = Fraction(x)
        if x == 0:
            raise ArithmeticDomainError("eval_at: point d'évaluation nul")
        total = MatrixR.zeros(self.rows, self.cols)
        for e, m in self._coeffs.items():
            total = total + m.scale(x ** e)
        return total

    def apply(self, vector: Sequence[Scalar]) -> Dict[int, Vector]:
        """Image d'un vecteur constant: dictionnaire exposant -> vecteur."""
        return {e: m.apply(vector) for e, m in sorted(self._coeffs.items())}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixL):
            return NotImplemented
        return self.shape == other.shape and self._coeffs == other._coeffs

    __hash__ = None  # type: ignore[assignment]

    # ----- sérialisation -----

    def to_json(self) -> dict:
        """Format par entrée: [[i, j, {exposant: "p/q"}], ...]."""
        entries: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for e, m in self._coeffs.items():
            for i, j, v in m.nonzeros():
                entries.setdefault((i, j), {})[e] = v
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [
                [i, j, LaurentPoly(poly).to_json()]
                for (i, j), poly in sorted(entries.items())
            ],
        }

    def to_coefficient_json(self) -> Dict[str, dict]:
        """Format par exposant: {exposant: matrice en triplets}."""
        return {str(e): m.to_json() for e, m in self.coefficients()}

    def __repr__(self) -> str:
        return f"MatrixL({self.rows}x{self.cols}, support={list(self.support())})"


class MatrixL2:
    """Matrice de polynômes de Laurent en deux variables (u, v), immuable."""

    __slots__ = ("rows", "cols", "_coeffs")

    def __init__(self, rows: int, cols: int, coeffs: Optional[Mapping[Exponent2, MatrixR]] = None):
        self.rows = rows
        self.cols = cols
        self._coeffs: Dict[Exponent2, MatrixR] = {}
        for key, m in (coeffs or {}).items():
            if m.shape != (rows, cols):
                raise DimensionError(f"Coefficient {key} de forme {m.shape}, attendu {(rows, cols)}")
            if not m.is_zero():
                self._coeffs[key] = m

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "MatrixL2":
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def in_u(cls, m: MatrixL) -> "MatrixL2":
        return cls(m.rows, m.cols, {(e, 0): c for e, c in m.coefficients()})

    @classmethod
    def in_v(cls, m: MatrixL) -> "MatrixL2":
        return cls(m.rows, m.cols, {(0, e): c for e, c in m.coefficients()})

    @classmethod
    def product_uv(cls, x: MatrixL, y: MatrixL) -> "MatrixL2":
        """X(u)·Y(v)."""
        out: Dict[Exponent2, MatrixR] = {}
        for e1, a in x.coefficients():
            for e2, b in y.coefficients():
                _add_into(out, (e1, e2), a @ b)
        return cls(x.rows, y.cols, out)

    @classmethod
    def product_vu(cls, y: MatrixL, x: MatrixL) -> "MatrixL2":
        """Y(v)·X(u)."""
        out: Dict[Exponent2, MatrixR] = {}
        for e2, b in y.coefficients():
            for e1, a in x.coefficients():
                _add_into(out, (e1, e2), b @ a)
        return cls(y.rows, x.cols, out)

    def coefficients(self) -> Iterator[Tuple[Exponent2, MatrixR]]:
        return iter(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "MatrixL2") -> "MatrixL2":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("addition bivariée: formes incompatibles")
        out = dict(self._coeffs)
        for key, m in other._coeffs.items():
            _add_into(out, key, m)
        return MatrixL2(self.rows, self.cols, out)

    def __neg__(self) -> "MatrixL2":
        return MatrixL2(self.rows, self.cols, {k: -m for k, m in self._coeffs.items()})

    def __sub__(self, other: "MatrixL2") -> "MatrixL2":
        return self + (-other)

    def scale_poly(self, poly: Mapping[Exponent2, Scalar]) -> "MatrixL2":
        """Multiplication par un polynôme scalaire Σ c_{ab} u^a v^b."""
        out: Dict[Exponent2, MatrixR] = {}
        for (a, b), c in poly.items():
            if c == 0:
                continue
            for (e1, e2), m in self._coeffs.items():
                _add_into(out, (e1 + a, e2 + b), m.scale(c))
        return MatrixL2(self.rows, self.cols, out)

    def __matmul__(self, other: "MatrixL2") -> "MatrixL2":
        if self.cols != other.rows:
            raise DimensionError("produit bivarié: formes incompatibles")
        out: Dict[Exponent2, MatrixR] = {}
        for (a1, b1), x in self._coeffs.items():
            for (a2, b2), y in other._coeffs.items():
                _add_into(out, (a1 + a2, b1 + b2), x @ y)
        return MatrixL2(self.rows, other.cols, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixL2):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self._coeffs == other._coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"MatrixL2({self.rows}x{self.cols}, support={sorted(self._coeffs)})"
