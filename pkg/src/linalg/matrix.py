"""
Matrices rationnelles exactes.

La grille est dense du point de vue de l'API (toute entrée est lisible),
mais chaque ligne ne conserve que ses entrées non nulles: les opérateurs
manipulés (générateurs, produits tensoriels) sont très creux.
"""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from ..arith.rational import format_rational, parse_rational
from ..core.exceptions import DimensionError

Scalar = Union[Fraction, int]
Vector = List[Fraction]
Row = Dict[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


class MatrixR:
    """Matrice rows × cols à coefficients dans Q, immuable."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Optional[Sequence[Mapping[int, Scalar]]] = None):
        if rows < 0 or cols < 0:
            raise DimensionError(f"Dimensions négatives: {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        if data is None:
            self._data: Tuple[Row, ...] = tuple({} for _ in range(rows))
        else:
            if len(data) != rows:
                raise DimensionError(f"{len(data)} lignes fournies pour {rows} attendues")
            self._data = tuple(
                {j: Fraction(v) for j, v in row.items() if v != 0}
                for row in data
            )

    @classmethod
    def _from_clean(cls, rows: int, cols: int, data: List[Row]) -> "MatrixR":
        """Construit sans recopier (lignes déjà nettoyées)."""
        m = cls.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = tuple(data)
        return m

    # ----- constructeurs -----

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "MatrixR":
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, n: int) -> "MatrixR":
        return cls._from_clean(n, n, [{i: ONE} for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "MatrixR":
        n = len(values)
        return cls(n, n, [{i: v} for i, v in enumerate(values)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "MatrixR":
        """Matrice élémentaire E_ij (indices à partir de 0)."""
        data: List[Row] = [{} for _ in range(n)]
        data[i][j] = ONE
        return cls._from_clean(n, n, data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "MatrixR":
        if not rows:
            return cls(0, 0)
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("Lignes de longueurs différentes")
        return cls(len(rows), width, [dict(enumerate(r)) for r in rows])

    @classmethod
    def from_triplets(cls, rows: int, cols: int, triplets: Iterable[Tuple[int, int, Scalar]]) -> "MatrixR":
        data: List[Row] = [{} for _ in range(rows)]
        for i, j, v in triplets:
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionError(f"Indice ({i}, {j}) hors d'une matrice {rows}x{cols}")
            data[i][j] = data[i].get(j, ZERO) + Fraction(v)
        return cls(rows, cols, data)

    # ----- accès -----

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def entry(self, i: int, j: int) -> Fraction:
        return self._data[i].get(j, ZERO)

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        return self.entry(i, j)

    def row(self, i: int) -> Mapping[int, Fraction]:
        """Entrées non nulles de la ligne i (lecture seule par convention)."""
        return self._data[i]

    def nonzeros(self) -> Iterator[Tuple[int, int, Fraction]]:
        """Triplets (i, j, valeur) par ordre de ligne puis de colonne."""
        for i, r in enumerate(self._data):
            for j in sorted(r):
                yield i, j, r[j]

    def nnz(self) -> int:
        return sum(len(r) for r in self._data)

    def is_zero(self) -> bool:
        return all(not r for r in self._data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_diagonal(self) -> bool:
        return all(set(r) <= {i} for i, r in enumerate(self._data))

    # ----- arithmétique -----

    def _check_same_shape(self, other: "MatrixR", op: str) -> None:
        if self.shape != other.shape:
            raise DimensionError(f"{op}: {self.shape} vs {other.shape}")

    def __add__(self, other: "MatrixR") -> "MatrixR":
        self._check_same_shape(other, "addition")
        data = []
        for r1, r2 in zip(self._data, other._data):
            out = dict(r1)
            for j, v in r2.items():
                s = out.get(j, ZERO) + v
                if s:
                    out[j] = s
                else:
                    out.pop(j, None)
            data.append(out)
        return MatrixR._from_clean(self.rows, self.cols, data)

    def __neg__(self) -> "MatrixR":
        return MatrixR._from_clean(self.rows, self.cols, [{j: -v for j, v in r.items()} for r in self._data])

    def __sub__(self, other: "MatrixR") -> "MatrixR":
        return self + (-other)

    def scale(self, c: Scalar) -> "MatrixR":
        c = Fraction(c)
        if c == 0:
            return MatrixR.zeros(self.rows, self.cols)
        return MatrixR._from_clean(self.rows, self.cols, [{j: c * v for j, v in r.items()} for r in self._data])

    def __mul__(self, c: Scalar) -> "MatrixR":
        if isinstance(c, MatrixR):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "MatrixR") -> "MatrixR":
        if self.cols != other.rows:
            raise DimensionError(f"produit: {self.shape} @ {other.shape}")
        data = []
        for r1 in self._data:
            out: Row = {}
            for k, a in r1.items():
                for j, b in other._data[k].items():
                    out[j] = out.get(j, ZERO) + a * b
            data.append({j: v for j, v in out.items() if v})
        return MatrixR._from_clean(self.rows, other.cols, data)

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """Produit matrice-vecteur dense."""
        if len(vector) != self.cols:
            raise DimensionError(f"apply: vecteur de taille {len(vector)} pour {self.cols} colonnes")
        return [sum((v * vector[j] for j, v in r.items() if vector[j]), ZERO) for r in self._data]

    def transpose(self) -> "MatrixR":
        data: List[Row] = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._data):
            for j, v in r.items():
                data[j][i] = v
        return MatrixR._from_clean(self.cols, self.rows, data)

    def kron(self, other: "MatrixR") -> "MatrixR":
        """Produit de Kronecker self ⊗ other (indice (x, y) -> x·dim(other) + y)."""
        data: List[Row] = []
        for r1 in self._data:
            for r2 in other._data:
                out: Row = {}
                for j1, a in r1.items():
                    base = j1 * other.cols
                    for j2, b in r2.items():
                        out[base + j2] = a * b
                data.append(out)
        return MatrixR._from_clean(self.rows * other.rows, self.cols * other.cols, data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixR):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    __hash__ = None  # type: ignore[assignment]

    # ----- sérialisation -----

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[i, j, format_rational(v)] for i, j, v in self.nonzeros()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MatrixR":
        return cls.from_triplets(
            data["rows"], data["cols"],
            ((i, j, parse_rational(v)) for i, j, v in data["entries"]),
        )

    def __repr__(self) -> str:
        return f"MatrixR({self.rows}x{self.cols}, nnz={self.nnz()})"


def q_commutator(a: MatrixR, b: MatrixR, zeta: Scalar) -> MatrixR:
    """[a, b]_ζ = ab − ζ·ba."""
    return a @ b - (b @ a).scale(zeta)


def commutator(a: MatrixR, b: MatrixR) -> MatrixR:
    return a @ b - b @ a


def unit_vector(dim: int, i: int) -> Vector:
    v = [ZERO] * dim
    v[i] = ONE
    return v


def format_vector(v: Sequence[Scalar]) -> List[str]:
    return [format_rational(x) for x in v]
