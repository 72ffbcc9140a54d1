"""
Réduction de Gauss exacte: forme échelonnée réduite, rang, noyaux,
noyaux communs et plus petits sous-espaces invariants.

Pivot: première entrée non nulle dans l'ordre des colonnes, normalisée à 1.
"""

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional, Sequence

from ..core.exceptions import DimensionError, InvariantFailure
from ..core.logging_config import get_logger
from .matrix import MatrixR, Row, Scalar, Vector, ZERO

logger = get_logger(__name__)


def _to_sparse(v: Sequence[Scalar]) -> Row:
    return {i: Fraction(x) for i, x in enumerate(v) if x != 0}


def _to_dense(v: Row, dim: int) -> Vector:
    out = [ZERO] * dim
    for i, x in v.items():
        out[i] = x
    return out


def _apply_columns(transposed: MatrixR, v: Row) -> Row:
    """g·v pour v creux, g donnée par sa transposée (colonnes de g en lignes)."""
    out: Row = {}
    for j, x in v.items():
        for i, y in transposed.row(j).items():
            s = out.get(i, ZERO) + x * y
            if s:
                out[i] = s
            else:
                out.pop(i, None)
    return out


@dataclass
class RowReduction:
    """Résultat de rref_rank_kernel."""
    reduced: MatrixR
    rank: int
    pivots: List[int] = field(default_factory=list)
    kernel: List[Vector] = field(default_factory=list)


def rref_rank_kernel(m: MatrixR) -> RowReduction:
    """
    Forme échelonnée réduite, rang et base du noyau.

    Args:
        m: Matrice rationnelle

    Returns:
        RowReduction avec rang + dim(noyau) = m.cols
    """
    rows: List[Row] = [dict(m.row(i)) for i in range(m.rows)]
    pivots: List[int] = []
    pivot_rows: List[Row] = []
    for piv_c in range(m.cols):
        candidates = [r for r in rows if r.get(piv_c)]
        if not candidates:
            continue
        chosen = candidates[0]
        rows.remove(chosen)
        inv = 1 / chosen[piv_c]
        chosen = {j: v * inv for j, v in chosen.items()}
        # élimination au-dessus et au-dessous
        for target in rows + pivot_rows:
            f = target.get(piv_c)
            if not f:
                continue
            for j, v in chosen.items():
                s = target.get(j, ZERO) - f * v
                if s:
                    target[j] = s
                else:
                    target.pop(j, None)
        pivots.append(piv_c)
        pivot_rows.append(chosen)
        rows = [r for r in rows if r]

    data = pivot_rows + [{} for _ in range(m.rows - len(pivot_rows))]
    reduced = MatrixR(m.rows, m.cols, data)

    pivot_set = set(pivots)
    kernel: List[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [ZERO] * m.cols
        vec[free] = Fraction(1)
        for piv_c, r in zip(pivots, pivot_rows):
            coeff = r.get(free)
            if coeff:
                vec[piv_c] = -coeff
        kernel.append(vec)

    return RowReduction(reduced=reduced, rank=len(pivots), pivots=pivots, kernel=kernel)


def rank(m: MatrixR) -> int:
    return rref_rank_kernel(m).rank


def rank_of_vectors(vectors: Iterable[Sequence[Scalar]]) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return basis.dimension


def stack(matrices: Sequence[MatrixR], cols: int) -> MatrixR:
    """Empile verticalement des matrices de même nombre de colonnes."""
    data: List[Row] = []
    for m in matrices:
        if m.cols != cols:
            raise DimensionError(f"empilement: {m.cols} colonnes au lieu de {cols}")
        data.extend(dict(m.row(i)) for i in range(m.rows))
    return MatrixR(len(data), cols, data)


def joint_kernel(matrices: Sequence[MatrixR], cols: int) -> List[Vector]:
    """
    Base de l'intersection des noyaux.

    Args:
        matrices: Matrices partageant le nombre de colonnes
        cols: Dimension de l'espace source (utile si la liste est vide)

    Returns:
        Base exacte du noyau commun (espace entier si la liste est vide)
    """
    return rref_rank_kernel(stack(matrices, cols)).kernel


def restrict_columns(m: MatrixR, columns: Sequence[int], rows: Optional[Sequence[int]] = None) -> MatrixR:
    """Sous-matrice sur les colonnes (et éventuellement les lignes) données."""
    index = {c: k for k, c in enumerate(columns)}
    row_ids = range(m.rows) if rows is None else rows
    data = [{index[j]: v for j, v in m.row(i).items() if j in index} for i in row_ids]
    return MatrixR(len(data), len(columns), data)


class EchelonBasis:
    """
    Base échelonnée incrémentale d'un sous-espace de Q^d.

    Chaque ligne a son pivot normalisé à 1 et des zéros avant lui; un vecteur
    est réduit par ordre croissant des pivots rencontrés dans son support.
    """

    def __init__(self):
        self._rows: Dict[int, Row] = {}

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def _reduce(self, v: Row) -> Row:
        v = dict(v)
        heap = list(v)
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            f = v.get(c)
            if not f or c not in self._rows:
                continue
            for j, x in self._rows[c].items():
                s = v.get(j, ZERO) - f * x
                if s:
                    if j not in v and j not in seen:
                        heapq.heappush(heap, j)
                    v[j] = s
                else:
                    v.pop(j, None)
        return v

    def reduce(self, vector: Sequence[Scalar]) -> Row:
        """Reste creux de la réduction de vector par la base."""
        return self._reduce(_to_sparse(vector))

    def contains(self, vector: Sequence[Scalar]) -> bool:
        return not self.reduce(vector)

    def add(self, vector: Sequence[Scalar]) -> bool:
        """Ajoute vector; retourne True s'il était indépendant."""
        return self.add_sparse(_to_sparse(vector))

    def add_sparse(self, vector: Row) -> bool:
        r = self._reduce(vector)
        if not r:
            return False
        piv = min(r)
        inv = 1 / r[piv]
        self._rows[piv] = {j: x * inv for j, x in r.items()}
        return True

    def vectors(self, dim: int) -> List[Vector]:
        """Base dense, par pivot croissant."""
        return [_to_dense(self._rows[p], dim) for p in sorted(self._rows)]


def invariant_span(
    generators: Sequence[MatrixR],
    seeds: Sequence[Sequence[Scalar]],
    grading: Optional[Sequence[Hashable]] = None,
    dim: Optional[int] = None,
    limit: Optional[int] = None,
) -> List[Vector]:
    """
    Plus petit sous-espace contenant seeds et stable par chaque générateur.

    Les générateurs sont appliqués en largeur à chaque nouveau vecteur de
    base, jusqu'à stabilisation ou jusqu'à atteindre la dimension limit.

    Args:
        generators: Matrices carrées de même taille
        seeds: Vecteurs de départ
        grading: Degré de chaque coordonnée; les générateurs et les graines
            doivent alors être homogènes (une base échelonnée par degré)
        dim: Dimension ambiante (déduite des générateurs ou des graines sinon)
        limit: Arrêt dès que le sous-espace atteint cette dimension (None = clôture complète)

    Returns:
        Base du sous-espace invariant
    """
    if dim is None:
        if generators:
            dim = generators[0].cols
        elif seeds:
            dim = len(seeds[0])
        else:
            return []
    for g in generators:
        if g.shape != (dim, dim):
            raise DimensionError(f"Générateur {g.shape} pour un espace de dimension {dim}")

    bases: Dict[Hashable, EchelonBasis] = {}

    def grade_of(v: Row) -> Hashable:
        if grading is None:
            return None
        grades = {grading[i] for i in v}
        if len(grades) != 1:
            raise InvariantFailure("Vecteur non homogène pour la graduation fournie")
        return grades.pop()

    queue: List[Row] = []

    def push(v: Row) -> None:
        if not v:
            return
        key = grade_of(v)
        basis = bases.setdefault(key, EchelonBasis())
        if basis.add_sparse(v):
            queue.append(v)

    for s in seeds:
        push(_to_sparse(s))

    # la file contient exactement un vecteur par dimension acquise
    columns = [g.transpose() for g in generators]
    head = 0
    while head < len(queue) and (limit is None or len(queue) < limit):
        v = queue[head]
        head += 1
        for gt in columns:
            push(_apply_columns(gt, v))
            if limit is not None and len(queue) >= limit:
                break

    out: List[Vector] = []
    for key in sorted(bases, key=repr):
        out.extend(bases[key].vectors(dim))
    logger.debug(f"Span invariant: dimension {len(out)} / {dim}")
    return out
