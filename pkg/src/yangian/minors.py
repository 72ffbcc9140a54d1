"""
Mineurs quantiques, déterminant quantique et comatrice quantique.

Les deux formes de développement (par lignes triées, par colonnes triées)
sont calculées par programmation dynamique sur les sous-ensembles d'indices
déjà placés: le préfixe d'un produit ne dépend que de cet ensemble.
"""

from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..core.exceptions import DimensionError
from ..core.logging_config import get_logger
from ..linalg.laurent_matrix import MatrixL
from .modules import OperatorPoly, YangianModule

logger = get_logger(__name__)

EntryFn = Callable[[int, int], MatrixL]


class MinorForm(str, Enum):
    """Forme de développement d'un mineur quantique."""
    ROW = "row"
    COLUMN = "column"


def _inversions(seq: Sequence[int]) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


class _ScaledEntries:
    """Cache des t_ij(s^p·u) pour un calcul de mineur."""

    def __init__(self, entries: EntryFn, step: Fraction):
        self.entries = entries
        self.step = step
        self._cache: Dict[Tuple[int, int, int], MatrixL] = {}

    def __call__(self, i: int, j: int, p: int) -> MatrixL:
        key = (i, j, p)
        m = self._cache.get(key)
        if m is None:
            base = self.entries(i, j)
            m = base if p == 0 else base.scale_arg(self.step ** p)
            self._cache[key] = m
        return m


def _row_form(rows: Tuple[int, ...], cols: Tuple[int, ...], scaled: _ScaledEntries, mq: Fraction, dim: int) -> MatrixL:
    """Σ_σ (−q)^{−l(σ)} t_{a_σ(1) b_1}(u) ⋯ t_{a_σ(r) b_r}(s^{r−1}u), lignes triées."""
    r = len(rows)
    layer: Dict[FrozenSet[int], MatrixL] = {frozenset(): MatrixL.identity(dim)}
    for p in range(r):
        nxt: Dict[FrozenSet[int], MatrixL] = {}
        for used, prefix in layer.items():
            remaining = [x for x in rows if x not in used]
            for rank, x in enumerate(remaining):
                term = (prefix @ scaled(x, cols[p], p)).scale(mq ** (-rank))
                key = used | {x}
                nxt[key] = nxt[key] + term if key in nxt else term
        layer = nxt
    return layer[frozenset(rows)]


def _column_form(rows: Tuple[int, ...], cols: Tuple[int, ...], scaled: _ScaledEntries, mq: Fraction, dim: int) -> MatrixL:
    """Σ_σ (−q)^{l(σ)} t_{a_r b_σ(r)}(s^{r−1}u) ⋯ t_{a_1 b_σ(1)}(u), colonnes triées."""
    r = len(cols)
    layer: Dict[FrozenSet[int], MatrixL] = {frozenset(): MatrixL.identity(dim)}
    for p in range(r - 1, -1, -1):
        nxt: Dict[FrozenSet[int], MatrixL] = {}
        for used, prefix in layer.items():
            remaining = [x for x in cols if x not in used]
            for rank, x in enumerate(remaining):
                term = (prefix @ scaled(rows[p], x, p)).scale(mq ** (len(remaining) - 1 - rank))
                key = used | {x}
                nxt[key] = nxt[key] + term if key in nxt else term
        layer = nxt
    return layer[frozenset(cols)]


def quantum_minor(
    module: YangianModule,
    rows: Sequence[int],
    cols: Sequence[int],
    step: Optional[Fraction] = None,
    entries: Optional[EntryFn] = None,
    form: Optional[MinorForm] = None,
) -> OperatorPoly:
    """
    Mineur quantique t^{rows}_{cols}(u).

    Args:
        module: Module sur lequel agissent les t_ij(u)
        rows: Indices du haut (à partir de 1)
        cols: Indices du bas
        step: Rapport entre arguments consécutifs (q^{-2} par défaut)
        entries: Générateurs à utiliser à la place de module.t
        form: Forme imposée; sinon lignes si elles sont triées, colonnes sinon

    Returns:
        L'opérateur exact; zéro si un indice est répété, identité si r = 0
    """
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise DimensionError(f"Mineur de forme {len(rows)}x{len(cols)}")
    dim = module.dim
    if len(set(rows)) < len(rows) or len(set(cols)) < len(cols):
        return MatrixL.zeros(dim)
    if not rows:
        return MatrixL.identity(dim)

    q = module.q.value
    mq = -q
    step = Fraction(step) if step is not None else q ** -2
    scaled = _ScaledEntries(entries or module.t, step)

    if form is None:
        form = MinorForm.ROW if list(rows) == sorted(rows) or list(cols) != sorted(cols) else MinorForm.COLUMN
    form = MinorForm(form)

    if form is MinorForm.ROW:
        sign = mq ** _inversions(rows)
        out = _row_form(tuple(sorted(rows)), cols, scaled, mq, dim)
    else:
        sign = mq ** (-_inversions(cols))
        out = _column_form(rows, tuple(sorted(cols)), scaled, mq, dim)
    return out if sign == 1 else out.scale(sign)


def qdet(module: YangianModule, step: Optional[Fraction] = None, entries: Optional[EntryFn] = None) -> OperatorPoly:
    """Déterminant quantique t^{1…n}_{1…n}(u)."""
    idx = list(range(1, module.n + 1))
    return quantum_minor(module, idx, idx, step=step, entries=entries)


def comatrix(module: YangianModule) -> List[List[OperatorPoly]]:
    """
    Comatrice quantique: t̂_ij(u) = (−q)^{j−i}·t^{1…ĵ…n}_{1…î…n}(u).

    Grille indexée à partir de 0.
    """
    n = module.n
    mq = -module.q.value
    grid: List[List[OperatorPoly]] = []
    for i in range(1, n + 1):
        line = []
        for j in range(1, n + 1):
            rows = [x for x in range(1, n + 1) if x != j]
            cols = [x for x in range(1, n + 1) if x != i]
            minor = quantum_minor(module, rows, cols)
            line.append(minor.scale(mq ** (j - i)))
        grid.append(line)
    logger.debug(f"Comatrice quantique calculée (n={n}, dim={module.dim})")
    return grid
