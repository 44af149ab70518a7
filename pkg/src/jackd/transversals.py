"""Partial column transversals of a shape and their α-weights."""
from __future__ import annotations

from collections import Counter
from itertools import combinations, product
from typing import Iterable, Iterator

from .errors import DomainError
from .exactalg import ONE, ZERO, AlphaPoly
from .partitions import Cell, Partition, conjugate

#: Symbolic transversal sums get expensive quickly; identity checks stay below this width.
SYMBOLIC_WIDTH_CAP = 6

Transversal = frozenset


def enumerate_transversals(lam: Partition, k: int) -> Iterator[frozenset]:
    """Every set of ``k`` cells of ``lam`` with no two in the same column.

    Column subsets come first in lexicographic order, then the row choices
    within those columns.
    """
    lam = Partition(lam)
    heights = conjugate(lam)
    if k < 0 or k > lam.width:
        return
    for cols in combinations(range(1, lam.width + 1), k):
        for rows in product(*(range(1, heights[c - 1] + 1) for c in cols)):
            yield frozenset(Cell(r, c) for r, c in zip(rows, cols))


def transversal_count(lam: Partition, k: int) -> int:
    """``e_k`` of the column heights."""
    e = [1]
    for h in conjugate(Partition(lam)):
        e = [a + h * b for a, b in zip(e + [0], [0] + e)]
    return e[k] if 0 <= k < len(e) else 0


def transversal_weight(lam: Partition, cells: Iterable) -> AlphaPoly:
    """Lower hook product of the cell set, arms and legs counted inside the set."""
    lam = Partition(lam)
    cells = [Cell(*c) for c in cells]
    seen_cols = set()
    for c in cells:
        if not lam.has_cell(c):
            raise DomainError(f"cell {tuple(c)} lies outside {lam}")
        if c.col in seen_cols:
            raise DomainError(f"two cells share column {c.col}")
        seen_cols.add(c.col)
    # one cell per column, so every leg is 0 and the arm is the number
    # of chosen cells further right in the same row
    per_row = Counter(c.row for c in cells)
    out = ONE
    for row, m in per_row.items():
        for arm in range(m):
            out = out * AlphaPoly((1, arm))
    return out


def shifted_jack_onerow(lam: Partition, k: int) -> AlphaPoly:
    """``J*_k(lam)/k!`` as the sum of α-weights over ``k``-transversals."""
    lam = Partition(lam)
    if k > lam.width:
        return ZERO
    total = ZERO
    for t in enumerate_transversals(lam, k):
        total = total + transversal_weight(lam, t)
    return total
