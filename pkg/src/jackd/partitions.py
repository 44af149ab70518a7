"""Integer partitions, their diagrams and the dominance order.

Partitions are immutable tuples of positive, weakly decreasing integers.
Rows and columns are 1-based throughout, and ``lam.part(i)`` reads as 0 past
the last row so that formulas indexed by rows can run off the end.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import DomainError, SizeError

#: Largest ``n`` accepted by :func:`partitions_of`.
PARTITION_CAP = 40


class Cell(NamedTuple):
    row: int
    col: int


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        # tolerate trailing zeros, store canonically without them
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise DomainError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise DomainError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read the comma separated text form, e.g. ``"10,6,3,1"``."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError as exc:
            raise DomainError(f"malformed partition {text!r}") from exc

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def width(self) -> int:
        """The first part, 0 for the empty partition."""
        return self[0] if self else 0

    def part(self, i: int) -> int:
        """``lam_i`` for 1-based ``i``; zero past the last row."""
        if i < 1:
            raise DomainError(f"row index must be positive, got {i}")
        return self[i - 1] if i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[Cell]:
        for r, p in enumerate(self, start=1):
            for c in range(1, p + 1):
                yield Cell(r, c)

    def has_cell(self, cell) -> bool:
        r, c = cell
        return r >= 1 and 1 <= c <= self.part(r)

    def arm(self, cell: Cell) -> int:
        self._check_cell(cell)
        return self[cell[0] - 1] - cell[1]

    def leg(self, cell: Cell) -> int:
        self._check_cell(cell)
        return conjugate(self).part(cell[1]) - cell[0]

    def _check_cell(self, cell) -> None:
        if not self.has_cell(cell):
            raise DomainError(f"cell {tuple(cell)} lies outside {self}")


@dataclass(frozen=True)
class FrobeniusCoords:
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.a)

    def to_partition(self) -> Partition:
        d = self.d
        rows = [self.a[i] + i + 1 for i in range(d)]
        # rows below the Durfee square come from the column data
        cols = [self.b[i] + i + 1 for i in range(d)]
        below = []
        r = d + 1
        while True:
            k = sum(1 for c in cols if c >= r)
            if k == 0:
                break
            below.append(k)
            r += 1
        return Partition(rows + below)


def _check_cap(n: int) -> None:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n > PARTITION_CAP:
        raise SizeError(f"n={n} exceeds the partition cap {PARTITION_CAP}")


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    _check_cap(n)
    return [Partition(p) for p in _partitions(n, n)]


def partition_count(n: int) -> int:
    _check_cap(n)
    return len(_partitions(n, n))


@lru_cache(maxsize=4096)
def conjugate(lam: tuple[int, ...]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff ``mu`` is below ``lam`` in dominance order."""
    if sum(lam) != sum(mu):
        raise DomainError(f"dominance needs equal sizes: {lam} vs {mu}")
    sl = sm = 0
    for i in range(max(len(lam), len(mu))):
        sl += lam[i] if i < len(lam) else 0
        sm += mu[i] if i < len(mu) else 0
        if sm > sl:
            return False
    return True


def covers_up(mu: Partition) -> list[Partition]:
    """Partitions reached by moving one outer corner to an inner corner higher up.

    Returned in increasing lexicographic order.
    """
    mu = Partition(mu)
    parts = list(mu) + [0]
    out = set()
    for r in range(1, len(mu) + 1):
        if parts[r - 1] <= parts[r]:
            continue  # row r has no outer corner
        for s in range(1, r):
            # row s accepts a cell if it is the top row or strictly shorter than the row above
            if s == 1 or parts[s - 2] > parts[s - 1]:
                new = parts[:]
                new[r - 1] -= 1
                new[s - 1] += 1
                out.add(Partition(new))
    return sorted(out)


def dominance_upset(mu: Partition) -> set[Partition]:
    """Everything reachable from ``mu`` by iterating :func:`covers_up`, ``mu`` included."""
    seen = {Partition(mu)}
    stack = [Partition(mu)]
    while stack:
        for nu in covers_up(stack.pop()):
            if nu not in seen:
                seen.add(nu)
                stack.append(nu)
    return seen


def frobenius(lam: Partition) -> FrobeniusCoords:
    lam = Partition(lam)
    lc = conjugate(lam)
    d = sum(1 for i, p in enumerate(lam, start=1) if p >= i)
    return FrobeniusCoords(
        a=tuple(lam[i - 1] - i for i in range(1, d + 1)),
        b=tuple(lc[i - 1] - i for i in range(1, d + 1)),
    )


def lattice_nu(lam: Partition) -> tuple[int, ...]:
    """Positions of the vertical steps among the first ``lam_1 + 1`` boundary edges."""
    lam = Partition(lam)
    out = []
    i = 1
    while i - 1 <= lam.part(i):
        out.append(lam.width - lam.part(i) + i - 1)
        i += 1
    return tuple(out)


def fixed_point_free(mu: Partition) -> bool:
    return 1 not in mu


def z_factor(mu: Partition) -> int:
    """``prod_i i^{m_i} m_i!`` where ``m_i`` counts parts equal to ``i``."""
    from collections import Counter
    from math import factorial

    z = 1
    for part, mult in Counter(mu).items():
        z *= part**mult * factorial(mult)
    return z


def complement_rows(lam: Partition) -> tuple[int, ...]:
    """Row lengths of ``(lam_1)^l`` minus ``lam``, top row first (may contain zeros)."""
    return tuple(lam.width - p for p in lam)


def remove_columns(lam: Partition, cols: Iterable[int]) -> Partition:
    lc = conjugate(lam)
    drop = set(cols)
    for c in drop:
        if not 1 <= c <= lam.width:
            raise DomainError(f"column {c} is not a column of {lam}")
    return conjugate(Partition(h for j, h in enumerate(lc, start=1) if j not in drop))


def double_rows(lam: Partition) -> Partition:
    """``2 lam`` with every part doubled."""
    return Partition(2 * p for p in lam)
