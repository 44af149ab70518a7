"""Hook lengths and the hook products built from them.

Every hook here is an AlphaPoly of degree at most one. The first-row lower
hooks ``h_1, ..., h_{lam_1}`` drive almost everything: products of them, of
their minors and of their shifts ``h_i - j*a``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .errors import DomainError
from .exactalg import ALPHA, ONE, ZERO, AlphaPoly, XPoly
from .partitions import Partition, conjugate, remove_columns

HOOK_FLAVORS = ("lower", "upper")


def _arm_leg(lam: Partition, cell) -> tuple[int, int]:
    lam = Partition(lam)
    if not lam.has_cell(cell):
        raise DomainError(f"cell {tuple(cell)} lies outside {lam}")
    r, c = cell
    return lam.part(r) - c, conjugate(lam).part(c) - r


def lower_hook(lam: Partition, cell) -> AlphaPoly:
    """``a*arm + leg + 1``."""
    arm, leg = _arm_leg(lam, cell)
    return AlphaPoly((leg + 1, arm))


def upper_hook(lam: Partition, cell) -> AlphaPoly:
    """``a*(arm + 1) + leg``."""
    arm, leg = _arm_leg(lam, cell)
    return AlphaPoly((leg, arm + 1))


def row_hooks(lam: Partition, row: int, flavor: str = "lower") -> list[AlphaPoly]:
    """Hooks of every cell in ``row`` (empty list past the last row)."""
    if flavor not in HOOK_FLAVORS:
        raise DomainError(f"unknown hook flavor {flavor!r}")
    lam = Partition(lam)
    hook = lower_hook if flavor == "lower" else upper_hook
    return [hook(lam, (row, c)) for c in range(1, lam.part(row) + 1)]


def first_row_hooks(lam: Partition) -> list[AlphaPoly]:
    return row_hooks(lam, 1) if lam else []


def _product(factors: Iterable[AlphaPoly]) -> AlphaPoly:
    out = ONE
    for f in factors:
        out = out * f
    return out


def principal_lower_product(lam: Partition) -> AlphaPoly:
    """``H^1_*(lam)``, product of the first-row lower hooks; 1 for the empty shape."""
    return _product(first_row_hooks(Partition(lam)))


def shifted_principal_product(lam: Partition, j: int) -> AlphaPoly:
    """``prod_i (h_i - j*a)``."""
    shift = ALPHA * j
    return _product(h - shift for h in first_row_hooks(Partition(lam)))


def bold_H(lam: Partition) -> XPoly:
    """``prod_i (h_i - a*x)`` as a polynomial in ``x``."""
    out = XPoly((ONE,))
    for h in first_row_hooks(Partition(lam)):
        out = out * XPoly.linear(h, -ALPHA)
    return out


def minor(lam: Partition, cols: Iterable[int]) -> Partition:
    """Delete the given columns and close up the diagram."""
    return remove_columns(Partition(lam), cols)


@lru_cache(maxsize=2048)
def _minor_sums(lam: Partition) -> tuple[AlphaPoly, ...]:
    # Deleting column s lowers the arm of every first-row cell to its left by
    # one, so a minor's product is prod_{j kept} (h_j - a*#{deleted s > j}).
    # Sweep columns right to left keeping one bucket per number deleted so far.
    hooks = first_row_hooks(lam)
    buckets = [ONE]
    for h in reversed(hooks):
        nxt = [ZERO] * (len(buckets) + 1)
        for t, acc in enumerate(buckets):
            if acc:
                nxt[t] = nxt[t] + acc * (h - ALPHA * t)
                nxt[t + 1] = nxt[t + 1] + acc
        buckets = nxt
    return tuple(buckets)


def minor_sums(lam: Partition) -> tuple[AlphaPoly, ...]:
    """``(minor_sum(lam, 0), ..., minor_sum(lam, lam_1))``."""
    return _minor_sums(Partition(lam))


def minor_sum(lam: Partition, k: int) -> AlphaPoly:
    """Sum of ``H^1_*`` over all minors deleting exactly ``k`` columns."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    sums = minor_sums(lam)
    return sums[k] if k < len(sums) else ZERO


def minor_sum_bruteforce(lam: Partition, k: int) -> AlphaPoly:
    """Same as :func:`minor_sum` by materializing each minor."""
    lam = Partition(lam)
    total = ZERO
    for cols in combinations(range(1, lam.width + 1), k):
        total = total + principal_lower_product(minor(lam, cols))
    return total


def truncate_columns(lam: Partition, k: int) -> Partition:
    """Drop the last ``k`` columns."""
    lam = Partition(lam)
    return Partition(min(p, lam.width - k) for p in lam) if k < lam.width else Partition()


def f_star(lam: Partition, j: int) -> AlphaPoly:
    """``prod_{i=0}^{j} ((j+1)a - h_{lam_1 - i})``; 1 for negative ``j``."""
    lam = Partition(lam)
    if j < 0:
        return ONE
    if j >= lam.width:
        raise DomainError(f"f_star needs j < lam_1, got j={j} for {lam}")
    hooks = first_row_hooks(lam)
    return _product(ALPHA * (j + 1) - hooks[lam.width - 1 - i] for i in range(j + 1))


@lru_cache(maxsize=2048)
def _falling_coeffs(lam: Partition) -> tuple[AlphaPoly, ...]:
    if not lam:
        return (ONE,)
    hat = Partition(p - 1 for p in lam)
    prev = _falling_coeffs(hat)
    w, height = lam.width, len(lam)
    out = []
    for k in range(w + 1):
        ck = prev[k] if k < len(prev) else ZERO
        ckm = prev[k - 1] if k >= 1 else ZERO
        out.append(AlphaPoly((height, w - 1 - k)) * ck - ckm)
    return tuple(out)


def falling_coeffs(lam: Partition) -> list[AlphaPoly]:
    """Coefficients of ``bold_H(lam)`` in the basis ``a^k x(x-1)...(x-k+1)``, by column peeling."""
    return list(_falling_coeffs(Partition(lam)))


def complement_shape(lam: Partition) -> Partition:
    """The complement of ``lam`` in its bounding rectangle, rows reversed to form a partition."""
    lam = Partition(lam)
    return Partition(sorted((lam.width - p for p in lam), reverse=True))


def extended_row_factors(
    lam: Partition, i: int, flavor: str = "lower"
) -> tuple[list[AlphaPoly], list[AlphaPoly]]:
    """Hooks of row ``i`` of ``lam`` and of row ``i`` of its complement.

    Complement row ``i`` has length ``lam_1 - lam_i`` and sits in row
    ``l + 1 - i`` of :func:`complement_shape`.
    """
    lam = Partition(lam)
    ell = len(lam)
    if i < 1 or (i > ell and not (ell == 0 and i == 1)):
        raise DomainError(f"row {i} is not a row of {lam} or of its complement")
    if not lam:
        return [], []
    own = row_hooks(lam, i, flavor)
    comp = row_hooks(complement_shape(lam), ell + 1 - i, flavor)
    return own, comp


def extended_hook_product(lam: Partition, i: int, j: int = 0, flavor: str = "lower") -> AlphaPoly:
    """``H^i_+(lam, j)``: every factor of the row-``i`` and complement-row-``i`` hooks lowered by ``j*a``."""
    own, comp = extended_row_factors(lam, i, flavor)
    shift = ALPHA * j
    return _product(h - shift for h in own + comp)
