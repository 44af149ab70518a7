"""Colored permutations and matchings, rencontres numbers and signed permutations.

A lam-colored permutation is a permutation of ``[lam_1]`` whose cycles carry a
color, where a cycle may use any color in ``[lam'_i]`` for each of its elements
``i``. The lists are nested, so the usable colors of a cycle are
``[lam'_{max C}]``. It is a derangement when no fixed point has color 1.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial
from typing import Iterator, Sequence

from .errors import DomainError, SizeError
from .exactalg import AlphaPoly
from .partitions import Partition, conjugate

BRUTE_WIDTH_CAP = 9
MATERIALIZE_WIDTH_CAP = 6
MATCHING_CAP = 8
COLORED_MATCHING_CAP = 7
SIGNED_CAP = 7


@dataclass(frozen=True)
class DerangementProfile:
    shape: Partition
    counts: tuple  # counts[k-1] = d^lam_k

    @property
    def total(self) -> int:
        return sum(self.counts)

    def d(self, k: int) -> int:
        return self.counts[k - 1] if 1 <= k <= len(self.counts) else 0

    def to_json(self) -> dict:
        return {"shape": str(self.shape), "d": list(self.counts)}


def cycles_of(perm: Sequence[int]) -> list[list[int]]:
    """Cycles of a 0-based one-line permutation, as lists of 0-based points."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if not seen[start]:
            cyc, i = [], start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = perm[i]
            out.append(cyc)
    return out


def _cycle_count_dp(heights: Sequence[int], derange: bool) -> list[int]:
    """Weighted cycle counts by inserting points ``m, m-1, ..., 1``.

    State is (cycles, points in open cycles, open cycles still of size one).
    Every point either closes off a singleton, opens a cycle that must grow
    later, or joins a cycle opened by a larger point.
    """
    m = len(heights)
    states = {(0, 0, 0): 1}
    for i in range(m, 0, -1):
        h = heights[i - 1]
        single = h - 1 if derange else h
        nxt: dict = defaultdict(int)
        for (k, s, p), w in states.items():
            if single:
                nxt[(k + 1, s, p)] += w * single
            if h:
                nxt[(k + 1, s + 1, p + 1)] += w * h
            if p:
                nxt[(k, s + 1, p - 1)] += w * p
            if s - p:
                nxt[(k, s + 1, p)] += w * (s - p)
        states = nxt
    counts = [0] * (m + 1)
    for (k, s, p), w in states.items():
        if p == 0:
            counts[k] += w
    return counts


def _bruteforce_counts(heights: Sequence[int], derange: bool) -> list[int]:
    m = len(heights)
    counts = [0] * (m + 1)
    for perm in permutations(range(m)):
        w = 1
        cyc = cycles_of(perm)
        for c in cyc:
            h = heights[max(c)]
            w *= h - 1 if derange and len(c) == 1 else h
            if not w:
                break
        counts[len(cyc)] += w
    return counts


def _materialized_counts(heights: Sequence[int], derange: bool) -> list[int]:
    m = len(heights)
    counts = [0] * (m + 1)
    for perm in permutations(range(m)):
        cyc = cycles_of(perm)
        palettes = []
        for c in cyc:
            usable = set.intersection(*(set(range(1, heights[i] + 1)) for i in c))
            if usable != set(range(1, heights[max(c)] + 1)):
                raise AssertionError("color lists are not nested")
            palettes.append(sorted(usable))
        for colors in product(*palettes):
            if derange and any(len(c) == 1 and col == 1 for c, col in zip(cyc, colors)):
                continue
            counts[len(cyc)] += 1
    return counts


def _counts(lam: Partition, derange: bool, method: str) -> list[int]:
    lam = Partition(lam)
    heights = list(conjugate(lam))
    if method == "dp":
        return _cycle_count_dp(heights, derange)
    if method == "bruteforce":
        if lam.width > BRUTE_WIDTH_CAP:
            raise SizeError(f"lam_1={lam.width} exceeds {BRUTE_WIDTH_CAP} for enumeration over S_lam1")
        return _bruteforce_counts(heights, derange)
    if method == "materialize":
        if lam.width > MATERIALIZE_WIDTH_CAP:
            raise SizeError(f"lam_1={lam.width} exceeds {MATERIALIZE_WIDTH_CAP} for full materialization")
        return _materialized_counts(heights, derange)
    raise DomainError(f"unknown counting method {method!r}")


def colored_derangement_counts(lam: Partition, method: str = "dp") -> DerangementProfile:
    """``(d^lam_1, ..., d^lam_{lam_1})``: colored derangements by number of cycles.

    ``method`` is ``"dp"`` (any width), ``"bruteforce"`` (sum over S_{lam_1})
    or ``"materialize"`` (list every colored permutation).
    """
    lam = Partition(lam)
    counts = _counts(lam, True, method)
    return DerangementProfile(lam, tuple(counts[1:]))


def colored_permutation_counts(lam: Partition, method: str = "dp") -> list[int]:
    """All lam-colored permutations by number of cycles (index = cycle count)."""
    return _counts(lam, False, method)


def jack_derangement_number(lam: Partition, method: str = "dp") -> AlphaPoly:
    """``D^lam_a = sum_k d^lam_k a^{lam_1 - k}``; 1 for the empty shape."""
    lam = Partition(lam)
    if not lam:
        return AlphaPoly.const(1)
    prof = colored_derangement_counts(lam, method)
    w = lam.width
    return AlphaPoly(prof.d(w - j) for j in range(w))


def marked_fixed_point_counts(lam: Partition) -> dict:
    """``(k, c) -> `` number of lam-colored permutations with ``c`` cycles and ``k`` marked color-1 fixed points."""
    lam = Partition(lam)
    if lam.width > MATERIALIZE_WIDTH_CAP:
        raise SizeError(f"lam_1={lam.width} exceeds {MATERIALIZE_WIDTH_CAP}")
    heights = list(conjugate(lam))
    out: dict = defaultdict(int)
    for perm in permutations(range(lam.width)):
        cyc = cycles_of(perm)
        # per singleton: unmarked with any color, or marked (color 1)
        poly = {0: 1}
        for c in cyc:
            h = heights[max(c)]
            grown: dict = defaultdict(int)
            for k, w in poly.items():
                grown[k] += w * h
                if len(c) == 1:
                    grown[k + 1] += w
            poly = grown
        for k, w in poly.items():
            out[(k, len(cyc))] += w
    return dict(out)


# -- rencontres numbers -------------------------------------------------------


def rencontres_poly(n: int, k: int) -> AlphaPoly:
    """``d^{(a)}_{n,k} = sum_i (-1)^i n!/(k! i!) a^{n-k-i}`` as a polynomial in ``a``."""
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    coeffs = [0] * (n - k + 1)
    for i in range(n - k + 1):
        coeffs[n - k - i] = (-1) ** i * (factorial(n) // (factorial(k) * factorial(i)))
    return AlphaPoly(coeffs)


def rencontres(n: int, k: int, alpha=None):
    """Rencontres number at ``alpha``, or the polynomial when ``alpha`` is None."""
    poly = rencontres_poly(n, k)
    if alpha is None:
        return poly
    alpha = Fraction(alpha)
    if alpha == 0:
        raise DomainError("rencontres numbers are not defined at alpha = 0")
    return poly(alpha)


def prob(n: int, k: int, alpha) -> Fraction:
    """``d^{(a)}_{n,k} / (a^n n!)``."""
    alpha = Fraction(alpha)
    return rencontres(n, k, alpha) / (alpha**n * factorial(n))


def shifted_rencontres(n: int, k: int) -> int:
    """``d'_{n,k} = k! d_{n,k}`` at ``a = 1``."""
    return factorial(k) * int(rencontres(n, k, 1))


# -- perfect matchings ---------------------------------------------------------


def double_factorial(m: int) -> int:
    """``m!!`` with ``(-1)!! = 0!! = 1``."""
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def perfect_matchings(size: int) -> Iterator[tuple[int, ...]]:
    """Perfect matchings of ``{0..size-1}`` as partner arrays."""
    if size % 2:
        raise DomainError("perfect matchings need an even ground set")
    partner = [-1] * size

    def rec():
        try:
            a = partner.index(-1)
        except ValueError:
            yield tuple(partner)
            return
        for b in range(a + 1, size):
            if partner[b] == -1:
                partner[a], partner[b] = b, a
                yield from rec()
                partner[a] = partner[b] = -1

    yield from rec()


def matching_derangement_count(n: int) -> int:
    """Matchings of ``[2n]`` sharing no edge with ``{1,2},{3,4},...``."""
    if n > MATCHING_CAP:
        raise SizeError(f"n={n} exceeds {MATCHING_CAP}")
    return sum((-1) ** k * comb(n, k) * double_factorial(2 * (n - k) - 1) for k in range(n + 1))


def matching_derangement_count_enumerated(n: int) -> int:
    if n > MATCHING_CAP - 1:
        raise SizeError(f"n={n} is too large to enumerate")
    return sum(
        1 for m in perfect_matchings(2 * n) if all(m[2 * i] != 2 * i + 1 for i in range(n))
    )


def _matching_components(m: Sequence[int]) -> list[list[int]]:
    """Components of ``m`` together with the trivial matching, as lists of pair indices."""
    n = len(m) // 2
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        comp, stack = [], [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for point in (2 * i, 2 * i + 1):
                j = m[point] // 2
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
        out.append(comp)
    return out


def _colored_matching_total(lam: Partition, derange: bool) -> int:
    lam = Partition(lam)
    if lam.width > COLORED_MATCHING_CAP:
        raise SizeError(f"lam_1={lam.width} exceeds {COLORED_MATCHING_CAP}")
    heights = list(conjugate(lam))
    total = 0
    for m in perfect_matchings(2 * lam.width):
        w = 1
        for comp in _matching_components(m):
            h = heights[max(comp)]
            # a lone pair matched to itself may not take color 1
            w *= h - 1 if derange and len(comp) == 1 else h
            if not w:
                break
        total += w
    return total


def colored_matching_derangements(lam: Partition) -> int:
    """``|D'_lam|``: colored matchings of ``[2 lam_1]`` with no color-1 trivial block."""
    return _colored_matching_total(lam, True)


def colored_matching_count(lam: Partition) -> int:
    """All lam-colored matchings of ``[2 lam_1]``."""
    return _colored_matching_total(lam, False)


# -- signed permutations ----------------------------------------------------------


@dataclass(frozen=True)
class SignedPermutation:
    perm: tuple  # 0-based one-line
    signs: tuple  # +1 / -1 per point

    def cycles(self) -> list[list[int]]:
        return cycles_of(self.perm)

    def cycle_balanced(self, cycle) -> bool:
        return sum(1 for i in cycle if self.signs[i] < 0) % 2 == 0

    @property
    def balanced(self) -> bool:
        return all(self.cycle_balanced(c) for c in self.cycles())

    @property
    def totally_unbalanced(self) -> bool:
        return not any(self.cycle_balanced(c) for c in self.cycles())

    @property
    def is_derangement(self) -> bool:
        """No point sent to itself with a plus sign."""
        return all(not (self.perm[i] == i and self.signs[i] > 0) for i in range(len(self.perm)))


def signed_permutations(m: int) -> Iterator[SignedPermutation]:
    if m > SIGNED_CAP:
        raise SizeError(f"m={m} exceeds {SIGNED_CAP}")
    for perm in permutations(range(m)):
        for signs in product((1, -1), repeat=m):
            yield SignedPermutation(perm, signs)


@dataclass(frozen=True)
class HyperoctahedralCounts:
    derangements: int
    balanced: int
    totally_unbalanced: int


def hyperoctahedral_counts(m: int) -> HyperoctahedralCounts:
    der = bal = unbal = 0
    for w in signed_permutations(m):
        der += w.is_derangement
        bal += w.balanced
        unbal += w.totally_unbalanced
    return HyperoctahedralCounts(der, bal, unbal)


def subcube_fixing_formula(m: int, k: int) -> int:
    """``sum_i C(k,i) (2i-1)!! |D'_{2(m-i)}|``."""
    if not 0 <= k <= m:
        raise DomainError(f"need 0 <= k <= m, got m={m}, k={k}")
    return sum(
        comb(k, i) * double_factorial(2 * i - 1) * matching_derangement_count(m - i) for i in range(k + 1)
    )


def subcube_fixing_derangements(m: int, k: int, method: str = "enumerate") -> int:
    """Derangements in ``B_m`` whose unbalanced cycles all lie inside the first ``k`` coordinates."""
    if not 0 <= k <= m:
        raise DomainError(f"need 0 <= k <= m, got m={m}, k={k}")
    if method == "formula":
        return subcube_fixing_formula(m, k)
    count = 0
    for w in signed_permutations(m):
        if w.is_derangement and all(
            w.cycle_balanced(c) or max(c) < k for c in w.cycles()
        ):
            count += 1
    return count


def hyperoctahedral_derangements(m: int) -> int:
    """``|E_m|`` from the rencontres polynomial at ``a = 2``."""
    return int(rencontres(m, 0, 2))

