"""Every route to the Jack derangement sum, plus immanants and spectrum tables.

``eta(lam)`` is the reference value ``(-1)^{|lam| - lam_1} D^lam_a``. The other
routes (minor sums, rencontres sums, closed forms at a = 1 and a = 2, the
determinant) are independent and are checked against it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import Optional, Union

from .colored import (
    cycles_of,
    double_factorial,
    jack_derangement_number,
    matching_derangement_count,
    prob,
    rencontres,
    shifted_rencontres,
    subcube_fixing_derangements,
)
from .errors import ConsistencyError, DomainError, SizeError
from .exactalg import ZERO, AlphaPoly, det_exact, newton_interpolate
from .hooks import extended_hook_product, extended_row_factors, minor_sums, shifted_principal_product
from .jack_oracle import mn_character, skew_syt_count, syt_count
from .partitions import Partition, conjugate, double_rows, lattice_nu, partitions_of

Value = Union[AlphaPoly, Fraction]

METHODS = ("auto", "colored", "minors", "rencontres", "closed1", "det1", "closed2")
SYMBOLIC_METHODS = ("colored", "minors", "rencontres")
TABLE_CAP = 12
ALPHA2_MULT_CAP = 8
IMMANANT_CAP = 9
DIRECT_IMMANANT_CAP = 8


def _sign(lam: Partition) -> int:
    return -1 if (lam.n - lam.width) % 2 else 1


def _prod(xs) -> Fraction:
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


def eta(lam: Partition, method: str = "dp") -> AlphaPoly:
    """``(-1)^{|lam| - lam_1} D^lam_a`` from colored derangement counts."""
    lam = Partition(lam)
    return jack_derangement_number(lam, method) * _sign(lam)


def eta_minor_sum(lam: Partition) -> AlphaPoly:
    """Alternating sum of minor sums."""
    lam = Partition(lam)
    total = ZERO
    for k, s in enumerate(minor_sums(lam)):
        total = total + (s if k % 2 == 0 else -s)
    return total * _sign(lam)


def eta_alpha0(lam: Partition) -> Fraction:
    """The value at a = 0: a signed product of (column height - 1)."""
    lam = Partition(lam)
    return Fraction(_sign(lam) * _prod(h - 1 for h in conjugate(lam)))


def eta_rencontres_at(lam: Partition, n: int, alpha) -> Fraction:
    """``(-1)^{|lam| - lam_1} / (a^n n!) sum_j d^{(a)}_{n,j} H^1_*(lam, j)`` at a fixed nonzero ``a``."""
    lam = Partition(lam)
    if n < lam.width:
        raise DomainError(f"need n >= lam_1, got n={n} for {lam}")
    alpha = Fraction(alpha)
    total = sum(
        (rencontres(n, j, alpha) * shifted_principal_product(lam, j)(alpha) for j in range(n + 1)),
        Fraction(0),
    )
    return _sign(lam) * total / (alpha**n * factorial(n))


def eta_rencontres(lam: Partition, n: Optional[int] = None) -> AlphaPoly:
    """The rencontres route, sampled at a = 1, ..., lam_1 + 1 and interpolated."""
    lam = Partition(lam)
    n = lam.width if n is None else n
    points = []
    for a in range(1, lam.width + 2):
        v = eta_rencontres_at(lam, n, a)
        if v.denominator != 1:
            raise ConsistencyError(f"rencontres sum for {lam} at a={a} is not integral: {v}")
        points.append((a, v))
    poly = newton_interpolate(points)
    if poly.degree > max(lam.width - 1, 0):
        raise ConsistencyError(f"rencontres route for {lam} has degree {poly.degree}")
    return poly


# -- closed forms at a = 1 ---------------------------------------------------------


def p1(m: int, k: int) -> Fraction:
    """Probability that a uniform permutation of ``[m]`` has exactly ``k`` fixed points."""
    return prob(m, k, 1) if 0 <= k <= m else Fraction(0)


def p2(m: int, k: int) -> Fraction:
    """Same for signed permutations in ``B_m``."""
    return prob(m, k, 2) if 0 <= k <= m else Fraction(0)


def eta1_closed(lam: Partition) -> Fraction:
    """Extended hook products weighted by fixed-point probabilities, at a = 1."""
    lam = Partition(lam)
    w = lam.width
    total = Fraction(0)
    for i, nu in enumerate(lattice_nu(lam), start=1):
        total += (-1) ** lam.part(i) * p1(w, nu) * extended_hook_product(lam, i)(1)
    return (-1) ** lam.n * total


def eta1_two_row(n: int, k: int) -> Fraction:
    if not 0 <= 2 * k <= n:
        raise DomainError(f"(n-k, k) = ({n - k}, {k}) is not a partition")

    def d(a, b):
        return int(rencontres(a, b, 1)) if 0 <= b <= a else 0

    return Fraction((-1) ** k * d(n - k + 1, 1) + (-1) ** (n - k) * d(k, 1), n - 2 * k + 1)


def _dprime(n: int, k: int) -> int:
    return shifted_rencontres(n, k) if 0 <= k <= n else 0


def eta1_three_row(lam: Partition) -> Fraction:
    lam = Partition(lam)
    if len(lam) != 3:
        raise DomainError(f"{lam} does not have three rows")
    l1, l2, l3 = lam
    n = lam.n
    return (
        Fraction((-1) ** (n - l1) * _dprime(l1 + 2, 2), (l1 - l3 + 2) * (l1 - l2 + 1))
        + Fraction((-1) ** (n - l2) * _dprime(l2 + 1, 2), (l1 - l2 + 1) * (l2 - l3 + 1))
        + Fraction((-1) ** (n - l3) * _dprime(l3, 2), (l1 - l3 + 2) * (l2 - l3 + 1))
    )


def renteln_matrices(lam: Partition) -> tuple[list[list[int]], list[list[int]]]:
    lam = Partition(lam)
    ell = len(lam)
    W, V = [], []
    for k in range(1, ell + 1):
        x = lam.part(k) - k
        first = (-1) ** (lam.width - lam.part(k) + k - 1) * _dprime(x + ell, ell - 1)
        W.append([first] + [x ** (ell - j) for j in range(2, ell + 1)])
        V.append([x ** (j - 1) for j in range(1, ell + 1)])
    return W, V


def eta1_det_unsigned(lam: Partition) -> Fraction:
    """``det W / det V`` with no sign correction; right only for some shapes."""
    lam = Partition(lam)
    if not lam:
        return Fraction(1)
    W, V = renteln_matrices(lam)
    return det_exact(W) / det_exact(V)


def eta1_det(lam: Partition) -> Fraction:
    """``(-1)^{|lam| - lam_1} det W / prod_{i<j} (x_i - x_j)`` with ``x_i = lam_i - i``.

    The denominator is ``det V`` up to the sign ``(-1)^{l(l-1)/2}`` of
    reversing its columns.
    """
    lam = Partition(lam)
    ell = len(lam)
    return _sign(lam) * (-1) ** (ell * (ell - 1) // 2) * eta1_det_unsigned(lam)


# -- closed forms at a = 2 -------------------------------------------------------------


def eta2_two_row(n: int, k: int, via: str = "formula") -> int:
    """``(-1)^k sum_i C(k,i)(2i-1)!! |D'_{2(n-k-i)}|``, or the same via subcube counting."""
    if not 0 <= 2 * k <= n:
        raise DomainError(f"(n-k, k) = ({n - k}, {k}) is not a partition")
    m = n - k
    if via == "formula":
        total = sum(
            comb(k, i) * double_factorial(2 * i - 1) * matching_derangement_count(m - i) for i in range(k + 1)
        )
    elif via == "subcube":
        total = subcube_fixing_derangements(m, k)
    else:
        raise DomainError(f"unknown route {via!r}")
    return (-1) ** k * total


def _odd_rows(lam: Partition) -> Partition:
    return Partition(lam[::2])


def has_even_columns(lam: Partition) -> bool:
    return all(h % 2 == 0 for h in conjugate(Partition(lam)))


def eta2_doubly_even(lam: Partition) -> Fraction:
    """Closed form at a = 2 when every column has even height, via the odd-indexed rows ``mu``."""
    lam = Partition(lam)
    if not has_even_columns(lam):
        raise DomainError(f"{lam} has a column of odd height")
    mu = _odd_rows(lam)
    w = mu.width
    total = Fraction(0)
    for i, nu in enumerate(lattice_nu(mu), start=1):
        total += (-1) ** mu.part(i) * p2(w, nu) * 2**w * extended_hook_product(mu, i)(1)
    return (-1) ** lam.n * total


def eta2_doubly_even_unscaled(lam: Partition) -> Fraction:
    """The doubly-even formula with overall sign ``(-1)^{|mu|}`` and no ``2^{mu_1}`` factor.

    Kept only so that its disagreement with :func:`eta` can be reported.
    """
    lam = Partition(lam)
    if not has_even_columns(lam):
        raise DomainError(f"{lam} has a column of odd height")
    mu = _odd_rows(lam)
    total = Fraction(0)
    for i, nu in enumerate(lattice_nu(mu), start=1):
        total += (-1) ** mu.part(i) * p2(mu.width, nu) * extended_hook_product(mu, i)(1)
    return (-1) ** mu.n * total


def _pair_terms(lam: Partition):
    """Yield ``(i, row, s_i)`` for the row pairs that contribute at a = 2."""
    i = 1
    while i - 1 <= lam.part(2 * i - 1):
        r = 2 * i - 1
        yield i, r, lam.width - lam.part(r) + i - 1
        if r > len(lam):
            break
        i += 1


def eta2_closed(lam: Partition) -> Fraction:
    """Closed form at a = 2 over pairs of rows ``(lam_{2i-1}, lam_{2i})``.

    Row ``2i-1`` contributes its lower hooks lowered by ``2t`` and the matching
    complement row its upper hooks raised by ``2t``, for
    ``0 <= t <= lam_{2i-1} - lam_{2i}``.
    """
    lam = Partition(lam)
    w = lam.width
    total = Fraction(0)
    for _, r, s in _pair_terms(lam):
        if r <= len(lam):
            own, _ = extended_row_factors(lam, r, "lower")
            _, comp = extended_row_factors(lam, r, "upper")
        else:
            own, comp = [], []
        own2 = [h(2) for h in own]
        comp2 = [h(2) for h in comp]
        for t in range(lam.part(r) - lam.part(r + 1) + 1):
            if s + t > w:
                break
            term = _prod(h - 2 * t for h in own2) * _prod(h + 2 * t for h in comp2)
            total += (-1) ** lam.part(r) * p2(w, s + t) * term
    return (-1) ** lam.n * total


def eta2_closed_alternating(lam: Partition, flavor: str = "lower") -> Fraction:
    """Pair-row variant with a ``(-1)^j`` sign, offsets ``lam_1 - lam_i + i - 1`` and ``r + j <= lam_1``.

    Kept only so that its disagreement with :func:`eta` can be reported.
    """
    lam = Partition(lam)
    w = lam.width
    total = Fraction(0)
    i = 1
    while 2 * i - 1 <= lam.part(2 * i - 1) + 1:
        r = 2 * i - 1
        a1_ai = w - lam.part(i) + i - 1
        for j in range(lam.part(r) - lam.part(r + 1) + 1):
            if r + j > w:
                break
            h = extended_hook_product(lam, r, j, flavor)(2) if r <= max(len(lam), 1) else Fraction(1)
            total += (-1) ** lam.part(r) * (-1) ** j * p2(w, a1_ai + j) * h
        i += 1
    return (-1) ** lam.n * total


# -- immanants ---------------------------------------------------------------------------


def d_lambda(lam: Partition) -> int:
    """``Imm_lam(K_n) = f^lam * eta(lam)`` at a = 1."""
    lam = Partition(lam)
    v = syt_count(lam) * eta(lam)(1)
    return int(v)


def d_lambda_direct(lam: Partition) -> int:
    """``sum_{pi in D_n} chi^lam(pi)`` over the permutations themselves."""
    lam = Partition(lam)
    if lam.n > DIRECT_IMMANANT_CAP:
        raise SizeError(f"n={lam.n} exceeds {DIRECT_IMMANANT_CAP} for the direct sum")
    cache: dict = {}
    total = 0
    for perm in permutations(range(lam.n)):
        if any(perm[i] == i for i in range(lam.n)):
            continue
        mu = Partition(sorted((len(c) for c in cycles_of(perm)), reverse=True))
        if mu not in cache:
            cache[mu] = mn_character(lam, mu)
        total += cache[mu]
    return total


def hook_d_formula(n: int, j: int) -> int:
    """``d`` for the hook ``(j, 1^{n-j})``: ``(-1)^{n-j} C(n,j)|D_j| + (-1)^{n-1} C(n-1,j)``."""
    if not 1 <= j <= n:
        raise DomainError(f"(j, 1^(n-j)) needs 1 <= j <= n, got n={n}, j={j}")
    derangements = int(rencontres(j, 0, 1))
    return (-1) ** (n - j) * comb(n, j) * derangements + (-1) ** (n - 1) * comb(n - 1, j)


def _subshapes(lam: Partition, size: int) -> list[Partition]:
    return [mu for mu in partitions_of(size) if len(mu) <= len(lam) and all(m <= lam.part(i) for i, m in enumerate(mu, 1))]


def immanant_polynomial(lam: Partition) -> list[Fraction]:
    """Coefficients (ascending in ``x``) of ``Imm_lam(xI - K_n)/f^lam`` by branching."""
    lam = Partition(lam)
    n = lam.n
    if n > IMMANANT_CAP:
        raise SizeError(f"n={n} exceeds {IMMANANT_CAP}")
    f = syt_count(lam)
    out = []
    for k in range(n + 1):
        inner = sum(
            skew_syt_count(lam, mu) * syt_count(mu) * eta(mu)(1) for mu in _subshapes(lam, n - k)
        )
        out.append(Fraction((-1) ** (n - k) * comb(n, k)) * inner / f)
    return out


def immanant_polynomial_direct(lam: Partition) -> list[Fraction]:
    """Same coefficients from the n!-term sum ``sum_pi chi^lam(pi) prod_i (xI - K)_{i, pi(i)}``."""
    lam = Partition(lam)
    n = lam.n
    if n > DIRECT_IMMANANT_CAP:
        raise SizeError(f"n={n} exceeds {DIRECT_IMMANANT_CAP}")
    coeffs = [0] * (n + 1)
    cache: dict = {}
    for perm in permutations(range(n)):
        cyc = cycles_of(perm)
        mu = Partition(sorted((len(c) for c in cyc), reverse=True))
        if mu not in cache:
            cache[mu] = mn_character(lam, mu)
        fix = sum(1 for c in cyc if len(c) == 1)
        # diagonal entries give x, off-diagonal ones -1
        coeffs[fix] += cache[mu] * (-1) ** (n - fix)
    f = syt_count(lam)
    return [Fraction(c, f) for c in coeffs]


# -- dispatch and tables -------------------------------------------------------------------


def eta_value(lam: Partition, alpha: Optional[Fraction] = None, method: str = "auto") -> Value:
    """``eta`` by the requested route; ``alpha=None`` asks for the polynomial."""
    lam = Partition(lam)
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}")
    if method == "auto":
        if alpha == 1:
            method = "closed1"
        elif alpha == 2:
            method = "closed2"
        else:
            method = "colored"
    if method in ("closed1", "det1"):
        if alpha is None or alpha != 1:
            raise DomainError(f"method {method} needs --alpha 1")
        return eta1_closed(lam) if method == "closed1" else eta1_det(lam)
    if method == "closed2":
        if alpha is None or alpha != 2:
            raise DomainError("method closed2 needs --alpha 2")
        return eta2_closed(lam)
    if method == "colored":
        poly = eta(lam)
    elif method == "minors":
        poly = eta_minor_sum(lam)
    else:
        if alpha is not None and alpha != 0:
            return eta_rencontres_at(lam, lam.width, alpha)
        poly = eta_rencontres(lam)
    return poly if alpha is None else poly(alpha)


@dataclass
class SpectrumRow:
    shape: Partition
    eta: Value
    mult: Optional[int]


@dataclass
class SpectrumTable:
    n: int
    alpha: Optional[Fraction]
    rows: list

    def total_multiplicity(self) -> Optional[int]:
        if any(r.mult is None for r in self.rows):
            return None
        return sum(r.mult for r in self.rows)


def multiplicity(lam: Partition, alpha) -> Optional[int]:
    """Eigenvalue multiplicity in the derangement graph: ``(f^lam)^2`` at a = 1, ``f^{2 lam}`` at a = 2."""
    if alpha == 1:
        return syt_count(lam) ** 2
    if alpha == 2:
        return syt_count(double_rows(Partition(lam)))
    return None


def spectrum_table(n: int, alpha: Optional[Fraction] = None, method: str = "auto") -> SpectrumTable:
    if n > TABLE_CAP:
        raise SizeError(f"n={n} exceeds the table cap {TABLE_CAP}")
    if alpha == 2 and n > ALPHA2_MULT_CAP:
        raise SizeError(f"n={n} exceeds {ALPHA2_MULT_CAP} for a = 2 multiplicities")
    rows = [SpectrumRow(lam, eta_value(lam, alpha, method), multiplicity(lam, alpha)) for lam in partitions_of(n)]
    return SpectrumTable(n, alpha, rows)
