"""Ground truth for Jack characters and derangement sums.

Jack polynomials are built from scratch by orthogonalizing the monomial basis
under the deformed Hall inner product, then read off in the power-sum basis.
Symmetric group characters come from the Murnaghan-Nakayama rule.
"""
from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Optional

from .errors import DomainError, SingularParameterError, SizeError
from .partitions import Partition, conjugate, dominates, fixed_point_free, partitions_of, z_factor

log = logging.getLogger(__name__)

JACK_CAP = 7
POWER_CAP = 10
MN_CAP = 14
ETA_CHAR_CAP = 12
CACHE_FORMAT = "chartable-v1"


@dataclass
class SymFuncExpansion:
    n: int
    basis: str  # "monomial" or "power"
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("monomial", "power"):
            raise DomainError(f"unknown basis {self.basis!r}")
        self.coeffs = {Partition(k): Fraction(v) for k, v in self.coeffs.items() if v}
        for k in self.coeffs:
            if sum(k) != self.n:
                raise DomainError(f"key {k} does not have size {self.n}")

    def __getitem__(self, mu) -> Fraction:
        return self.coeffs.get(Partition(mu), Fraction(0))


def class_size(mu: Partition) -> int:
    """Number of permutations of cycle type ``mu``."""
    return factorial(sum(mu)) // z_factor(mu)


def _times_power_sum(expansion: dict, r: int) -> dict:
    """Multiply a monomial expansion by ``p_r``."""
    out: dict = {}
    for nu, c in expansion.items():
        parts = list(nu)
        for v in sorted(set(parts) | {0}):
            rho = parts[:]
            if v == 0:
                rho.append(r)
            else:
                rho[rho.index(v)] = v + r
            rho = tuple(sorted(rho, reverse=True))
            # m_nu * x_i^r lands on m_rho once per part of rho equal to v + r
            out[rho] = out.get(rho, 0) + c * rho.count(v + r)
    return out


@lru_cache(maxsize=None)
def _power_to_monomial(mu: tuple) -> tuple:
    exp = {(): 1}
    for r in mu:
        exp = _times_power_sum(exp, r)
    return tuple(sorted(exp.items()))


def power_to_monomial(mu: Partition) -> SymFuncExpansion:
    """``p_mu`` in the monomial basis."""
    mu = Partition(mu)
    if mu.n > POWER_CAP:
        raise SizeError(f"|mu|={mu.n} exceeds {POWER_CAP}")
    return SymFuncExpansion(mu.n, "monomial", dict(_power_to_monomial(tuple(mu))))


def _invert(matrix: list[list[Fraction]], rhs_rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Solve ``matrix @ X = rhs_rows`` by Gauss-Jordan (small sizes only)."""
    n = len(matrix)
    aug = [row[:] + rhs[:] for row, rhs in zip(matrix, rhs_rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _monomial_in_power(n: int) -> tuple[list[Partition], list[list[Fraction]]]:
    """Rows: ``m_nu`` written in the ``p`` basis, both indexed by ``partitions_of(n)``."""
    shapes = partitions_of(n)
    index = {s: i for i, s in enumerate(shapes)}
    # P[mu][nu] = [m_nu] p_mu
    P = [[Fraction(0)] * len(shapes) for _ in shapes]
    for mu in shapes:
        for nu, c in _power_to_monomial(tuple(mu)):
            P[index[mu]][index[Partition(nu)]] = Fraction(c)
    ident = [[Fraction(int(i == j)) for j in range(len(shapes))] for i in range(len(shapes))]
    Pinv = _invert(P, ident)
    # m_nu = sum_mu Pinv[nu][mu] p_mu
    return shapes, Pinv


def _jack_basis(n: int, alpha: Fraction) -> dict:
    shapes, m_in_p = _monomial_in_power(n)
    weights = [alpha ** len(mu) * z_factor(mu) for mu in shapes]

    def inner(u, v):
        return sum(a * b * w for a, b, w in zip(u, v, weights))

    # ascending lexicographic order extends dominance
    order = sorted(range(len(shapes)), key=lambda i: tuple(shapes[i]))
    done: list[tuple[list[Fraction], Fraction]] = []
    ones = shapes.index(Partition([1] * n))
    result = {}
    for i in order:
        u = m_in_p[i][:]
        for v, vv in done:
            c = inner(m_in_p[i], v) / vv
            if c:
                u = [a - c * b for a, b in zip(u, v)]
        norm = inner(u, u)
        if norm == 0:
            raise SingularParameterError(f"degenerate Gram pivot at alpha={alpha} for {shapes[i]}")
        done.append((u, norm))
        # only p_{1^n} contains the square-free monomial x_1...x_n, with coefficient n!
        lead = u[ones] * factorial(n)
        if lead == 0:
            raise SingularParameterError(f"J_{shapes[i]} has no m_(1^n) term at alpha={alpha}")
        scale = Fraction(factorial(n)) / lead
        result[shapes[i]] = [scale * a for a in u]
    return result


@lru_cache(maxsize=256)
def _jack_cached(n: int, alpha: Fraction) -> dict:
    return _jack_basis(n, alpha)


def jack_in_power_basis(lam: Partition, alpha) -> SymFuncExpansion:
    """``J_lam`` at a fixed rational parameter, as coefficients of ``p_mu``."""
    lam = Partition(lam)
    alpha = Fraction(alpha)
    if lam.n > JACK_CAP:
        raise SizeError(f"|lam|={lam.n} exceeds the Jack cap {JACK_CAP}")
    if lam.n == 0:
        return SymFuncExpansion(0, "power", {Partition(): 1})
    if alpha == 0:
        raise SingularParameterError("alpha = 0 makes the inner product degenerate")
    table = _jack_cached(lam.n, alpha)
    shapes = partitions_of(lam.n)
    return SymFuncExpansion(lam.n, "power", dict(zip(shapes, table[lam])))


def power_to_monomial_expansion(f: SymFuncExpansion) -> SymFuncExpansion:
    """Rewrite a power-sum expansion in the monomial basis."""
    if f.basis != "power":
        raise DomainError("expected a power-sum expansion")
    out: dict = {}
    for mu, c in f.coeffs.items():
        for nu, d in _power_to_monomial(tuple(mu)):
            out[nu] = out.get(nu, 0) + c * d
    return SymFuncExpansion(f.n, "monomial", out)


def eta_via_jack(lam: Partition, alpha) -> Fraction:
    """Sum of the power-sum coefficients of ``J_lam`` over fixed-point-free cycle types."""
    J = jack_in_power_basis(lam, alpha)
    return sum((c for mu, c in J.coeffs.items() if fixed_point_free(mu)), Fraction(0))


def is_dominance_triangular(lam: Partition, alpha) -> bool:
    m = power_to_monomial_expansion(jack_in_power_basis(lam, alpha))
    return all(dominates(Partition(lam), mu) for mu in m.coeffs)


# -- symmetric group characters --------------------------------------------


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: tuple) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in beta:
            height = sum(1 for x in beta if b - r < x < b)
            total += (-1) ** height * _mn((beta - {b}) | {b - r}, rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """``chi^lam`` on the class of cycle type ``mu`` by rim-hook removal."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise DomainError(f"sizes differ: {lam} vs {mu}")
    if lam.n > MN_CAP:
        raise SizeError(f"n={lam.n} exceeds {MN_CAP}")
    L = len(lam)
    beta = frozenset(p + L - i for i, p in enumerate(lam, start=1))
    return _mn(beta, tuple(mu))


def syt_count(lam: Partition) -> int:
    """``f^lam`` by the hook-length formula."""
    lam = Partition(lam)
    lc = conjugate(lam)
    prod = 1
    for r, c in lam.cells():
        prod *= lam.part(r) - c + lc.part(c) - r + 1
    return factorial(lam.n) // prod


@lru_cache(maxsize=None)
def _skew(lam: tuple, mu: tuple) -> int:
    if sum(lam) == sum(mu):
        return 1 if lam == mu else 0
    total = 0
    for i in range(len(lam)):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        mu_i = mu[i] if i < len(mu) else 0
        # remove the corner of row i if the row stays above mu and stays a partition
        if lam[i] > below and lam[i] > mu_i:
            new = list(lam)
            new[i] -= 1
            total += _skew(tuple(p for p in new if p), mu)
    return total


def skew_syt_count(lam: Partition, mu: Partition) -> int:
    """``f^{lam/mu}``, counted by peeling outer corners."""
    lam, mu = Partition(lam), Partition(mu)
    if len(mu) > len(lam) or any(m > lam.part(i) for i, m in enumerate(mu, start=1)):
        raise DomainError(f"{mu} is not contained in {lam}")
    return _skew(tuple(lam), tuple(mu))


def eta_via_characters(lam: Partition) -> Fraction:
    """``(1/f^lam) sum_{pi in D_n} chi^lam(pi)`` summed by cycle type."""
    lam = Partition(lam)
    if lam.n > ETA_CHAR_CAP:
        raise SizeError(f"n={lam.n} exceeds {ETA_CHAR_CAP}")
    total = sum(
        class_size(mu) * mn_character(lam, mu) for mu in partitions_of(lam.n) if fixed_point_free(mu)
    )
    return Fraction(total, syt_count(lam))


@dataclass
class CharacterTable:
    n: int
    shapes: list
    values: dict  # (lam, mu) -> int

    def __call__(self, lam, mu) -> int:
        return self.values[(Partition(lam), Partition(mu))]

    def class_size(self, mu) -> int:
        return class_size(mu)

    def to_json(self) -> str:
        return json.dumps(
            {
                "format": CACHE_FORMAT,
                "n": self.n,
                "rows": {str(l): [self.values[(l, m)] for m in self.shapes] for l in self.shapes},
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str, n: int) -> "CharacterTable":
        data = json.loads(text)
        if data.get("format") != CACHE_FORMAT or data.get("n") != n:
            raise ValueError("stale or foreign cache entry")
        shapes = partitions_of(n)
        rows = data["rows"]
        values = {}
        for l in shapes:
            row = rows[str(l)]
            if len(row) != len(shapes):
                raise ValueError("truncated row")
            for m, v in zip(shapes, row):
                values[(l, m)] = int(v)
        table = cls(n, shapes, values)
        # cheap sanity check, so that a tampered file is not trusted
        if any(table(l, [1] * n) != syt_count(l) for l in shapes):
            raise ValueError("cached degrees do not match")
        return table


def default_cache_dir() -> Path:
    return Path(os.environ.get("JACKD_CACHE", ".jackd-cache"))


def character_table(n: int, cache_dir: Optional[os.PathLike] = None) -> CharacterTable:
    """Full character table of ``S_n``; read from and written to ``cache_dir`` when given."""
    if n > MN_CAP:
        raise SizeError(f"n={n} exceeds {MN_CAP}")
    path = Path(cache_dir) / f"chartable-{n}.json" if cache_dir is not None else None
    if path is not None and path.exists():
        try:
            return CharacterTable.from_json(path.read_text(), n)
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("ignoring corrupt cache entry %s: %s", path, exc)
    shapes = partitions_of(n)
    values = {(l, m): mn_character(l, m) for l in shapes for m in shapes}
    table = CharacterTable(n, shapes, values)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(table.to_json())
        tmp.replace(path)
    return table
