"""Derangement graphs built explicitly, and their spectra by dense diagonalization."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

import numpy as np

from .colored import matching_derangement_count, perfect_matchings, rencontres
from .errors import DomainError, SizeError
from .partitions import Partition, partitions_of
from .spectra import eta, multiplicity

log = logging.getLogger(__name__)

PERM_GRAPH_CAP = 7
MATCHING_GRAPH_CAP = 6
EIGEN_CAP = 12000
TOL = {1: 1e-8, 2: 1e-6}
_CHUNK = 512


@dataclass
class DenseGraph:
    n_vertices: int
    packed: np.ndarray  # rows of the adjacency matrix, np.packbits along axis 1

    def adjacency(self, dtype=np.float64) -> np.ndarray:
        bits = np.unpackbits(self.packed, axis=1, count=self.n_vertices)
        return bits.astype(dtype)

    def degrees(self) -> np.ndarray:
        return np.unpackbits(self.packed, axis=1, count=self.n_vertices).sum(axis=1)

    def is_symmetric(self) -> bool:
        a = np.unpackbits(self.packed, axis=1, count=self.n_vertices)
        return bool((a == a.T).all()) and not a.diagonal().any()


def _disjointness_graph(labels: np.ndarray) -> DenseGraph:
    """Vertices are rows of ``labels``; adjacent iff the rows differ in every position."""
    n_vertices = labels.shape[0]
    packed = []
    for start in range(0, n_vertices, _CHUNK):
        block = labels[start : start + _CHUNK]
        adj = (block[:, None, :] != labels[None, :, :]).all(axis=2)
        packed.append(np.packbits(adj, axis=1))
    return DenseGraph(n_vertices, np.concatenate(packed) if packed else np.zeros((0, 0), np.uint8))


def build_perm_derangement_graph(n: int) -> DenseGraph:
    """Cayley graph of ``S_n`` generated by the derangements."""
    if n > PERM_GRAPH_CAP:
        raise SizeError(f"n={n} exceeds {PERM_GRAPH_CAP}")
    if n < 1:
        raise DomainError("n must be positive")
    perms = np.array(list(permutations(range(n))), dtype=np.int8)
    g = _disjointness_graph(perms)
    expected = int(rencontres(n, 0, 1))
    if not (g.degrees() == expected).all():
        raise AssertionError("permutation derangement graph is not regular")
    return g


def build_matching_derangement_graph(n: int) -> DenseGraph:
    """Perfect matchings of ``K_{2n}``, adjacent when they share no edge."""
    if n > MATCHING_GRAPH_CAP:
        raise SizeError(f"n={n} exceeds {MATCHING_GRAPH_CAP}")
    if n < 1:
        raise DomainError("n must be positive")
    matchings = np.array(list(perfect_matchings(2 * n)), dtype=np.int8)
    g = _disjointness_graph(matchings)
    if not (g.degrees() == matching_derangement_count(n)).all():
        raise AssertionError("matching derangement graph is not regular")
    return g


def spectrum_numeric(g: DenseGraph) -> np.ndarray:
    """Adjacency eigenvalues in ascending order."""
    if g.n_vertices > EIGEN_CAP:
        raise SizeError(f"{g.n_vertices} vertices exceeds {EIGEN_CAP}")
    return np.linalg.eigvalsh(g.adjacency())


@dataclass
class ShapeReport:
    shape: Partition
    eta: Fraction
    expected_mult: int
    found_mult: int
    max_residual: float

    def to_json(self) -> dict:
        return {
            "shape": str(self.shape),
            "eta": str(self.eta),
            "expected_mult": self.expected_mult,
            "found_mult": self.found_mult,
            "max_residual": self.max_residual,
        }


@dataclass
class SpectrumReport:
    n: int
    alpha: int
    n_vertices: int
    shapes: list = field(default_factory=list)
    unmatched: int = 0
    passed: bool = False

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "vertices": self.n_vertices,
            "passed": self.passed,
            "unmatched": self.unmatched,
            "shapes": [s.to_json() for s in self.shapes],
        }


def verify_spectrum(n: int, alpha: int) -> SpectrumReport:
    """Match the numeric spectrum against exact eigenvalues and multiplicities.

    Shapes with equal eigenvalues have their multiplicities pooled, so the
    ``found_mult`` of such a shape is the count for the pooled value.
    """
    if alpha not in TOL:
        raise DomainError("graph spectra exist only for alpha 1 and 2")
    g = build_perm_derangement_graph(n) if alpha == 1 else build_matching_derangement_graph(n)
    evs = spectrum_numeric(g)
    tol = TOL[alpha]
    shapes = partitions_of(n)
    exact = {lam: eta(lam)(alpha) for lam in shapes}
    mults = {lam: multiplicity(lam, alpha) for lam in shapes}
    pooled: dict = {}
    for lam in shapes:
        pooled[exact[lam]] = pooled.get(exact[lam], 0) + mults[lam]

    claimed = np.zeros(len(evs), dtype=bool)
    found: dict = {}
    residual: dict = {}
    for value in pooled:
        v = float(value)
        close = np.abs(evs - v) <= tol * max(1.0, abs(v))
        found[value] = int(close.sum())
        residual[value] = float(np.abs(evs[close] - v).max()) if close.any() else float("nan")
        claimed |= close
    report = SpectrumReport(n, alpha, g.n_vertices)
    for lam in shapes:
        v = exact[lam]
        report.shapes.append(ShapeReport(lam, v, mults[lam], found[v], residual[v]))
    report.unmatched = int((~claimed).sum())
    report.passed = report.unmatched == 0 and all(found[v] == pooled[v] for v in pooled)
    if not report.passed:
        log.warning("spectrum mismatch for n=%d alpha=%d", n, alpha)
    return report
