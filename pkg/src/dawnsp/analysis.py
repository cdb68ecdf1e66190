"""Structural statistics: weakly connected components, eccentricity, memory.

Component edge counts use the directed edges whose endpoints both lie in the
component.  Since a weak component is closed under edges, that is every
out-edge of its nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

from .errors import DomainError, GraphBoundsError
from .graph import CsrGraph

__all__ = [
    "WccSummary",
    "weakly_connected_components",
    "eccentricity",
    "eccentricities",
    "MemoryModel",
    "memory_model",
    "degree_stats",
]


@dataclass(frozen=True, eq=False)
class WccSummary:
    component_id: np.ndarray
    node_counts: np.ndarray
    edge_counts: np.ndarray

    @property
    def count(self) -> int:
        return int(self.node_counts.size)

    @property
    def component_sizes(self) -> dict[int, tuple[int, int]]:
        return {
            c: (int(s), int(e))
            for c, (s, e) in enumerate(zip(self.node_counts, self.edge_counts))
        }

    @property
    def s_wcc(self) -> int:
        return int(self.node_counts.max()) if self.count else 0

    @property
    def e_wcc(self) -> int:
        return int(self.edge_counts.max()) if self.count else 0

    def s_wcc_of(self, node: int) -> int:
        return int(self.node_counts[self.component_id[node]])

    def e_wcc_of(self, node: int) -> int:
        return int(self.edge_counts[self.component_id[node]])

    def apsp_work_bound(self) -> int:
        """Sum over components of (node count x edge count)."""
        return int(np.dot(self.node_counts.astype(object), self.edge_counts.astype(object)))


def _scipy_matrix(csr: CsrGraph) -> sp.csr_matrix:
    data = np.ones(csr.m, dtype=np.int8)
    return sp.csr_matrix((data, csr.col, csr.row_ptr), shape=(csr.n, csr.n))


def weakly_connected_components(csr: CsrGraph) -> WccSummary:
    if csr.n == 0:
        empty = np.zeros(0, dtype=np.int64)
        return WccSummary(empty, empty, empty)
    k, labels = csgraph.connected_components(
        _scipy_matrix(csr), directed=True, connection="weak"
    )
    labels = labels.astype(np.int64)
    nodes = np.bincount(labels, minlength=k)
    edges = np.bincount(labels, weights=csr.out_degree(), minlength=k).astype(np.int64)
    return WccSummary(labels, nodes, edges)


def eccentricities(csr: CsrGraph, sources: Sequence[int]) -> np.ndarray:
    """Largest finite hop distance from each source (0 if nothing is reachable)."""
    src = np.asarray(sources, dtype=np.int64)
    if src.size and (src.min() < 0 or src.max() >= csr.n):
        bad = src[(src < 0) | (src >= csr.n)][0]
        raise GraphBoundsError(f"source {int(bad)} outside [0, {csr.n})")
    if src.size == 0:
        return np.zeros(0, dtype=np.int64)
    dist = csgraph.shortest_path(
        _scipy_matrix(csr), method="D", directed=True, unweighted=True, indices=src
    )
    dist = np.atleast_2d(dist)
    dist[~np.isfinite(dist)] = 0
    return dist.max(axis=1).astype(np.int64)


def eccentricity(csr: CsrGraph, source: int) -> int:
    return int(eccentricities(csr, [source])[0])


@dataclass(frozen=True)
class MemoryModel:
    """Minimum byte budgets of the two-bitmap solver versus queue BFS.

    ``dawn_bytes`` is ``4m + 3n`` (adjacency, 32-bit distances, two byte
    arrays), ``bfs_bytes`` is ``4m + 8n``; ``eta`` is their ratio.
    """

    n: int
    m: int
    dawn_bytes: int
    bfs_bytes: int
    eta: float

    @property
    def avg_degree(self) -> float:
        return self.m / self.n

    @property
    def eta_exact(self) -> Fraction:
        return Fraction(self.dawn_bytes, self.bfs_bytes)


def memory_model(n: int, m: int) -> MemoryModel:
    if n < 1:
        raise DomainError(f"memory model needs n >= 1, got {n}")
    if m < 0:
        raise DomainError(f"negative edge count {m}")
    dawn = 4 * m + 3 * n
    bfs = 4 * m + 8 * n
    # int / int is correctly rounded in Python, even past 2**53.
    return MemoryModel(n, m, dawn, bfs, dawn / bfs)


def degree_stats(csr: CsrGraph) -> dict[str, float]:
    out_deg = csr.out_degree()
    in_deg = np.bincount(csr.col, minlength=csr.n) if csr.n else out_deg
    return {
        "max_out_degree": int(out_deg.max()) if csr.n else 0,
        "max_in_degree": int(in_deg.max()) if csr.n else 0,
        "avg_degree": csr.m / csr.n if csr.n else 0.0,
    }
