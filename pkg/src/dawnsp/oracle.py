"""Slow, independent reference implementations for correctness checks.

Nothing here shares code with the compiled solvers: BFS is a plain FIFO
queue over Python lists and walk counting is exact integer matrix algebra.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, GraphBoundsError
from .graph import CsrGraph

__all__ = [
    "BfsTrace",
    "bfs_baseline",
    "DenseCountMatrix",
    "path_count_power",
    "first_hit_distance",
    "MAX_DENSE_N",
]

MAX_DENSE_N = 32


@dataclass(eq=False)
class BfsTrace:
    """Queue-BFS distances (``0`` = unreached, source reads ``0``) and counters.

    ``settled_checks`` counts inspected edges whose target already had a
    distance (or was the source), i.e. work a frontier filter would avoid.
    """

    source: int
    distance: np.ndarray
    nodes_visited: int
    edges_visited: int
    settled_checks: int


def bfs_baseline(csr: CsrGraph, source: int) -> BfsTrace:
    n = csr.n
    if not 0 <= source < n:
        raise GraphBoundsError(f"source {source} outside [0, {n})")
    ptr = csr.row_ptr.tolist()
    col = csr.col.tolist()
    dist = [0] * n
    seen = [False] * n
    seen[source] = True
    queue = deque([source])
    nodes = edges = settled = 0
    while queue:
        i = queue.popleft()
        nodes += 1
        for k in range(ptr[i], ptr[i + 1]):
            edges += 1
            t = col[k]
            if seen[t]:
                settled += 1
                continue
            seen[t] = True
            dist[t] = dist[i] + 1
            queue.append(t)
    return BfsTrace(source, np.array(dist, dtype=np.uint32), nodes, edges, settled)


@dataclass(frozen=True)
class DenseCountMatrix:
    """Square matrix of exact non-negative integer walk counts (``n <= 32``)."""

    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.counts)
        if n > MAX_DENSE_N:
            raise DomainError(f"dense count matrix limited to n <= {MAX_DENSE_N}, got {n}")
        if any(len(row) != n for row in self.counts):
            raise DomainError("count matrix must be square")
        if any(c < 0 for row in self.counts for c in row):
            raise DomainError("walk counts must be non-negative")

    @property
    def n(self) -> int:
        return len(self.counts)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.counts[i][j]

    @classmethod
    def adjacency(cls, csr: CsrGraph) -> DenseCountMatrix:
        if csr.n > MAX_DENSE_N:
            raise DomainError(f"dense count matrix limited to n <= {MAX_DENSE_N}, got {csr.n}")
        rows = [[0] * csr.n for _ in range(csr.n)]
        for u, v in csr.edges():
            rows[u][v] = 1
        return cls(tuple(map(tuple, rows)))

    def matmul(self, other: DenseCountMatrix) -> DenseCountMatrix:
        cols = list(zip(*other.counts))
        return DenseCountMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, c)) for c in cols)
                for row in self.counts
            )
        )


@lru_cache(maxsize=64)
def _powers(adj: DenseCountMatrix, k: int) -> tuple[DenseCountMatrix, ...]:
    """``(A, A^2, ..., A^k)``; cached so repeated pair queries stay cheap."""
    if k == 1:
        return (adj,)
    prev = _powers(adj, k - 1)
    return prev + (prev[-1].matmul(adj),)


def path_count_power(adjacency: DenseCountMatrix, k: int) -> DenseCountMatrix:
    """``A^k`` by repeated multiplication; entry ``(i, j)`` counts length-k walks."""
    if not 1 <= k <= max(adjacency.n, 1):
        raise DomainError(f"power k must lie in [1, n={adjacency.n}], got {k}")
    return _powers(adjacency, k)[-1]


def first_hit_distance(adjacency: DenseCountMatrix, i: int, j: int) -> int | None:
    """Smallest ``k`` in ``[1, n-1]`` with a nonzero ``A^k[i, j]``, else ``None``."""
    n = adjacency.n
    if i == j:
        raise DomainError("first-hit distance is defined for i != j only")
    if not (0 <= i < n and 0 <= j < n):
        raise GraphBoundsError(f"pair ({i}, {j}) outside [0, {n})")
    if n < 2:
        return None
    for k, power in enumerate(_powers(adjacency, n - 1), start=1):
        if power[i, j] > 0:
            return k
    return None
