"""Unweighted shortest-path solvers built on Boolean frontier operations.

Two solvers share one distance contract:

* ``sssp_sovm`` pushes the current frontier along CSR out-edges, touching
  only targets that have no distance yet.
* ``sssp_bovm`` sweeps unreached nodes and probes their CSC in-edges for a
  member of the reached set, stopping at the first hit.

Distances are ``uint32`` with ``0`` meaning "unreached"; the source also
reads ``0`` and is told apart by :attr:`SsspResult.reached_mask`.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Literal, Sequence

import numpy as np

from . import kernels
from .errors import CapacityError, ConfigurationError, GraphBoundsError
from .graph import CscGraph, CsrGraph, transpose

__all__ = [
    "SsspResult",
    "FrontierState",
    "ApspResult",
    "sssp_sovm",
    "sssp_bovm",
    "sssp",
    "msssp",
    "apsp",
    "sovm_rounds",
    "bovm_rounds",
    "DIST_DTYPE",
    "VARIANTS",
]

log = logging.getLogger(__name__)

DIST_DTYPE = np.uint32
VARIANTS = ("bovm", "sovm", "auto")
Variant = Literal["bovm", "sovm", "auto"]

DEFAULT_DENSE_LIMIT = 8192


@dataclass(eq=False)
class SsspResult:
    """Distances from one source plus work counters.

    ``iterations`` counts rounds that settled at least one node, so it equals
    the eccentricity of the source.  ``edge_inspections`` counts adjacency
    entries read; ``node_inspections`` counts outer-loop node visits.
    """

    source: int
    distance: np.ndarray
    iterations: int
    edge_inspections: int
    node_inspections: int
    distance_writes: int

    @property
    def reached_mask(self) -> np.ndarray:
        return self.distance > 0

    @property
    def reached(self) -> int:
        return int(np.count_nonzero(self.distance))

    @property
    def redundant_writes(self) -> int:
        """Distance writes beyond one per settled node (always 0 here)."""
        return self.distance_writes - self.reached


@dataclass
class FrontierState:
    """Snapshot of the two Boolean vectors after a round.

    For SOVM ``alpha`` is the frontier for the next round; for BOVM it is the
    cumulative reached set (source included).  ``beta`` is cleared between
    rounds in both cases.
    """

    alpha: np.ndarray
    beta: np.ndarray
    is_converged: bool
    step: int
    settled: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))


def _check_source(n: int, source: int) -> int:
    source = int(source)
    if not 0 <= source < n:
        raise GraphBoundsError(f"source {source} outside [0, {n})")
    return source


def sssp_sovm(csr: CsrGraph, source: int) -> SsspResult:
    source = _check_source(csr.n, source)
    dist = np.zeros(csr.n, dtype=DIST_DTYPE)
    it, e, v, w = kernels.sovm_run(csr.row_ptr, csr.col, source, dist)
    return SsspResult(source, dist, int(it), int(e), int(v), int(w))


def sssp_bovm(csc: CscGraph, source: int) -> SsspResult:
    source = _check_source(csc.n, source)
    dist = np.zeros(csc.n, dtype=DIST_DTYPE)
    it, e, v, w = kernels.bovm_run(csc.col_ptr, csc.row, source, dist)
    return SsspResult(source, dist, int(it), int(e), int(v), int(w))


def sssp(
    csr: CsrGraph,
    source: int,
    variant: Variant = "auto",
    csc: CscGraph | None = None,
) -> SsspResult:
    """Dispatch to a solver; ``auto`` means SOVM."""
    if variant == "bovm":
        if csc is None:
            raise ConfigurationError("variant 'bovm' needs the CSC companion graph")
        return sssp_bovm(csc, source)
    if variant in ("sovm", "auto"):
        return sssp_sovm(csr, source)
    raise ConfigurationError(f"unknown variant {variant!r}; choose from {VARIANTS}")


def sovm_rounds(csr: CsrGraph, source: int) -> Iterator[FrontierState]:
    """Run SOVM one round at a time, yielding a copy of the state after each.

    The final yielded state has ``is_converged=True`` and an empty frontier.
    """
    source = _check_source(csr.n, source)
    dist = np.zeros(csr.n, dtype=DIST_DTYPE)
    alpha = np.zeros(csr.n, dtype=np.bool_)
    beta = np.zeros(csr.n, dtype=np.bool_)
    alpha[source] = True
    step = 0
    while step < csr.n:
        step += 1
        new, _, _ = kernels.sovm_round(csr.row_ptr, csr.col, source, alpha, beta, dist, step)
        settled = np.flatnonzero(beta)
        alpha[:] = False
        alpha, beta = beta, alpha
        yield FrontierState(alpha.copy(), beta.copy(), new == 0, step, settled)
        if new == 0:
            return


def bovm_rounds(csc: CscGraph, source: int) -> Iterator[FrontierState]:
    """BOVM counterpart of :func:`sovm_rounds`; ``alpha`` is cumulative."""
    source = _check_source(csc.n, source)
    dist = np.zeros(csc.n, dtype=DIST_DTYPE)
    alpha = np.zeros(csc.n, dtype=np.bool_)
    beta = np.zeros(csc.n, dtype=np.bool_)
    alpha[source] = True
    step = 0
    while step < csc.n:
        step += 1
        before = alpha.copy()
        new, _, _ = kernels.bovm_round(csc.col_ptr, csc.row, alpha, beta, dist, step)
        settled = np.flatnonzero(alpha & ~before)
        yield FrontierState(alpha.copy(), beta.copy(), new == 0, step, settled)
        if new == 0:
            return


def _solver(
    csr: CsrGraph, variant: Variant, csc: CscGraph | None
) -> Callable[[int], SsspResult]:
    if variant == "bovm":
        if csc is None:
            csc = transpose(csr)
        return lambda s: sssp_bovm(csc, s)
    if variant in ("sovm", "auto"):
        return lambda s: sssp_sovm(csr, s)
    raise ConfigurationError(f"unknown variant {variant!r}; choose from {VARIANTS}")


def _map(fn: Callable[[int], SsspResult], sources: Sequence[int], threads: int):
    if threads < 1:
        raise ConfigurationError(f"threads must be >= 1, got {threads}")
    if threads == 1 or len(sources) <= 1:
        return [fn(s) for s in sources]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, sources))


def msssp(
    csr: CsrGraph,
    sources: Sequence[int],
    threads: int = 1,
    variant: Variant = "auto",
    csc: CscGraph | None = None,
) -> list[SsspResult]:
    """Solve several sources, one solver run per source, results in input order.

    All sources are range-checked before any work starts.  For ``bovm`` the
    CSC is derived from ``csr`` when not supplied.
    """
    sources = [_check_source(csr.n, s) for s in sources]
    return _map(_solver(csr, variant, csc), sources, threads)


@dataclass(eq=False)
class ApspResult:
    """All-pairs output.  ``distance`` is ``None`` when rows went to a sink."""

    distance: np.ndarray | None
    edge_inspections: int
    node_inspections: int
    iterations: np.ndarray


def apsp(
    csr: CsrGraph,
    threads: int = 1,
    sink: Callable[[SsspResult], None] | None = None,
    dense_limit: int = DEFAULT_DENSE_LIMIT,
    chunk: int = 256,
) -> ApspResult:
    """All-pairs distances via one SOVM run per source.

    Without ``sink`` the full ``n x n`` matrix is returned, which is refused
    for ``n > dense_limit``.  With ``sink`` each row is handed over in source
    order and only counters are kept.
    """
    n = csr.n
    if sink is None and n > dense_limit:
        raise CapacityError(
            f"dense APSP matrix refused for n={n} > {dense_limit}; pass a sink"
        )
    matrix = np.zeros((n, n), dtype=DIST_DTYPE) if sink is None else None
    iterations = np.zeros(n, dtype=np.int64)
    edges = 0
    nodes = 0
    fn = _solver(csr, "sovm", None)
    for lo in range(0, n, chunk):
        for res in _map(fn, range(lo, min(lo + chunk, n)), threads):
            edges += res.edge_inspections
            nodes += res.node_inspections
            iterations[res.source] = res.iterations
            if matrix is not None:
                matrix[res.source] = res.distance
            else:
                sink(res)
    log.debug("apsp n=%d edge_inspections=%d", n, edges)
    return ApspResult(matrix, edges, nodes, iterations)
