"""Runtime correctness checks that cross the solvers against the oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .analysis import WccSummary, eccentricities, weakly_connected_components
from .engine import SsspResult, sssp_bovm, sssp_sovm
from .graph import CscGraph, CsrGraph, transpose
from .oracle import bfs_baseline

__all__ = ["CHECKS", "Counterexample", "VerifyReport", "verify_graph", "hops"]

CHECKS = (
    "oracle_equality",
    "layer_contiguity",
    "predecessor_layer",
    "edge_accounting",
    "iterations_eccentricity",
    "single_write",
)


@dataclass(frozen=True)
class Counterexample:
    check: str
    graph: str
    source: int
    node: int | None
    detail: str

    def __str__(self) -> str:
        where = f"graph {self.graph}, source {self.source}"
        if self.node is not None:
            where += f", node {self.node}"
        return f"{self.check} failed: {where}: {self.detail}"


@dataclass
class VerifyReport:
    passed: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    failed: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    first_failure: Counterexample | None = None
    sources_checked: int = 0
    graphs_checked: int = 0

    @property
    def ok(self) -> bool:
        return self.first_failure is None

    def merge(self, other: VerifyReport) -> None:
        for name in CHECKS:
            self.passed[name] += other.passed[name]
            self.failed[name] += other.failed[name]
        self.sources_checked += other.sources_checked
        self.graphs_checked += other.graphs_checked
        if self.first_failure is None:
            self.first_failure = other.first_failure

    def summary_lines(self) -> list[str]:
        lines = [
            f"{name}: {'PASS' if self.failed[name] == 0 else 'FAIL'} "
            f"({self.passed[name]} passed, {self.failed[name]} failed)"
            for name in CHECKS
        ]
        lines.append(f"graphs={self.graphs_checked} sources={self.sources_checked}")
        if self.first_failure is not None:
            lines.append(f"first counterexample: {self.first_failure}")
        return lines


def hops(distance: np.ndarray, source: int) -> np.ndarray:
    """Sentinel distances to ``int64`` hops with ``-1`` for unreached."""
    h = distance.astype(np.int64)
    h[h == 0] = -1
    h[source] = 0
    return h


def _first_diff(a: np.ndarray, b: np.ndarray) -> int:
    return int(np.flatnonzero(a != b)[0])


def _check_source(
    csr: CsrGraph,
    csc: CscGraph,
    wcc: WccSummary,
    ecc: int,
    res: SsspResult,
    bovm: SsspResult,
) -> list[tuple[str, int | None, str]]:
    """Return ``(check, node, detail)`` for every failed check."""
    s = res.source
    fails: list[tuple[str, int | None, str]] = []
    trace = bfs_baseline(csr, s)

    if not np.array_equal(res.distance, trace.distance):
        v = _first_diff(res.distance, trace.distance)
        fails.append(("oracle_equality", v, f"sovm={res.distance[v]} bfs={trace.distance[v]}"))
    elif not np.array_equal(bovm.distance, trace.distance):
        v = _first_diff(bovm.distance, trace.distance)
        fails.append(("oracle_equality", v, f"bovm={bovm.distance[v]} bfs={trace.distance[v]}"))

    h = hops(res.distance, s)
    levels = np.unique(h[h > 0])
    if levels.size and not np.array_equal(levels, np.arange(1, levels[-1] + 1)):
        gap = int(np.setdiff1d(np.arange(1, levels[-1] + 1), levels)[0])
        fails.append(("layer_contiguity", None, f"no node at distance {gap}"))

    # Every reached node needs an in-neighbour exactly one layer closer.
    dst = np.repeat(np.arange(csc.n), csc.in_degree())
    src = csc.row.astype(np.int64)
    supported = np.zeros(csr.n, dtype=bool)
    good = (h[src] >= 0) & (h[dst] > 0) & (h[src] == h[dst] - 1)
    supported[dst[good]] = True
    orphan = np.flatnonzero((h > 0) & ~supported)
    if orphan.size:
        v = int(orphan[0])
        fails.append(("predecessor_layer", v, f"distance {h[v]} without a predecessor at {h[v] - 1}"))

    reach = h >= 0
    expected = int(csr.out_degree()[reach].sum())
    if res.edge_inspections != expected:
        fails.append(("edge_accounting", None, f"edge_inspections={res.edge_inspections} != sum out-degree {expected}"))
    elif res.edge_inspections > wcc.e_wcc_of(s):
        fails.append(("edge_accounting", None, f"edge_inspections={res.edge_inspections} > component edges {wcc.e_wcc_of(s)}"))

    if res.iterations != ecc or bovm.iterations != ecc:
        fails.append(("iterations_eccentricity", None, f"sovm={res.iterations} bovm={bovm.iterations} eccentricity={ecc}"))

    if res.redundant_writes != 0:
        fails.append(("single_write", None, f"{res.redundant_writes} writes beyond one per settled node"))
    return fails


def verify_graph(
    csr: CsrGraph,
    sources: Sequence[int] | None = None,
    label: str = "<graph>",
    sovm: Callable[[CsrGraph, int], SsspResult] | None = None,
    bovm: Callable[[CscGraph, int], SsspResult] | None = None,
) -> VerifyReport:
    """Run every check for each source (all nodes when ``sources`` is None).

    ``sovm`` and ``bovm`` are injectable so fault-injection tests can swap in
    a broken solver.
    """
    sovm = sovm or sssp_sovm
    bovm = bovm or sssp_bovm
    if sources is None:
        sources = range(csr.n)
    sources = list(sources)
    csc = transpose(csr)
    wcc = weakly_connected_components(csr)
    ecc = eccentricities(csr, sources)
    report = VerifyReport(graphs_checked=1)
    for s, e in zip(sources, ecc.tolist()):
        fails = _check_source(csr, csc, wcc, e, sovm(csr, s), bovm(csc, s))
        failed_names = {name for name, _, _ in fails}
        for name in CHECKS:
            if name in failed_names:
                report.failed[name] += 1
            else:
                report.passed[name] += 1
        if fails and report.first_failure is None:
            name, node, detail = fails[0]
            report.first_failure = Counterexample(name, label, s, node, detail)
        report.sources_checked += 1
    return report
