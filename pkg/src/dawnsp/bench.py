"""Benchmark harness: random sources, repeated runs, t-based trimming, efficiency.

Per thread count ``N`` the sampled sources are solved ``runs_per_source``
times on a fresh ``N``-worker pool.  Each SSSP call is timed on its own
(latency samples) and each whole batch is timed as well (wall samples).
``mean_s`` is the trimmed batch wall time divided by the number of sources,
the effective cost of one SSSP at that thread count, and efficiency is

    eta_N = T_base / (T_N * N / N_base)

with ``N_base`` the smallest configured thread count.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import stats

from .analysis import WccSummary
from .engine import VARIANTS, msssp, sssp
from .errors import ConfigurationError, DomainError
from .graph import CsrGraph, transpose

__all__ = [
    "BenchConfig",
    "ThreadTiming",
    "BenchReport",
    "sample_sources",
    "trim_samples",
    "t_critical",
    "compute_efficiency",
    "run_bench",
    "emit_report",
    "parse_report",
    "CSV_HEADER",
    "REPORT_SCHEMA",
]

CSV_HEADER = ("graph", "threads", "mean_s", "samples_retained", "efficiency")

_SAMPLES = {"type": "array", "items": {"type": "number", "minimum": 0}}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "dawnsp benchmark report",
    "type": "object",
    "required": [
        "graph_name", "n", "m", "variant", "seed", "runs_per_source",
        "trim_confidence", "sources", "baseline_threads", "baseline_label", "timings",
    ],
    "properties": {
        "graph_name": {"type": "string"},
        "n": {"type": "integer", "minimum": 0},
        "m": {"type": "integer", "minimum": 0},
        "variant": {"enum": ["bovm", "sovm", "auto"]},
        "seed": {"type": ["integer", "null"]},
        "runs_per_source": {"type": "integer", "minimum": 1},
        "trim_confidence": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
        "sources": {"type": "array", "items": {"type": "integer", "minimum": 0}, "uniqueItems": True},
        "baseline_threads": {"type": "integer", "minimum": 1},
        "baseline_label": {"type": "string"},
        "timings": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": [
                    "threads", "mean_s", "latency_s", "samples_raw", "samples_retained",
                    "wall_samples", "wall_retained", "per_source_raw",
                    "per_source_retained", "distance_digest", "efficiency",
                ],
                "properties": {
                    "threads": {"type": "integer", "minimum": 1},
                    "mean_s": {"type": "number", "minimum": 0},
                    "latency_s": {"type": "number", "minimum": 0},
                    "samples_raw": {"type": "integer", "minimum": 0},
                    "samples_retained": {"type": "integer", "minimum": 0},
                    "wall_samples": _SAMPLES,
                    "wall_retained": _SAMPLES,
                    "per_source_raw": {"type": "array", "items": _SAMPLES},
                    "per_source_retained": {"type": "array", "items": _SAMPLES},
                    "distance_digest": {"type": "string", "pattern": "^[0-9a-f]{64}$"},
                    "efficiency": {"type": "number", "exclusiveMinimum": 0},
                },
            },
        },
    },
}


@dataclass(frozen=True)
class BenchConfig:
    source_count: int = 500
    runs_per_source: int = 64
    seed: int = 0
    thread_counts: tuple[int, ...] = (1,)
    variant: str = "auto"
    trim_confidence: float = 0.95

    def validate(self, n: int | None = None) -> None:
        if self.source_count < 1:
            raise ConfigurationError("source_count must be >= 1")
        if n is not None and self.source_count > n:
            raise ConfigurationError(f"source_count={self.source_count} exceeds n={n}")
        if self.runs_per_source < 1:
            raise ConfigurationError("runs_per_source must be >= 1")
        tc = tuple(self.thread_counts)
        if not tc or any(t < 1 for t in tc):
            raise ConfigurationError("thread_counts must be non-empty positive counts")
        if list(tc) != sorted(set(tc)):
            raise ConfigurationError("thread_counts must be strictly ascending")
        if self.variant not in VARIANTS:
            raise ConfigurationError(f"unknown variant {self.variant!r}")
        if not 0.0 < self.trim_confidence < 1.0:
            raise ConfigurationError("trim_confidence must lie in (0, 1)")


def sample_sources(
    n: int, k: int, seed: int | None, wcc: WccSummary | None = None
) -> list[int]:
    """``k`` distinct uniform node ids, reproducible for a fixed seed.

    ``wcc`` is accepted for interface symmetry but deliberately unused:
    sources are not restricted to the largest component.
    """
    if k > n:
        raise DomainError(f"cannot sample {k} distinct sources from n={n}")
    if k < 0:
        raise DomainError(f"negative sample size {k}")
    rng = np.random.default_rng(seed)
    return rng.choice(n, size=k, replace=False).tolist()


def t_critical(confidence: float, df: int) -> float:
    """Quantile of Student's t at probability ``confidence``."""
    return float(stats.t.ppf(confidence, df))


def trim_samples(samples: Sequence[float], confidence: float = 0.95) -> list[float]:
    """Drop samples outside ``mean +/- t(confidence, len-1) * sd`` in one pass."""
    x = np.asarray(samples, dtype=float)
    if x.size < 3:
        raise DomainError(f"trimming needs at least 3 samples, got {x.size}")
    sd = x.std(ddof=1)
    if sd == 0.0:
        return x.tolist()
    half = t_critical(confidence, x.size - 1) * sd
    mean = x.mean()
    return x[np.abs(x - mean) <= half].tolist()


def _trimmed(samples: list[float], confidence: float) -> list[float]:
    return trim_samples(samples, confidence) if len(samples) >= 3 else list(samples)


def compute_efficiency(times: dict[int, float]) -> dict[int, float]:
    """Multi-threading efficiency relative to the smallest thread count."""
    if not times:
        return {}
    base = min(times)
    t_base = times[base]
    return {
        n: (1.0 if n == base else t_base / (t * (n / base)))
        for n, t in sorted(times.items())
    }


@dataclass
class ThreadTiming:
    threads: int
    mean_s: float
    latency_s: float
    samples_raw: int
    samples_retained: int
    wall_samples: list[float]
    wall_retained: list[float]
    per_source_raw: list[list[float]]
    per_source_retained: list[list[float]]
    distance_digest: str
    efficiency: float = 1.0


@dataclass
class BenchReport:
    graph_name: str
    n: int
    m: int
    variant: str
    seed: int
    runs_per_source: int
    trim_confidence: float
    sources: list[int]
    baseline_threads: int
    timings: list[ThreadTiming] = field(default_factory=list)

    @property
    def baseline_label(self) -> str:
        return f"{self.baseline_threads} thread(s)"

    @property
    def efficiency(self) -> dict[int, float]:
        return {t.threads: t.efficiency for t in self.timings}

    def to_dict(self) -> dict:
        d = asdict(self)
        d["baseline_label"] = self.baseline_label
        return d

    @classmethod
    def from_dict(cls, d: dict) -> BenchReport:
        d = dict(d)
        d.pop("baseline_label", None)
        d["timings"] = [ThreadTiming(**t) for t in d["timings"]]
        return cls(**d)


def _digest(results) -> str:
    h = hashlib.sha256()
    for r in results:
        h.update(r.distance.tobytes())
    return h.hexdigest()


def run_bench(
    graph: CsrGraph,
    cfg: BenchConfig,
    name: str = "graph",
    clock: Callable[[], float] = time.perf_counter,
) -> BenchReport:
    """Time the solver under ``cfg``; graph loading is never timed."""
    cfg.validate(graph.n)
    if clock is time.perf_counter and not time.get_clock_info("perf_counter").monotonic:
        raise ConfigurationError("perf_counter is not monotonic on this platform")
    sources = sample_sources(graph.n, cfg.source_count, cfg.seed)
    csc = transpose(graph) if cfg.variant == "bovm" else None
    # Distances are checked once per sweep, outside the timed region.
    reference = {
        n: _digest(msssp(graph, sources, n, cfg.variant, csc)) for n in cfg.thread_counts
    }

    def timed(s: int) -> float:
        t0 = clock()
        sssp(graph, s, cfg.variant, csc)
        return clock() - t0

    report = BenchReport(
        graph_name=name,
        n=graph.n,
        m=graph.m,
        variant=cfg.variant,
        seed=cfg.seed,
        runs_per_source=cfg.runs_per_source,
        trim_confidence=cfg.trim_confidence,
        sources=sources,
        baseline_threads=cfg.thread_counts[0],
    )
    for threads in cfg.thread_counts:
        raw: list[list[float]] = [[] for _ in sources]
        walls: list[float] = []
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for _ in range(cfg.runs_per_source):
                t0 = clock()
                durations = list(pool.map(timed, sources))
                walls.append(clock() - t0)
                for bucket, d in zip(raw, durations):
                    bucket.append(d)
        retained = [_trimmed(r, cfg.trim_confidence) for r in raw]
        wall_kept = _trimmed(walls, cfg.trim_confidence)
        report.timings.append(
            ThreadTiming(
                threads=threads,
                mean_s=float(np.mean(wall_kept)) / len(sources),
                latency_s=float(np.mean([np.mean(r) for r in retained])),
                samples_raw=sum(map(len, raw)),
                samples_retained=sum(map(len, retained)),
                wall_samples=walls,
                wall_retained=wall_kept,
                per_source_raw=raw,
                per_source_retained=retained,
                distance_digest=reference[threads],
            )
        )
    eff = compute_efficiency({t.threads: t.mean_s for t in report.timings})
    for t in report.timings:
        t.efficiency = eff[t.threads]
    return report


def emit_report(report: BenchReport, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_dict(), indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for t in report.timings:
            w.writerow(
                [report.graph_name, t.threads, repr(t.mean_s), t.samples_retained, repr(t.efficiency)]
            )
        return buf.getvalue().encode()
    raise DomainError(f"unknown report format {fmt!r}; use 'json' or 'csv'")


def parse_report(data: bytes, fmt: str = "json") -> BenchReport | list[dict]:
    """Inverse of :func:`emit_report` (CSV parses to typed row dicts)."""
    if fmt == "json":
        return BenchReport.from_dict(json.loads(data))
    if fmt == "csv":
        rows = list(csv.DictReader(io.StringIO(data.decode())))
        return [
            {
                "graph": r["graph"],
                "threads": int(r["threads"]),
                "mean_s": float(r["mean_s"]),
                "samples_retained": int(r["samples_retained"]),
                "efficiency": float(r["efficiency"]),
            }
            for r in rows
        ]
    raise DomainError(f"unknown report format {fmt!r}; use 'json' or 'csv'")
