"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 verification
failure.  Data goes to standard output (or ``--output``), diagnostics to
standard error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from contextlib import contextmanager
from typing import IO, Iterator, Sequence

import numpy as np

from . import __version__
from .analysis import degree_stats, eccentricities, eccentricity, memory_model, weakly_connected_components
from .bench import BenchConfig, emit_report, run_bench, sample_sources
from .engine import VARIANTS, apsp, sssp
from .errors import ConfigurationError, DawnError, DomainError, GraphBoundsError, GraphFormatError
from .generators import random_corpus
from .graph import transpose
from .io import FORMATS, load_graph, save_csr
from .verify import VerifyReport, verify_graph

log = logging.getLogger("dawnsp")

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _thread_list(text: str) -> tuple[int, ...]:
    try:
        counts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad thread list {text!r}") from None
    if not counts or any(c < 1 for c in counts) or list(counts) != sorted(set(counts)):
        raise argparse.ArgumentTypeError("thread counts must be positive and strictly ascending")
    return counts


@contextmanager
def _output(path: str | None, binary: bool = False) -> Iterator[IO]:
    if path is None:
        yield sys.stdout.buffer if binary else sys.stdout
        return
    with open(path, "wb" if binary else "w", newline=None if binary else "") as f:
        yield f


def _load(args: argparse.Namespace):
    return load_graph(args.graph, args.input_format)


def _check_node(n: int, node: int, flag: str) -> None:
    if not 0 <= node < n:
        raise UsageError(f"{flag} {node} outside [0, {n})")


def cmd_convert(args: argparse.Namespace) -> int:
    csr = load_graph(args.input, args.input_format)
    save_csr(csr, args.output)
    mem = memory_model(max(csr.n, 1), csr.m)
    print(f"n: {csr.n}")
    print(f"m: {csr.m}")
    print(f"dawn_bytes: {mem.dawn_bytes}")
    print(f"bfs_bytes: {mem.bfs_bytes}")
    print(f"eta: {mem.eta:.6f}")
    return EXIT_OK


def cmd_sssp(args: argparse.Namespace) -> int:
    csr = _load(args)
    _check_node(csr.n, args.source, "--source")
    csc = transpose(csr) if args.variant == "bovm" else None
    res = sssp(csr, args.source, args.variant, csc)
    with _output(args.output) as out:
        out.write("node,distance\n")
        for v, d in enumerate(res.distance.tolist()):
            if v == res.source:
                continue
            if d:
                out.write(f"{v},{d}\n")
            elif args.unreached == "inf":
                out.write(f"{v},inf\n")
    print(f"iterations={res.iterations} edge_inspections={res.edge_inspections}", file=sys.stderr)
    return EXIT_OK


def cmd_apsp(args: argparse.Namespace) -> int:
    csr = _load(args)
    with _output(args.output) as out:
        out.write("source,node,distance\n")

        def sink(res) -> None:
            reached = np.flatnonzero(res.distance)
            out.writelines(f"{res.source},{v},{res.distance[v]}\n" for v in reached.tolist())

        result = apsp(csr, threads=args.threads, sink=sink)
    print(f"edge_inspections={result.edge_inspections}", file=sys.stderr)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    csr = _load(args)
    if args.eccentricity is not None:
        _check_node(csr.n, args.eccentricity, "--eccentricity")
    if args.diameter_sample is not None and args.diameter_sample > csr.n:
        raise UsageError(f"--diameter-sample {args.diameter_sample} exceeds n={csr.n}")
    wcc = weakly_connected_components(csr)
    deg = degree_stats(csr)
    lines = [
        ("n", csr.n),
        ("m", csr.m),
        ("components", wcc.count),
        ("s_wcc", wcc.s_wcc),
        ("e_wcc", wcc.e_wcc),
        ("max_out_degree", deg["max_out_degree"]),
        ("max_in_degree", deg["max_in_degree"]),
        ("avg_degree", f"{deg['avg_degree']:.6g}"),
    ]
    if csr.n:
        lines.append(("memory_eta", f"{memory_model(csr.n, csr.m).eta:.6f}"))
    if args.eccentricity is not None:
        lines.append((f"eccentricity[{args.eccentricity}]", eccentricity(csr, args.eccentricity)))
    if args.diameter_sample is not None:
        sources = sample_sources(csr.n, args.diameter_sample, args.seed)
        bound = int(eccentricities(csr, sources).max()) if sources else 0
        lines.append((f"max_eccentricity_lower_bound[k={args.diameter_sample}]", bound))
    for key, value in lines:
        print(f"{key}: {value}")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = BenchConfig(
        source_count=args.sources,
        runs_per_source=args.runs,
        seed=args.seed,
        thread_counts=args.threads,
        variant=args.variant,
        trim_confidence=args.confidence,
    )
    cfg.validate()
    csr = _load(args)
    if cfg.source_count > csr.n:
        raise UsageError(f"--sources {cfg.source_count} exceeds n={csr.n}")
    report = run_bench(csr, cfg, name=args.name or str(args.graph))
    with _output(args.output, binary=True) as out:
        out.write(emit_report(report, args.format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.graph is None and args.random is None:
        raise UsageError("verify needs a graph path or --random COUNT")
    report = VerifyReport()
    if args.graph is not None:
        csr = _load(args)
        if csr.n <= args.exhaustive_limit:
            sources = None
        else:
            sources = sample_sources(csr.n, min(args.sources, csr.n), args.seed)
        report.merge(verify_graph(csr, sources, label=str(args.graph)))
    if args.random is not None:
        for label, g in random_corpus(args.random, sizes=(8, args.max_n), seed=args.seed):
            report.merge(verify_graph(g, None, label=label))
            if not report.ok:
                break
    for line in report.summary_lines():
        print(line)
    if not report.ok:
        print(str(report.first_failure), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dawnsp", description="Unweighted shortest paths via Boolean frontier operations.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name: str, help: str, graph_optional: bool = False) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        if graph_optional:
            sp.add_argument("graph", nargs="?")
        else:
            sp.add_argument("graph")
        sp.add_argument("--input-format", choices=FORMATS, help="override format sniffing")
        return sp

    sp = sub.add_parser("convert", help="write a binary CSR cache")
    sp.add_argument("input")
    sp.add_argument("output")
    sp.add_argument("--input-format", choices=FORMATS)
    sp.set_defaults(func=cmd_convert)

    sp = graph_cmd("sssp", "distances from one source as CSV")
    sp.add_argument("--source", type=int, required=True)
    sp.add_argument("--variant", choices=VARIANTS, default="auto")
    sp.add_argument("--unreached", choices=("omit", "inf"), default="omit")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_sssp)

    sp = graph_cmd("apsp", "all-pairs distances as CSV (reached pairs only)")
    sp.add_argument("--threads", type=_positive, default=1)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_apsp)

    sp = graph_cmd("stats", "structural statistics")
    sp.add_argument("--eccentricity", type=int, metavar="NODE")
    sp.add_argument("--diameter-sample", type=_positive, metavar="K")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_stats)

    sp = graph_cmd("bench", "timing harness")
    sp.add_argument("--sources", type=_positive, default=500)
    sp.add_argument("--runs", type=_positive, default=64)
    sp.add_argument("--threads", type=_thread_list, default=(1,), help="ascending list, e.g. 1,2,4")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--variant", choices=VARIANTS, default="auto")
    sp.add_argument("--confidence", type=float, default=0.95)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--name", help="graph label in the report")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_bench)

    sp = graph_cmd("verify", "cross-check solvers against the oracles", graph_optional=True)
    sp.add_argument("--sources", type=_positive, default=64, help="sampled sources for large graphs")
    sp.add_argument("--exhaustive-limit", type=int, default=256, help="check every source up to this n")
    sp.add_argument("--random", type=_positive, metavar="COUNT", help="also sweep COUNT random digraphs")
    sp.add_argument("--max-n", type=_positive, default=256)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, --version, usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (UsageError, ConfigurationError, DomainError) as exc:
        print(f"dawnsp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphFormatError, GraphBoundsError, OSError) as exc:
        print(f"dawnsp: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DawnError as exc:
        print(f"dawnsp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
