"""Small deterministic graph families for tests, verification and smoke runs."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .graph import CsrGraph, EdgeList, build_csr, from_edges

__all__ = [
    "erdos_renyi",
    "sparse_random",
    "rmat",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_graph",
    "disjoint_union",
    "fixture_graphs",
    "random_corpus",
]


def erdos_renyi(n: int, p: float, seed: int | None = None, directed: bool = True) -> CsrGraph:
    """G(n, p) digraph by dense Bernoulli sampling; meant for n up to a few thousand."""
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < p
    if not directed:
        mask = np.triu(mask, 1)
    src, dst = np.nonzero(mask)
    return build_csr(EdgeList(n, src, dst, directed))


def sparse_random(n: int, avg_degree: float, seed: int | None = None) -> CsrGraph:
    """Uniform random digraph with about ``n * avg_degree`` edges, O(m) memory."""
    rng = np.random.default_rng(seed)
    m = int(round(n * avg_degree))
    src = rng.integers(0, n, size=m)
    dst = rng.integers(0, n, size=m)
    return build_csr(EdgeList(n, src, dst))


def rmat(
    scale: int,
    edge_factor: int = 16,
    seed: int | None = None,
    probs: tuple[float, float, float] = (0.57, 0.19, 0.19),
) -> CsrGraph:
    """Recursive-matrix (Kronecker) digraph on ``2**scale`` nodes.

    Defaults follow the Graph500 generator.  Node ids are randomly permuted
    so high-degree nodes are not clustered at low ids.
    """
    rng = np.random.default_rng(seed)
    n = 1 << scale
    m = edge_factor * n
    a, b, c = probs
    src = np.zeros(m, dtype=np.int64)
    dst = np.zeros(m, dtype=np.int64)
    for bit in range(scale):
        r = rng.random(m)
        down = r >= a + b  # quadrant c or d: source bit set
        right = ((r >= a) & (r < a + b)) | (r >= a + b + c)
        src |= down.astype(np.int64) << bit
        dst |= right.astype(np.int64) << bit
    perm = rng.permutation(n)
    return build_csr(EdgeList(n, perm[src], perm[dst]))


def path_graph(n: int, directed: bool = True) -> CsrGraph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)), directed)


def cycle_graph(n: int, directed: bool = True) -> CsrGraph:
    return from_edges(n, ((i, (i + 1) % n) for i in range(n)), directed)


def star_graph(leaves: int, directed: bool = True) -> CsrGraph:
    """Node 0 points at nodes ``1..leaves``."""
    return from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)), directed)


def complete_graph(n: int) -> CsrGraph:
    return from_edges(n, ((i, j) for i in range(n) for j in range(n) if i != j))


def disjoint_union(*graphs: CsrGraph) -> CsrGraph:
    srcs, dsts = [], []
    offset = 0
    for g in graphs:
        el = g.to_edge_list()
        srcs.append(el.src + offset)
        dsts.append(el.dst + offset)
        offset += g.n
    if not graphs:
        return from_edges(0, [])
    return build_csr(EdgeList(offset, np.concatenate(srcs), np.concatenate(dsts)))


def fixture_graphs() -> dict[str, CsrGraph]:
    """Named structural fixtures (paths, cycles, stars, unions, cliques)."""
    return {
        "single_node": from_edges(1, []),
        "edgeless_5": from_edges(5, []),
        "path_8": path_graph(8),
        "path_8_undirected": path_graph(8, directed=False),
        "cycle_7": cycle_graph(7),
        "cycle_6_undirected": cycle_graph(6, directed=False),
        "star_9": star_graph(9),
        "star_9_undirected": star_graph(9, directed=False),
        "complete_6": complete_graph(6),
        "union_path_cycle": disjoint_union(path_graph(4), cycle_graph(5)),
        "union_star_complete_isolated": disjoint_union(
            star_graph(4), complete_graph(4), from_edges(2, [])
        ),
        # Layered graph with back and cross edges between layers.
        "cross_layer": from_edges(
            7,
            [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5), (5, 1), (4, 2), (5, 6), (6, 0)],
        ),
    }


def random_corpus(
    count: int,
    sizes: tuple[int, int] = (8, 256),
    probabilities: tuple[float, ...] = (0.01, 0.05, 0.1, 0.3),
    seed: int = 0,
) -> Iterator[tuple[str, CsrGraph]]:
    """Yield ``(label, graph)`` Erdős–Rényi digraphs, cycling through ``p``.

    Sizes are drawn log-uniformly from ``sizes`` (inclusive).  The label
    ``er(n=..,p=..,seed=..)`` is enough to rebuild the graph with
    :func:`erdos_renyi`.
    """
    rng = np.random.default_rng(seed)
    lo, hi = np.log(sizes[0]), np.log(sizes[1] + 1)
    for k in range(count):
        n = min(int(np.exp(rng.uniform(lo, hi))), sizes[1])
        p = probabilities[k % len(probabilities)]
        graph_seed = int(rng.integers(2**31))
        yield f"er(n={n},p={p},seed={graph_seed})", erdos_renyi(n, p, graph_seed)
