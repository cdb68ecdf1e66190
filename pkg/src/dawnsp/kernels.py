"""Compiled frontier kernels.

All kernels release the GIL so independent sources can run on a thread
pool.  Distances use ``0`` as the "no path yet" sentinel; the source is
never written.  Counters are returned as a tuple
``(iterations, edge_inspections, node_inspections, distance_writes)``.
"""

from __future__ import annotations

import numba as nb
import numpy as np

_JIT = dict(nopython=True, nogil=True, cache=True)


@nb.jit(**_JIT)
def sovm_round(row_ptr, col, source, alpha, beta, dist, step):
    """Push from every node flagged in ``alpha`` along its out-edges.

    Targets still holding the sentinel are settled at ``step`` and flagged in
    ``beta``; settled targets are skipped without a write.
    """
    n = alpha.shape[0]
    new = 0
    edges = 0
    nodes = 0
    for i in range(n):
        if not alpha[i]:
            continue
        nodes += 1
        for k in range(row_ptr[i], row_ptr[i + 1]):
            edges += 1
            t = col[k]
            if dist[t] == 0 and t != source:
                beta[t] = True
                dist[t] = step
                new += 1
    return new, edges, nodes


@nb.jit(**_JIT)
def bovm_round(col_ptr, row, alpha, beta, dist, step):
    """Probe each node outside ``alpha`` for an in-neighbour inside it.

    The scan of a column stops at the first hit.  ``alpha`` is merged with
    ``beta`` only after the sweep so this round only sees last round's set.
    """
    n = alpha.shape[0]
    new = 0
    edges = 0
    nodes = 0
    for i in range(n):
        if alpha[i]:
            continue
        nodes += 1
        for k in range(col_ptr[i], col_ptr[i + 1]):
            edges += 1
            u = row[k]
            if alpha[u] and u != i:
                beta[i] = True
                dist[i] = step
                new += 1
                break
    for i in range(n):
        if beta[i]:
            alpha[i] = True
            beta[i] = False
    return new, edges, nodes


@nb.jit(**_JIT)
def sovm_run(row_ptr, col, source, dist):
    n = dist.shape[0]
    alpha = np.zeros(n, dtype=np.bool_)
    beta = np.zeros(n, dtype=np.bool_)
    alpha[source] = True
    iterations = 0
    edges = 0
    nodes = 0
    writes = 0
    step = 0
    while step < n:
        step += 1
        new, e, v = sovm_round(row_ptr, col, source, alpha, beta, dist, step)
        edges += e
        nodes += v
        if new == 0:
            break
        iterations += 1
        writes += new
        alpha[:] = False
        alpha, beta = beta, alpha
    return iterations, edges, nodes, writes


@nb.jit(**_JIT)
def bovm_run(col_ptr, row, source, dist):
    n = dist.shape[0]
    alpha = np.zeros(n, dtype=np.bool_)
    beta = np.zeros(n, dtype=np.bool_)
    alpha[source] = True
    iterations = 0
    edges = 0
    nodes = 0
    writes = 0
    step = 0
    while step < n:
        step += 1
        new, e, v = bovm_round(col_ptr, row, alpha, beta, dist, step)
        edges += e
        nodes += v
        if new == 0:
            break
        iterations += 1
        writes += new
    return iterations, edges, nodes, writes
