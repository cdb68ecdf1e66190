import numpy as np
import pytest
from hypothesis import given, settings

from dawnsp.errors import DomainError, GraphBoundsError
from dawnsp.generators import cycle_graph, erdos_renyi, path_graph
from dawnsp.graph import from_edges
from dawnsp.oracle import DenseCountMatrix, bfs_baseline, first_hit_distance, path_count_power

from .conftest import digraphs


def count_walks(g, k):
    """Enumerate every length-k walk by depth-first search."""
    out = [[0] * g.n for _ in range(g.n)]
    succ = [g.successors(u).tolist() for u in range(g.n)]

    def dfs(start, node, depth):
        if depth == k:
            out[start][node] += 1
            return
        for nxt in succ[node]:
            dfs(start, nxt, depth + 1)

    for s in range(g.n):
        dfs(s, s, 0)
    return out


def test_bfs_path():
    t = bfs_baseline(path_graph(3), 0)
    assert t.distance.tolist() == [0, 1, 2]
    assert t.edges_visited == 2 and t.nodes_visited == 3


def test_bfs_isolated_source():
    t = bfs_baseline(from_edges(4, [(1, 2)]), 0)
    assert t.distance.tolist() == [0, 0, 0, 0]
    assert t.edges_visited == 0 and t.nodes_visited == 1


def test_bfs_bounds():
    with pytest.raises(GraphBoundsError):
        bfs_baseline(path_graph(3), 3)


def test_bfs_counts_settled_checks_on_back_edges():
    t = bfs_baseline(cycle_graph(3), 0)
    # 2 -> 0 points back at the source
    assert t.settled_checks == 1


def test_power_cycle_k3_is_identity():
    a = DenseCountMatrix.adjacency(cycle_graph(3))
    assert path_count_power(a, 3).counts == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_power_triangle_k2_diagonal():
    a = DenseCountMatrix.adjacency(cycle_graph(3, directed=False))
    a2 = path_count_power(a, 2)
    assert [a2[i, i] for i in range(3)] == [2, 2, 2]


def test_power_one_is_adjacency():
    g = erdos_renyi(9, 0.3, seed=1)
    a = DenseCountMatrix.adjacency(g)
    assert path_count_power(a, 1) == a
    assert {(i, j) for i in range(9) for j in range(9) if a[i, j]} == set(g.edges())


def test_power_random_n8_k3_matches_enumeration():
    g = erdos_renyi(8, 0.35, seed=21)
    a = DenseCountMatrix.adjacency(g)
    assert [list(r) for r in path_count_power(a, 3).counts] == count_walks(g, 3)


@settings(max_examples=60, deadline=None)
@given(digraphs(max_nodes=8))
def test_power_matches_enumeration(g):
    a = DenseCountMatrix.adjacency(g)
    for k in range(1, min(4, g.n) + 1):
        assert [list(r) for r in path_count_power(a, k).counts] == count_walks(g, k)


def test_power_domain():
    a = DenseCountMatrix.adjacency(path_graph(3))
    with pytest.raises(DomainError):
        path_count_power(a, 0)
    with pytest.raises(DomainError):
        DenseCountMatrix.adjacency(path_graph(33))


def test_first_hit_examples():
    assert first_hit_distance(DenseCountMatrix.adjacency(path_graph(3)), 0, 2) == 2
    two_edges = DenseCountMatrix.adjacency(from_edges(4, [(0, 1), (2, 3)]))
    assert first_hit_distance(two_edges, 0, 3) is None
    with pytest.raises(DomainError):
        first_hit_distance(two_edges, 1, 1)


def test_first_hit_matches_bfs_n10():
    g = erdos_renyi(10, 0.2, seed=33)
    a = DenseCountMatrix.adjacency(g)
    for i in range(10):
        d = bfs_baseline(g, i).distance
        for j in range(10):
            if i != j:
                hit = first_hit_distance(a, i, j)
                assert (hit or 0) == d[j]


@settings(max_examples=40, deadline=None)
@given(digraphs(max_nodes=32, min_nodes=2))
def test_first_hit_matches_bfs(g):
    a = DenseCountMatrix.adjacency(g)
    for i in range(g.n):
        d = bfs_baseline(g, i).distance
        for j in range(g.n):
            if i != j:
                assert (first_hit_distance(a, i, j) or 0) == d[j]


@settings(max_examples=60, deadline=None)
@given(digraphs(max_nodes=40))
def test_fact1_predecessor_layer(g):
    preds = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        preds[v].add(u)
    for s in range(g.n):
        d = bfs_baseline(g, s).distance.astype(int)
        hop = np.where(d == 0, -1, d)
        hop[s] = 0
        for v in range(g.n):
            if hop[v] >= 1:
                assert any(hop[u] == hop[v] - 1 for u in preds[v])
