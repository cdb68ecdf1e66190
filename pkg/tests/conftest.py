from __future__ import annotations

import numpy as np
import pytest
from hypothesis import strategies as st

from dawnsp.generators import erdos_renyi, fixture_graphs
from dawnsp.graph import CsrGraph, from_edges


@st.composite
def digraphs(draw, max_nodes: int = 24, min_nodes: int = 1) -> CsrGraph:
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = draw(
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=4 * n)
    )
    return from_edges(n, pairs)


@pytest.fixture(scope="session")
def fixtures() -> dict[str, CsrGraph]:
    return fixture_graphs()


@pytest.fixture(scope="session")
def small_random() -> list[CsrGraph]:
    """50 digraphs with n <= 128 across sparse and dense regimes."""
    rng = np.random.default_rng(7)
    out = []
    for k in range(50):
        n = int(rng.integers(2, 129))
        p = (0.01, 0.03, 0.08, 0.3)[k % 4]
        out.append(erdos_renyi(n, p, seed=1000 + k))
    return out


def edge_set(g) -> set[tuple[int, int]]:
    return set(g.edges())


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
