from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from swlab.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def floyd_warshall(g: Graph) -> np.ndarray:
    """All-pairs distances by Floyd-Warshall; independent of the BFS kernels."""
    inf = 10 ** 9
    d = np.full((g.n, g.n), inf, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in g.edges:
        d[u, v] = d[v, u] = 1
    for k in range(g.n):
        d = np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :])
    return d


def brute_stats(g: Graph):
    """(diameter, mean, median) straight from the sorted list of pair distances."""
    d = floyd_warshall(g)
    iu = np.triu_indices(g.n, 1)
    vals = sorted(int(x) for x in d[iu])
    m = len(vals)
    median = vals[m // 2] if m % 2 else (vals[m // 2 - 1] + vals[m // 2]) / 2
    return max(vals), Fraction(sum(vals), m), float(median)


@st.composite
def connected_graphs(draw, min_n=2, max_n=40):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    perm = draw(st.permutations(range(n)))
    edges = {tuple(sorted((perm[u], perm[v]))) for u, v in edges}
    return Graph(n, tuple(edges))


@pytest.fixture(scope="session")
def measurement_cache():
    return {}
