"""Graphs, alpha-arrays and exact geodesic distance statistics.

Distances are computed by one breadth-first search per source node. The
distance histogram (alpha-array) is accumulated over unordered node pairs
and is the only input needed for the diameter, mean and median.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ._backend import kernels


class GraphError(ValueError):
    """Invalid graph structure or statistic request."""


class DisconnectedGraphError(GraphError):
    """Raised when a distance computation meets an unreachable node."""

    def __init__(self, node: int):
        super().__init__(f"graph is disconnected: node {node} is unreachable")
        self.node = node


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes ``0..n-1``.

    Edges are stored canonically as sorted ``(u, v)`` tuples with ``u < v``.
    Self-loops and duplicate edges are rejected. Connectivity is not
    enforced here; distance operations raise :class:`DisconnectedGraphError`.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    _indptr: np.ndarray = field(init=False, repr=False, compare=False)
    _indices: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"node count must be >= 1, got {self.n}")
        canon = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise GraphError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))

        m = len(canon)
        if m:
            ends = np.asarray(canon, dtype=np.int64)
            src = np.concatenate([ends[:, 0], ends[:, 1]])
            dst = np.concatenate([ends[:, 1], ends[:, 0]])
            order = np.lexsort((dst, src))
            src, dst = src[order], dst[order]
            counts = np.bincount(src, minlength=self.n)
        else:
            dst = np.zeros(0, dtype=np.int64)
            counts = np.zeros(self.n, dtype=np.int64)
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        np.cumsum(counts, out=indptr[1:])
        object.__setattr__(self, "_indptr", indptr)
        object.__setattr__(self, "_indices", np.ascontiguousarray(dst, dtype=np.int32))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> list[int]:
        return self._indices[self._indptr[u]:self._indptr[u + 1]].tolist()

    def degree(self, u: int) -> int:
        return int(self._indptr[u + 1] - self._indptr[u])

    def is_connected(self) -> bool:
        return bool((kernels.bfs(self._indptr, self._indices, 0) >= 0).all())

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Return the CSR adjacency ``(indptr, indices)``, neighbors sorted."""
        return self._indptr, self._indices


@dataclass(frozen=True)
class AlphaArray:
    """Counts of unordered node pairs by geodesic distance.

    ``alpha[j - 1]`` is the number of pairs at distance ``j`` for
    ``j = 1..n-1``. Shorter input is padded with zeros.
    """

    n: int
    alpha: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"node count must be >= 1, got {self.n}")
        values = [int(a) for a in self.alpha]
        length = max(self.n - 1, 0)
        if len(values) > length:
            if any(values[length:]):
                raise GraphError(f"distance {length + 1} impossible with {self.n} nodes")
            values = values[:length]
        if any(a < 0 for a in values):
            raise GraphError("alpha counts must be non-negative")
        values += [0] * (length - len(values))
        if sum(values) != self.n * (self.n - 1) // 2:
            raise GraphError(
                f"alpha counts sum to {sum(values)}, expected n(n-1)/2 = "
                f"{self.n * (self.n - 1) // 2}"
            )
        object.__setattr__(self, "alpha", tuple(values))

    @property
    def pairs(self) -> int:
        return self.n * (self.n - 1) // 2

    def __getitem__(self, j: int) -> int:
        """Count at distance ``j`` (1-based)."""
        if 1 <= j <= len(self.alpha):
            return self.alpha[j - 1]
        return 0


@dataclass(frozen=True)
class DistanceSummary:
    n: int
    diameter: int
    mean: Fraction
    median: float

    @property
    def mean_float(self) -> float:
        return float(self.mean)


def _threads() -> int:
    raw = os.environ.get("SWLAB_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise GraphError(f"SWLAB_THREADS must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Geodesic distances from ``source`` to every node."""
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} outside 0..{g.n - 1}")
    indptr, indices = g.csr()
    dist = kernels.bfs(indptr, indices, source)
    unreached = np.flatnonzero(dist < 0)
    if unreached.size:
        raise DisconnectedGraphError(int(unreached[0]))
    return dist.tolist()


def alpha_array(g: Graph, threads: int | None = None) -> AlphaArray:
    """Distance histogram of ``g`` over unordered pairs.

    Sources are split into contiguous blocks that may run on separate
    threads (the compiled kernel releases the GIL). Block histograms are
    integer sums, so the result does not depend on scheduling.
    """
    indptr, indices = g.csr()
    n = g.n
    workers = min(threads or _threads(), n)
    bounds = np.linspace(0, n, workers + 1).astype(int)
    blocks = [(int(a), int(b)) for a, b in zip(bounds, bounds[1:]) if b > a]

    def run(block):
        return kernels.alpha_histogram(indptr, indices, block[0], block[1])

    if len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=len(blocks)) as pool:
            results = list(pool.map(run, blocks))
    else:
        results = [run(b) for b in blocks]

    total = np.zeros(max(n, 1), dtype=np.int64)
    for hist, missing in results:
        if missing >= 0:
            raise DisconnectedGraphError(int(missing))
        total += hist
    return AlphaArray(n, tuple(int(x) for x in total[1:n]))


def _require_pairs(a: AlphaArray) -> None:
    if a.n < 2:
        raise GraphError("statistics need at least two nodes")


def diameter(a: AlphaArray) -> int:
    _require_pairs(a)
    for j in range(len(a.alpha), 0, -1):
        if a.alpha[j - 1]:
            return j
    raise GraphError("empty alpha-array")  # unreachable for valid arrays


def mean_distance(a: AlphaArray) -> Fraction:
    """Exact average distance over distinct node pairs."""
    _require_pairs(a)
    total = sum(j * c for j, c in enumerate(a.alpha, start=1))
    return Fraction(total, a.pairs)


def _order_statistic(a: AlphaArray, k: int) -> int:
    # k is a 0-based rank in the sorted distance multiset
    seen = 0
    for j, c in enumerate(a.alpha, start=1):
        seen += c
        if k < seen:
            return j
    raise GraphError(f"rank {k} out of range")


def median_distance(a: AlphaArray) -> float:
    """Median of the multiset of pair distances (a natural m or m - 0.5)."""
    _require_pairs(a)
    m = a.pairs
    if m % 2:
        return float(_order_statistic(a, m // 2))
    lo = _order_statistic(a, m // 2 - 1)
    hi = _order_statistic(a, m // 2)
    return (lo + hi) / 2


def summarize(a: AlphaArray) -> DistanceSummary:
    return DistanceSummary(a.n, diameter(a), mean_distance(a), median_distance(a))


def summary(g: Graph) -> DistanceSummary:
    """Diameter, mean and median of ``g`` from a single alpha-array pass."""
    if g.n < 2:
        raise GraphError("statistics need at least two nodes")
    return summarize(alpha_array(g))
