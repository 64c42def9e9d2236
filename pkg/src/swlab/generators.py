"""Deterministic constructors for the network families under study.

Random families take an integer seed and draw from numpy's PCG64 generator
(``numpy.random.default_rng(seed)``); there is no global RNG state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError


class GeneratorError(GraphError):
    """Invalid generator parameters."""


def complete(n: int) -> Graph:
    if n < 1:
        raise GeneratorError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def star(n: int) -> Graph:
    """Star with center 0 and leaves ``1..n-1``."""
    if n < 2:
        raise GeneratorError(f"star needs n >= 2, got {n}")
    return Graph(n, tuple((0, v) for v in range(1, n)))


def chain(n: int) -> Graph:
    if n < 2:
        raise GeneratorError(f"chain needs n >= 2, got {n}")
    return Graph(n, tuple((u, u + 1) for u in range(n - 1)))


def chain_star(p: int, q: int) -> Graph:
    """Path ``0..p-1`` whose last node ``p-1`` is the center of ``q`` leaves."""
    if p < 1 or q < 0 or p + q < 2:
        raise GeneratorError(f"chain_star needs p >= 1, q >= 0, p + q >= 2; got p={p}, q={q}")
    center = p - 1
    edges = [(u, u + 1) for u in range(p - 1)]
    edges += [(center, p + k) for k in range(q)]
    return Graph(p + q, tuple(edges))


@dataclass(frozen=True)
class RandomGraph:
    """A generated random graph plus the size actually realized."""

    graph: Graph
    requested_n: int

    @property
    def realized_n(self) -> int:
        return self.graph.n


def _pair_from_index(k: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # pairs (u, v), u < v, enumerated as k = v(v-1)/2 + u
    v = ((1 + np.sqrt(1 + 8 * k.astype(np.float64))) / 2).astype(np.int64)
    v -= (v * (v - 1) // 2 > k)
    v += ((v + 1) * v // 2 <= k)
    u = k - v * (v - 1) // 2
    return u, v


def largest_component(n: int, edges: np.ndarray) -> tuple[int, list[tuple[int, int]]]:
    """Restrict an edge list to its largest connected component.

    Nodes are relabeled ``0..n'-1`` preserving their original order; ties
    between equally large components go to the one holding the smallest
    node id.
    """
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges.tolist():
        ru, rv = find(u), find(v)
        if ru != rv:
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
    roots = [find(x) for x in range(n)]
    sizes: dict[int, int] = {}
    for r in roots:
        sizes[r] = sizes.get(r, 0) + 1
    best = min(sizes, key=lambda r: (-sizes[r], r))
    keep = [x for x in range(n) if roots[x] == best]
    relabel = {x: i for i, x in enumerate(keep)}
    sub = [(relabel[u], relabel[v]) for u, v in edges.tolist() if roots[u] == best]
    return len(keep), sub


def erdos_renyi(n: int, z: float, seed: int) -> RandomGraph:
    """G(n, p) with ``p = z / (n - 1)``, reduced to its giant component.

    Each of the ``n(n-1)/2`` pairs is included independently; the gaps
    between included pairs are drawn geometrically so the cost is linear
    in the number of edges.
    """
    if n < 2:
        raise GeneratorError(f"erdos_renyi needs n >= 2, got {n}")
    if not 0 < z < n:
        raise GeneratorError(f"mean degree z must satisfy 0 < z < n, got {z}")
    p = z / (n - 1)
    total = n * (n - 1) // 2
    rng = np.random.default_rng(seed)
    if p >= 1.0:
        idx = np.arange(total, dtype=np.int64)
    else:
        chunks = []
        pos = -1
        batch = max(16, int(total * p * 1.1) + 16)
        while True:
            gaps = rng.geometric(p, size=batch)
            steps = pos + np.cumsum(gaps)
            inside = steps[steps < total]
            chunks.append(inside)
            if inside.size < steps.size:
                break
            pos = int(steps[-1])
        idx = np.concatenate(chunks)
    u, v = _pair_from_index(idx)
    size, edges = largest_component(n, np.stack([u, v], axis=1))
    if size < 2:
        raise GeneratorError(
            f"largest component of G({n}, z={z}) has {size} node(s); z too small"
        )
    return RandomGraph(Graph(size, tuple(edges)), n)


def barabasi_albert(v: int, m: int, steps: int, seed: int) -> Graph:
    """Preferential attachment grown from ``complete(v)``.

    Each new node links to ``m`` distinct earlier nodes. Targets are drawn
    one at a time with probability proportional to current degree among the
    nodes not yet chosen (sampling without replacement).
    """
    if v < 1 or m < 1:
        raise GeneratorError(f"barabasi_albert needs v >= 1 and m >= 1, got v={v}, m={m}")
    if m > v:
        raise GeneratorError(f"m={m} exceeds seed size v={v}")
    if steps < 1:
        raise GeneratorError(f"steps must be >= 1, got {steps}")
    rng = np.random.default_rng(seed)
    edges = [(a, b) for a in range(v) for b in range(a + 1, v)]
    # every edge endpoint appears once, so a uniform draw is degree-proportional
    endpoints = [x for e in edges for x in e]
    for new in range(v, v + steps):
        if not endpoints:
            # seed of a single node has no degree mass yet
            chosen = [0]
        else:
            chosen = []
            while len(chosen) < m:
                target = endpoints[int(rng.integers(len(endpoints)))]
                if target not in chosen:
                    chosen.append(target)
        for t in chosen:
            edges.append((t, new))
            endpoints.extend((t, new))
    return Graph(v + steps, tuple(edges))


SEQUENCE_KINDS = ("constant", "polynomial", "geometric", "explicit")


@dataclass(frozen=True)
class LayeredSpec:
    """Sizes ``a_1..a_steps`` of the layers added to a single base node.

    ``constant``: a_i = c. ``polynomial``: a_i = i**k + 2.
    ``geometric``: a_i = r**i. ``explicit``: the listed values.
    """

    kind: str
    steps: int
    param: int = 2
    values: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in SEQUENCE_KINDS:
            raise GeneratorError(f"unknown sequence kind {self.kind!r}")
        if self.steps < 1:
            raise GeneratorError(f"steps must be >= 1, got {self.steps}")
        if self.kind == "explicit" and len(self.values) < self.steps:
            raise GeneratorError(
                f"explicit sequence has {len(self.values)} values, needs {self.steps}"
            )
        for i, a in enumerate(self.sizes(), start=1):
            if a < 2:
                raise GeneratorError(f"layer size a_{i}={a} < 2")

    def term(self, i: int) -> int:
        if self.kind == "constant":
            return self.param
        if self.kind == "polynomial":
            return i ** self.param + 2
        if self.kind == "geometric":
            return self.param ** i
        return int(self.values[i - 1])

    def sizes(self) -> list[int]:
        return [self.term(i) for i in range(1, self.steps + 1)]

    @property
    def node_count(self) -> int:
        return 1 + sum(self.sizes())

    def with_steps(self, steps: int) -> "LayeredSpec":
        return LayeredSpec(self.kind, steps, self.param, self.values)


def layered(spec: LayeredSpec) -> Graph:
    """Layered tree whose diameter is exactly ``2 * spec.steps``.

    Node 0 is the base. Each layer's first two nodes form its extreme pair;
    they hang off the previous extreme pair, one each, so their distance
    grows by two per layer. Every other node gets one edge to a non-extreme
    node of the previous layer, assigned round-robin (or to the first
    extreme node when the previous layer has no other nodes).
    """
    edges = []
    prev = [0]
    nxt_id = 1
    for i, a in enumerate(spec.sizes(), start=1):
        layer = list(range(nxt_id, nxt_id + a))
        nxt_id += a
        if i == 1:
            edges += [(0, x) for x in layer]
        else:
            c0, d0 = prev[0], prev[1]
            edges += [(c0, layer[0]), (d0, layer[1])]
            pool = prev[2:] or [c0]
            for k, x in enumerate(layer[2:]):
                edges.append((pool[k % len(pool)], x))
        prev = layer
    return Graph(nxt_id, tuple(edges))
