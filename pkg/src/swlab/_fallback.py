"""Pure-Python versions of the BFS kernels; same signatures as ``_kernels``."""

from collections import deque

import numpy as np


def bfs(indptr, indices, source):
    n = len(indptr) - 1
    ptr = indptr.tolist()
    nbr = indices.tolist()
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for k in range(ptr[u], ptr[u + 1]):
            w = nbr[k]
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return np.asarray(dist, dtype=np.int64)


def alpha_histogram(indptr, indices, start, stop):
    n = len(indptr) - 1
    ptr = indptr.tolist()
    nbr = indices.tolist()
    adj = [nbr[ptr[u]:ptr[u + 1]] for u in range(n)]
    hist = [0] * max(n, 1)
    for s in range(start, stop):
        seen = {s}
        frontier = [s]
        level = 0
        while frontier:
            level += 1
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            if nxt:
                hist[level] += sum(1 for w in nxt if w > s)
            frontier = nxt
        if len(seen) < n:
            missing = next(i for i in range(n) if i not in seen)
            return np.asarray(hist, dtype=np.int64), missing
    return np.asarray(hist, dtype=np.int64), -1
