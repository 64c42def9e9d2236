# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled BFS kernels over CSR adjacency (int32 indptr/indices)."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()


def bfs(const int[::1] indptr, const int[::1] indices, int source):
    """Distances from ``source``; unreachable nodes get -1."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    cdef long long[::1] d = dist
    cdef int* queue = <int*> malloc(n * sizeof(int))
    if queue == NULL:
        raise MemoryError()
    cdef Py_ssize_t head = 0, tail = 0, k
    cdef int u, w
    with nogil:
        d[source] = 0
        queue[tail] = source
        tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if d[w] < 0:
                    d[w] = d[u] + 1
                    queue[tail] = w
                    tail += 1
    free(queue)
    return dist


def alpha_histogram(const int[::1] indptr, const int[::1] indices,
                    int start, int stop):
    """Count unordered pairs (s, v), v > s, by distance for sources in [start, stop).

    Returns ``(hist, unreachable)`` where ``hist[j]`` is the pair count at
    distance j and ``unreachable`` is a node not reached from some source,
    or -1 when every BFS covered the whole graph.
    """
    cdef Py_ssize_t n = indptr.shape[0] - 1
    hist_arr = np.zeros(max(n, 1), dtype=np.int64)
    cdef long long[::1] hist = hist_arr
    cdef int* queue = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* dist = <int*> malloc(max(n, 1) * sizeof(int))
    if queue == NULL or dist == NULL:
        free(queue)
        free(dist)
        raise MemoryError()
    cdef Py_ssize_t head, tail, k, i
    cdef int s, u, w, du
    cdef int missing = -1
    with nogil:
        for s in range(start, stop):
            for i in range(n):
                dist[i] = -1
            dist[s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[u] + 1
                for k in range(indptr[u], indptr[u + 1]):
                    w = indices[k]
                    if dist[w] < 0:
                        dist[w] = du
                        queue[tail] = w
                        tail += 1
                        if w > s:
                            hist[du] += 1
            if tail < n:
                for i in range(n):
                    if dist[i] < 0:
                        missing = <int> i
                        break
                break
    free(queue)
    free(dist)
    return hist_arr, missing
