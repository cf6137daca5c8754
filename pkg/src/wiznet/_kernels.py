"""Hot numeric kernels with numba and pure-numpy implementations.

The numba flavor is a set of @njit loops over flat arrays; the numpy flavor
uses vectorized operations (or plain loops where the algorithm is inherently
sequential). _backend decides at import time which flavor the module-level
names are bound to. Both flavors must agree bit-for-bit: the edge-sum kernel
accumulates in edge order on both paths, BFS outputs are integral, and the
generator consumes the same splitmix64 stream.
"""
import numpy as np

from ._backend import NUMBA_ENABLED, jit
from ._rng import rng_below, rng_double


# ---------------------------------------------------------------------------
# weighted score pull: acc[dst[e]] += values[src[e]] * w[e]
# ---------------------------------------------------------------------------

def _weighted_pull_loop(src, dst, w, values, n):
    acc = np.zeros(n, dtype=np.float64)
    for e in range(src.shape[0]):
        acc[dst[e]] += values[src[e]] * w[e]
    return acc


def _weighted_pull_numpy(src, dst, w, values, n):
    acc = np.zeros(n, dtype=np.float64)
    # unbuffered add applies element by element in edge order, matching the loop
    np.add.at(acc, dst, values[src] * w)
    return acc


# ---------------------------------------------------------------------------
# BFS reachability over a CSR adjacency
# ---------------------------------------------------------------------------

def _bfs_visited_loop(indptr, indices, n, seeds):
    visited = np.zeros(n, dtype=np.bool_)
    queue = np.empty(n, dtype=np.int64)
    tail = 0
    for i in range(seeds.shape[0]):
        s = seeds[i]
        if not visited[s]:
            visited[s] = True
            queue[tail] = s
            tail += 1
    head = 0
    while head < tail:
        u = queue[head]
        head += 1
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if not visited[v]:
                visited[v] = True
                queue[tail] = v
                tail += 1
    return visited


def _bfs_visited_numpy(indptr, indices, n, seeds):
    visited = np.zeros(n, dtype=np.bool_)
    visited[seeds] = True
    frontier = np.unique(seeds)
    while frontier.size:
        if frontier.size == 1:
            u = frontier[0]
            nbrs = indices[indptr[u]:indptr[u + 1]]
        else:
            nbrs = np.concatenate([indices[indptr[u]:indptr[u + 1]] for u in frontier])
        if nbrs.size == 0:
            break
        fresh = nbrs[~visited[nbrs]]
        if fresh.size == 0:
            break
        visited[fresh] = True
        frontier = np.unique(fresh)
    return visited


# ---------------------------------------------------------------------------
# per-source reach counts (count of reachable nodes, source excluded)
# ---------------------------------------------------------------------------

def _reach_counts_loop(indptr, indices, n):
    counts = np.zeros(n, dtype=np.int64)
    stamp = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        stamp[s] = s
        queue[0] = s
        head = 0
        tail = 1
        c = 0
        while head < tail:
            u = queue[head]
            head += 1
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if stamp[v] != s:
                    stamp[v] = s
                    queue[tail] = v
                    tail += 1
                    c += 1
        counts[s] = c
    return counts


def _reach_counts_numpy(indptr, indices, n):
    counts = np.zeros(n, dtype=np.int64)
    seed = np.empty(1, dtype=np.int64)
    for s in range(n):
        seed[0] = s
        visited = _bfs_visited_numpy(indptr, indices, n, seed)
        counts[s] = int(visited.sum()) - 1
    return counts


# ---------------------------------------------------------------------------
# growth simulator
# ---------------------------------------------------------------------------

def _grow_impl(n_nodes, m, alpha, beta, seed, unit_weights):
    # Seed with a full directed clique on m+1 nodes, then attach each arriving
    # node to m distinct existing targets. Target choice per draw:
    #   r < alpha            preferential, P(t) ~ in_degree(t) + 1
    #   r < alpha + beta     copy a uniformly random entry of a uniformly
    #                        random existing node's reference list
    #   otherwise            uniform over existing nodes
    # Duplicate targets within one arriving node are re-drawn.
    n_seed = m + 1
    n_edges = n_seed * m + (n_nodes - n_seed) * m
    src = np.empty(n_edges, dtype=np.int64)
    dst = np.empty(n_edges, dtype=np.int64)
    w = np.ones(n_edges, dtype=np.float64)
    # pool holds one entry per existing node (the +1 smoothing) plus one entry
    # per edge target, so a uniform pool draw is the preferential distribution
    pool = np.empty(n_nodes + n_edges, dtype=np.int64)
    out_targets = np.empty(n_nodes * m, dtype=np.int64)
    state = np.empty(1, dtype=np.uint64)
    state[0] = seed

    e = 0
    p = 0
    for i in range(n_seed):
        k = 0
        for j in range(n_seed):
            if i != j:
                src[e] = i
                dst[e] = j
                if not unit_weights:
                    w[e] = rng_double(state)
                out_targets[i * m + k] = j
                pool[p] = j
                p += 1
                e += 1
                k += 1
        pool[p] = i
        p += 1

    chosen = np.empty(m, dtype=np.int64)
    for v in range(n_seed, n_nodes):
        n_chosen = 0
        while n_chosen < m:
            r = rng_double(state)
            if r < alpha:
                t = pool[rng_below(state, p)]
            elif r < alpha + beta:
                t = out_targets[rng_below(state, v * m)]
            else:
                t = rng_below(state, v)
            dup = False
            for q in range(n_chosen):
                if chosen[q] == t:
                    dup = True
                    break
            if dup:
                continue
            chosen[n_chosen] = t
            n_chosen += 1
        for q in range(m):
            t = chosen[q]
            src[e] = v
            dst[e] = t
            if not unit_weights:
                w[e] = rng_double(state)
            out_targets[v * m + q] = t
            pool[p] = t
            p += 1
            e += 1
        pool[p] = v
        p += 1
    return src, dst, w


# ---------------------------------------------------------------------------
# backend binding
# ---------------------------------------------------------------------------

if NUMBA_ENABLED:
    weighted_pull = jit(_weighted_pull_loop)
    bfs_visited = jit(_bfs_visited_loop)
    reach_counts = jit(_reach_counts_loop)
    grow = jit(_grow_impl)
else:
    weighted_pull = _weighted_pull_numpy
    bfs_visited = _bfs_visited_numpy
    reach_counts = _reach_counts_numpy

    def grow(n_nodes, m, alpha, beta, seed, unit_weights):
        # uint64 wraparound in plain Python triggers numpy overflow warnings
        with np.errstate(over="ignore"):
            return _grow_impl(n_nodes, m, alpha, beta, seed, unit_weights)


def csr_from_edges(src: np.ndarray, dst: np.ndarray, n: int):
    """Build a CSR successor structure (indptr, indices) from edge arrays.

    Within one source, successors keep edge input order; traversal code that
    needs id-sorted neighbors sorts on its own.
    """
    counts = np.bincount(src, minlength=n) if src.size else np.zeros(n, dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    order = np.argsort(src, kind="stable")
    indices = dst[order].astype(np.int64, copy=False)
    return indptr, indices
