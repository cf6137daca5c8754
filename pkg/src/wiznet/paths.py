"""Wizpath mining and influence-reach metrics.

Paths run in the influence view: a reference points from the newer word to
the word it builds on, so influence flows along reversed references, and a
wizpath traces how one wizword's influence reaches another. Only the
endpoints must be wizwords; interior nodes may be anything.

Two selection rules are provided:

* shortest: minimum edge count, ties broken by the lexicographically
  smallest node-id sequence.
* widest: maximum bottleneck, where the bottleneck is the minimum node
  score along the path (endpoints included); ties broken by fewer edges,
  then the lexicographic rule.

A query with equal endpoints looks for a cycle returning to the node; a
bare single-node "path" is never returned.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from ._kernels import bfs_visited, csr_from_edges
from .classify import Classification, ClassLabel
from .core import WordNet
from .errors import NotAWizwordError
from .scores import ScoreTable


@dataclass(frozen=True)
class WizPath:
    """A node sequence in influence direction with its bottleneck score."""

    nodes: tuple[str, ...]
    bottleneck: float
    length: int

    def as_dict(self) -> dict:
        return {"nodes": list(self.nodes), "length": self.length, "bottleneck": self.bottleneck}


def _influence_csr(net: WordNet) -> tuple[np.ndarray, np.ndarray]:
    return csr_from_edges(net.dst, net.src, net.n_nodes)


def _bfs_dists(indptr: np.ndarray, indices: np.ndarray, n: int, start: int,
               allowed: np.ndarray | None) -> np.ndarray:
    dist = np.full(n, -1, dtype=np.int64)
    if allowed is not None and not allowed[start]:
        return dist
    dist[start] = 0
    queue: deque[int] = deque((start,))
    while queue:
        u = queue.popleft()
        for v in indices[indptr[u]:indptr[u + 1]]:
            v = int(v)
            if dist[v] < 0 and (allowed is None or allowed[v]):
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _check_endpoints(net: WordNet, classification: Classification,
                     from_word: str, to_word: str) -> tuple[int, int]:
    a = net.index(from_word)
    b = net.index(to_word)
    labels = classification.labels
    for word in (from_word, to_word):
        if labels.get(word) is not ClassLabel.WIZWORD:
            raise NotAWizwordError(f"{word!r} is not a wizword")
    return a, b


def _lex_shortest(net: WordNet, a: int, b: int, allowed: np.ndarray | None) -> list[int] | None:
    """Lexicographically smallest minimum-length influence walk a -> b.

    Walks need at least one edge, so a == b asks for the shortest cycle
    through the node. dist_to is computed by following original reference
    direction (one original out-step equals one influence in-step).
    """
    n = net.n_nodes
    fwd_indptr, fwd_indices = net.out_csr  # original direction = toward b in influence view
    infl_indptr, infl_indices = _influence_csr(net)
    if allowed is not None and (not allowed[a] or not allowed[b]):
        return None
    dist_to = _bfs_dists(fwd_indptr, fwd_indices, n, b, allowed)

    def steps(u: int) -> list[int]:
        return [int(v) for v in infl_indices[infl_indptr[u]:infl_indptr[u + 1]]
                if (allowed is None or allowed[v])]

    if a == b:
        reachable = [dist_to[v] for v in steps(a) if dist_to[v] >= 0]
        if not reachable:
            return None
        total = int(min(reachable)) + 1
    else:
        if dist_to[a] < 0:
            return None
        total = int(dist_to[a])

    path = [a]
    current = a
    remaining = total
    while remaining > 0:
        options = [v for v in steps(current) if dist_to[v] == remaining - 1]
        current = min(options, key=lambda v: net.ids[v])
        path.append(current)
        remaining -= 1
    return path


def shortest_wizpath(
    net: WordNet,
    scores: ScoreTable,
    classification: Classification,
    from_word: str,
    to_word: str,
) -> WizPath | None:
    """Minimum-edge-count wizpath in the influence view, or None if unreachable."""
    a, b = _check_endpoints(net, classification, from_word, to_word)
    path = _lex_shortest(net, a, b, None)
    if path is None:
        return None
    return _as_wizpath(net, scores, path)


def widest_wizpath(
    net: WordNet,
    scores: ScoreTable,
    classification: Classification,
    from_word: str,
    to_word: str,
) -> WizPath | None:
    """Maximum-bottleneck (max-min node score) wizpath, or None if unreachable.

    The best bottleneck is found by binary search over the distinct node
    score values: reachability inside {score >= t} is monotone in t. The
    returned path is the shortest, lexicographically smallest one among
    those achieving the best bottleneck.
    """
    a, b = _check_endpoints(net, classification, from_word, to_word)
    values = scores.values
    cap = min(float(values[a]), float(values[b]))
    candidates = np.unique(values)
    candidates = candidates[candidates <= cap]
    infl_indptr, infl_indices = _influence_csr(net)

    def feasible(threshold: float) -> bool:
        allowed = values >= threshold
        if not (allowed[a] and allowed[b]):
            return False
        if a == b:
            seeds = np.array(
                [int(v) for v in infl_indices[infl_indptr[a]:infl_indptr[a + 1]] if allowed[v]],
                dtype=np.int64,
            )
            if seeds.size == 0:
                return False
            restricted_indptr, restricted_indices = _restrict_csr(
                infl_indptr, infl_indices, allowed
            )
            visited = bfs_visited(restricted_indptr, restricted_indices, net.n_nodes, seeds)
            return bool(visited[a])
        dist = _bfs_dists(infl_indptr, infl_indices, net.n_nodes, a, allowed)
        return dist[b] >= 0

    lo, hi = 0, candidates.size - 1
    best: float | None = None
    while lo <= hi:
        mid = (lo + hi) // 2
        if feasible(float(candidates[mid])):
            best = float(candidates[mid])
            lo = mid + 1
        else:
            hi = mid - 1
    if best is None:
        return None
    path = _lex_shortest(net, a, b, values >= best)
    assert path is not None
    return _as_wizpath(net, scores, path)


def _restrict_csr(indptr: np.ndarray, indices: np.ndarray, allowed: np.ndarray):
    """Drop edges whose target is outside the allowed mask (sources filtered by BFS seeds)."""
    n = indptr.size - 1
    keep = allowed[indices]
    # also cut edges leaving disallowed sources
    src_of = np.repeat(np.arange(n), np.diff(indptr))
    keep &= allowed[src_of]
    new_indices = indices[keep]
    counts = np.bincount(src_of[keep], minlength=n)
    new_indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=new_indptr[1:])
    return new_indptr, new_indices.astype(np.int64, copy=False)


def _as_wizpath(net: WordNet, scores: ScoreTable, path: list[int]) -> WizPath:
    names = tuple(net.ids[i] for i in path)
    bottleneck = float(min(scores.values[i] for i in path))
    return WizPath(nodes=names, bottleneck=bottleneck, length=len(path) - 1)


def wiznet_coverage(net: WordNet, classification: Classification) -> float:
    """Fraction of non-wizwords reachable in the influence view from a wizword.

    0.0 by convention when there are no wizwords or no non-wizwords.
    """
    wiz = classification.mask(net, ClassLabel.WIZWORD)
    n_other = int(np.sum(~wiz))
    seeds = np.flatnonzero(wiz).astype(np.int64)
    if seeds.size == 0 or n_other == 0:
        return 0.0
    indptr, indices = _influence_csr(net)
    visited = bfs_visited(indptr, indices, net.n_nodes, seeds)
    covered = int(np.sum(visited & ~wiz))
    return covered / n_other


def influence_reach(net: WordNet, word: str) -> int:
    """Count of distinct nodes reachable from word in the influence view, excluding itself."""
    at = net.index(word)
    indptr, indices = _influence_csr(net)
    visited = bfs_visited(indptr, indices, net.n_nodes, np.array([at], dtype=np.int64))
    return int(np.sum(visited)) - 1
