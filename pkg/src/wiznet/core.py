"""Wordnet data model, ingestion, and degree statistics.

A wordnet is an immutable directed graph: nodes are words (pieces of data,
identified by opaque non-empty strings) and an edge source -> target means
the source word refers to the target word, carrying a weight in [0, 1]
(the score the referrer gives; unweighted inputs default to 1.0).

Invariants enforced at construction: no self-references, at most one edge
per (source, target) pair, weights within [0, 1], every edge endpoint is a
node. Node order is first-appearance order and is preserved in all outputs.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import IO, Iterable, Iterator

import numpy as np

from . import _kernels
from .errors import (
    DuplicateEdgeError,
    ParseError,
    SelfReferenceError,
    UnknownNodeError,
    WeightOutOfRangeError,
)

EDGE_CSV_HEADER = ("source", "target", "weight")
NODE_CSV_HEADER = ("id", "label")


@dataclass(frozen=True)
class Reference:
    """One directed reference: source refers to target with a weight in [0, 1]."""

    source: str
    target: str
    weight: float = 1.0


@dataclass(frozen=True, eq=False)
class WordNet:
    """Immutable directed weighted graph of words.

    Nodes are kept as a tuple of string ids; edges as parallel numpy arrays
    of node indices plus weights. Safe to share read-only across threads.
    """

    ids: tuple[str, ...]
    src: np.ndarray = field(repr=False)
    dst: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    labels: dict[str, str] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        for arr in (self.src, self.dst, self.weights):
            arr.setflags(write=False)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_references(
        cls,
        edges: Iterable[tuple | Reference],
        nodes: Iterable[str | tuple[str, str]] = (),
        merge_duplicates: str | None = None,
    ) -> "WordNet":
        """Build and validate a wordnet from edge tuples.

        edges: (source, target) or (source, target, weight) tuples, or
        Reference objects. nodes optionally pre-declares ids (possibly with a
        display label), which is how isolated nodes enter the net.
        merge_duplicates="max" keeps the maximum weight of repeated
        (source, target) pairs instead of raising DuplicateEdgeError.
        """
        if merge_duplicates not in (None, "max"):
            raise ValueError(f"unsupported merge_duplicates mode: {merge_duplicates!r}")
        index: dict[str, int] = {}
        ids: list[str] = []
        labels: dict[str, str] = {}

        def intern(word: str) -> int:
            if not isinstance(word, str) or word == "":
                raise ParseError(f"node id must be a non-empty string, got {word!r}")
            at = index.get(word)
            if at is None:
                at = len(ids)
                index[word] = at
                ids.append(word)
            return at

        for entry in nodes:
            if isinstance(entry, str):
                intern(entry)
            else:
                word, label = entry
                intern(word)
                if label:
                    labels[word] = label

        seen: dict[tuple[int, int], int] = {}
        srcs: list[int] = []
        dsts: list[int] = []
        ws: list[float] = []
        for edge in edges:
            if isinstance(edge, Reference):
                source, target, weight = edge.source, edge.target, edge.weight
            elif len(edge) == 2:
                source, target = edge
                weight = 1.0
            else:
                source, target, weight = edge
            if source == target:
                raise SelfReferenceError(f"self-reference on {source!r}")
            weight = float(weight)
            if not (0.0 <= weight <= 1.0):
                raise WeightOutOfRangeError(
                    f"weight {weight!r} on {source!r}->{target!r} is outside [0, 1]"
                )
            s = intern(source)
            t = intern(target)
            key = (s, t)
            pos = seen.get(key)
            if pos is not None:
                if merge_duplicates == "max":
                    ws[pos] = max(ws[pos], weight)
                    continue
                raise DuplicateEdgeError(f"duplicate reference {source!r}->{target!r}")
            seen[key] = len(srcs)
            srcs.append(s)
            dsts.append(t)
            ws.append(weight)

        return cls(
            ids=tuple(ids),
            src=np.asarray(srcs, dtype=np.int64),
            dst=np.asarray(dsts, dtype=np.int64),
            weights=np.asarray(ws, dtype=np.float64),
            labels=labels,
        )

    @classmethod
    def from_arrays(
        cls,
        ids: tuple[str, ...],
        src: np.ndarray,
        dst: np.ndarray,
        weights: np.ndarray,
        labels: dict[str, str] | None = None,
    ) -> "WordNet":
        """Build from index arrays, with vectorized validation."""
        n = len(ids)
        if len(set(ids)) != n or any(i == "" for i in ids):
            raise ParseError("node ids must be unique non-empty strings")
        src = np.asarray(src, dtype=np.int64)
        dst = np.asarray(dst, dtype=np.int64)
        weights = np.asarray(weights, dtype=np.float64)
        if src.size:
            if src.min() < 0 or dst.min() < 0 or src.max() >= n or dst.max() >= n:
                raise UnknownNodeError("edge endpoint index out of range")
            if (src == dst).any():
                bad = int(np.argmax(src == dst))
                raise SelfReferenceError(f"self-reference on {ids[int(src[bad])]!r}")
            keys = src * np.int64(n) + dst
            if np.unique(keys).size != keys.size:
                raise DuplicateEdgeError("duplicate (source, target) pair")
            if (weights < 0.0).any() or (weights > 1.0).any() or np.isnan(weights).any():
                raise WeightOutOfRangeError("edge weight outside [0, 1]")
        return cls(ids=ids, src=src, dst=dst, weights=weights, labels=dict(labels or {}))

    # -- basic accessors ----------------------------------------------------

    @property
    def n_nodes(self) -> int:
        return len(self.ids)

    @property
    def n_edges(self) -> int:
        return int(self.src.size)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {word: i for i, word in enumerate(self.ids)}

    def has_node(self, word: str) -> bool:
        return word in self._index

    def index(self, word: str) -> int:
        try:
            return self._index[word]
        except KeyError:
            raise UnknownNodeError(f"unknown node {word!r}") from None

    def references(self) -> Iterator[Reference]:
        for e in range(self.n_edges):
            yield Reference(
                self.ids[int(self.src[e])],
                self.ids[int(self.dst[e])],
                float(self.weights[e]),
            )

    # -- derived structure ---------------------------------------------------

    @cached_property
    def in_degrees(self) -> np.ndarray:
        counts = (
            np.bincount(self.dst, minlength=self.n_nodes)
            if self.n_edges
            else np.zeros(self.n_nodes, dtype=np.int64)
        )
        counts.setflags(write=False)
        return counts

    @property
    def max_ref(self) -> int:
        return int(self.in_degrees.max()) if self.n_nodes else 0

    @cached_property
    def out_csr(self) -> tuple[np.ndarray, np.ndarray]:
        return _kernels.csr_from_edges(self.src, self.dst, self.n_nodes)

    def __repr__(self) -> str:
        return f"WordNet(nodes={self.n_nodes}, edges={self.n_edges})"


@dataclass(frozen=True)
class DegreeSummary:
    """Per-node reference counts and their maximum (max_ref)."""

    ids: tuple[str, ...]
    counts: np.ndarray = field(repr=False)
    max_ref: int

    @cached_property
    def in_degree(self) -> dict[str, int]:
        return {word: int(c) for word, c in zip(self.ids, self.counts)}


def degree_summary(net: WordNet) -> DegreeSummary:
    """Count references received per word; max_ref is 0 for an edgeless net."""
    return DegreeSummary(ids=net.ids, counts=net.in_degrees, max_ref=net.max_ref)


def influence_view(net: WordNet) -> WordNet:
    """Reverse every edge so paths run the way influence propagates (old -> new).

    A reference points from the newer word to the word it builds on; the
    influence view flips that, which is the direction wizpaths are mined in.
    Applying the view twice restores the original edge set.
    """
    return WordNet(
        ids=net.ids,
        src=net.dst,
        dst=net.src,
        weights=net.weights,
        labels=net.labels,
    )


# ---------------------------------------------------------------------------
# ingestion
# ---------------------------------------------------------------------------

def load_wordnet(
    path: str,
    format: str | None = None,
    nodes_path: str | None = None,
    merge_duplicates: str | None = None,
) -> WordNet:
    """Load a wordnet from an edge CSV or a JSON graph file.

    format is "csv" or "json"; when omitted it is inferred from the file
    suffix (.json means json, anything else csv). nodes_path optionally adds
    a node CSV (header id,label) declaring isolated nodes and display labels.
    """
    if format is None:
        format = "json" if path.lower().endswith(".json") else "csv"
    if format == "csv":
        nodes: list[tuple[str, str]] = []
        if nodes_path is not None:
            with open(nodes_path, newline="", encoding="utf-8") as fh:
                nodes = _read_node_csv(fh, nodes_path)
        with open(path, newline="", encoding="utf-8") as fh:
            edges = _read_edge_csv(fh, path)
        return WordNet.from_references(edges, nodes=nodes, merge_duplicates=merge_duplicates)
    if format == "json":
        with open(path, encoding="utf-8") as fh:
            return load_json_graph(fh, merge_duplicates=merge_duplicates)
    raise ValueError(f"unsupported format: {format!r}")


def _read_edge_csv(fh: IO[str], name: str) -> list[tuple[str, str, float]]:
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError(f"{name}: empty file") from None
    cols = tuple(c.strip().lower() for c in header)
    if cols not in (EDGE_CSV_HEADER, EDGE_CSV_HEADER[:2]):
        raise ParseError(f"{name}: expected header source,target[,weight], got {header!r}")
    has_weight = len(cols) == 3
    edges: list[tuple[str, str, float]] = []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(cols):
            raise ParseError(f"{name}:{lineno}: expected {len(cols)} fields, got {len(row)}")
        source, target = row[0], row[1]
        raw = row[2].strip() if has_weight else ""
        if raw == "":
            weight = 1.0
        else:
            try:
                weight = float(raw)
            except ValueError:
                raise ParseError(f"{name}:{lineno}: bad weight {row[2]!r}") from None
        if source == "" or target == "":
            raise ParseError(f"{name}:{lineno}: empty node id")
        edges.append((source, target, weight))
    return edges


def _read_node_csv(fh: IO[str], name: str) -> list[tuple[str, str]]:
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError(f"{name}: empty file") from None
    cols = tuple(c.strip().lower() for c in header)
    if cols not in (NODE_CSV_HEADER, NODE_CSV_HEADER[:1]):
        raise ParseError(f"{name}: expected header id[,label], got {header!r}")
    nodes: list[tuple[str, str]] = []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(cols):
            raise ParseError(f"{name}:{lineno}: expected {len(cols)} fields, got {len(row)}")
        if row[0] == "":
            raise ParseError(f"{name}:{lineno}: empty node id")
        nodes.append((row[0], row[1] if len(row) > 1 else ""))
    return nodes


def load_json_graph(fh: IO[str], merge_duplicates: str | None = None) -> WordNet:
    """Parse the JSON graph format: {"nodes": [{"id", "label"?}], "edges": [...]}."""
    try:
        doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("JSON graph must be an object with 'nodes' and 'edges'")
    nodes: list[tuple[str, str]] = []
    for entry in doc.get("nodes", []):
        if not isinstance(entry, dict) or "id" not in entry:
            raise ParseError(f"bad node entry: {entry!r}")
        nodes.append((entry["id"], entry.get("label", "") or ""))
    edges: list[tuple[str, str, float]] = []
    for entry in doc.get("edges", []):
        if not isinstance(entry, dict) or "source" not in entry or "target" not in entry:
            raise ParseError(f"bad edge entry: {entry!r}")
        edges.append((entry["source"], entry["target"], float(entry.get("weight", 1.0))))
    return WordNet.from_references(edges, nodes=nodes, merge_duplicates=merge_duplicates)


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------

def write_edge_csv(net: WordNet, fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(EDGE_CSV_HEADER)
    for e in range(net.n_edges):
        writer.writerow(
            (
                net.ids[int(net.src[e])],
                net.ids[int(net.dst[e])],
                f"{float(net.weights[e]):.12g}",
            )
        )


def graph_as_dict(net: WordNet) -> dict:
    nodes = []
    for word in net.ids:
        entry: dict = {"id": word}
        label = net.labels.get(word)
        if label:
            entry["label"] = label
        nodes.append(entry)
    edges = [
        {
            "source": net.ids[int(net.src[e])],
            "target": net.ids[int(net.dst[e])],
            "weight": float(net.weights[e]),
        }
        for e in range(net.n_edges)
    ]
    return {"nodes": nodes, "edges": edges}


def write_json_graph(net: WordNet, fh: IO[str]) -> None:
    json.dump(graph_as_dict(net), fh, indent=2)
    fh.write("\n")
