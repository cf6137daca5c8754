"""Three-way word classification and subnet extraction.

A word is a wizword when its score reaches the threshold tau. Among the
rest, a word is a buzzword when it is referenced often: its reference count
reaches the buzz_quantile nearest-rank quantile of the positive in-degree
distribution (and is itself positive). Everything else is plain. The
wizword condition takes precedence, so the three classes partition the net.

The wiznet (buzznet) is the subgraph induced on wizword (buzzword) nodes:
exactly the original edges with both endpoints in the class.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import IO

import numpy as np

from .core import WordNet
from .errors import InvalidParamsError, MissingScoreError
from .scores import ScoreTable


class ClassLabel(enum.Enum):
    WIZWORD = "wizword"
    BUZZWORD = "buzzword"
    PLAIN = "plain"


_CODE_OF = {ClassLabel.WIZWORD: 0, ClassLabel.BUZZWORD: 1, ClassLabel.PLAIN: 2}
_LABEL_OF = {code: label for label, code in _CODE_OF.items()}


@dataclass(frozen=True)
class ClassificationConfig:
    """Thresholds for the partition.

    tau: wizword score threshold in (0, 1].
    buzz_quantile: quantile of the positive in-degree distribution a
        non-wizword must reach to count as frequently referenced, in (0, 1).
    score_method: which score table fed the classification (recorded for
        auditability; None means "whatever table was passed in").
    """

    tau: float = 0.75
    buzz_quantile: float = 0.9
    score_method: str | None = None

    def __post_init__(self) -> None:
        if not (0.0 < self.tau <= 1.0):
            raise InvalidParamsError(f"tau must be in (0, 1], got {self.tau}")
        if not (0.0 < self.buzz_quantile < 1.0):
            raise InvalidParamsError(
                f"buzz_quantile must be in (0, 1), got {self.buzz_quantile}"
            )


@dataclass(frozen=True, eq=False)
class Classification:
    """A full partition of a net's words into the three classes."""

    ids: tuple[str, ...]
    codes: np.ndarray = field(repr=False)
    config_used: ClassificationConfig

    def __post_init__(self) -> None:
        self.codes.setflags(write=False)

    @classmethod
    def from_labels(
        cls, labels: dict[str, ClassLabel], config: ClassificationConfig | None = None
    ) -> "Classification":
        ids = tuple(labels)
        codes = np.fromiter((_CODE_OF[labels[w]] for w in ids), dtype=np.int8, count=len(ids))
        return cls(ids=ids, codes=codes, config_used=config or ClassificationConfig())

    @cached_property
    def labels(self) -> dict[str, ClassLabel]:
        return {word: _LABEL_OF[int(c)] for word, c in zip(self.ids, self.codes)}

    def label(self, word: str) -> ClassLabel:
        return self.labels[word]

    def members(self, label: ClassLabel) -> tuple[str, ...]:
        code = _CODE_OF[label]
        return tuple(w for w, c in zip(self.ids, self.codes) if c == code)

    def counts(self) -> dict[ClassLabel, int]:
        return {label: int(np.sum(self.codes == code)) for label, code in _CODE_OF.items()}

    def mask(self, net: WordNet, label: ClassLabel) -> np.ndarray:
        """Boolean membership array aligned with net.ids."""
        code = _CODE_OF[label]
        lab = self.labels
        return np.fromiter(
            (_CODE_OF[lab[w]] == code for w in net.ids), dtype=bool, count=net.n_nodes
        )

    def __repr__(self) -> str:
        c = self.counts()
        return (
            f"Classification(wizwords={c[ClassLabel.WIZWORD]}, "
            f"buzzwords={c[ClassLabel.BUZZWORD]}, plain={c[ClassLabel.PLAIN]})"
        )


def buzz_degree_threshold(net: WordNet, buzz_quantile: float) -> int | None:
    """Nearest-rank quantile of the positive in-degrees; None when all are zero."""
    positive = np.sort(net.in_degrees[net.in_degrees > 0])
    if positive.size == 0:
        return None
    rank = math.ceil(buzz_quantile * positive.size)
    return int(positive[max(rank, 1) - 1])


def classify_words(
    net: WordNet, scores: ScoreTable, config: ClassificationConfig | None = None
) -> Classification:
    """Partition every word of net into wizword / buzzword / plain."""
    config = config or ClassificationConfig()
    table = scores.scores
    missing = [w for w in net.ids if w not in table]
    if missing:
        raise MissingScoreError(f"no score for {missing[0]!r}")
    if config.score_method is None:
        config = ClassificationConfig(
            tau=config.tau, buzz_quantile=config.buzz_quantile, score_method=scores.method
        )
    threshold = buzz_degree_threshold(net, config.buzz_quantile)
    indeg = net.in_degrees
    codes = np.empty(net.n_nodes, dtype=np.int8)
    for i, word in enumerate(net.ids):
        if table[word] >= config.tau:
            codes[i] = _CODE_OF[ClassLabel.WIZWORD]
        elif threshold is not None and indeg[i] > 0 and indeg[i] >= threshold:
            codes[i] = _CODE_OF[ClassLabel.BUZZWORD]
        else:
            codes[i] = _CODE_OF[ClassLabel.PLAIN]
    return Classification(ids=net.ids, codes=codes, config_used=config)


def _extract(net: WordNet, classification: Classification, label: ClassLabel) -> WordNet:
    member = classification.mask(net, label)
    keep_ids = tuple(w for w, inside in zip(net.ids, member) if inside)
    remap = np.full(net.n_nodes, -1, dtype=np.int64)
    remap[member] = np.arange(len(keep_ids), dtype=np.int64)
    if net.n_edges:
        keep_edge = member[net.src] & member[net.dst]
        src = remap[net.src[keep_edge]]
        dst = remap[net.dst[keep_edge]]
        weights = net.weights[keep_edge].copy()
    else:
        src = np.zeros(0, dtype=np.int64)
        dst = np.zeros(0, dtype=np.int64)
        weights = np.zeros(0, dtype=np.float64)
    labels = {w: net.labels[w] for w in keep_ids if w in net.labels}
    return WordNet(ids=keep_ids, src=src, dst=dst, weights=weights, labels=labels)


def extract_wiznet(net: WordNet, classification: Classification) -> WordNet:
    """Induced subgraph on the wizword nodes."""
    return _extract(net, classification, ClassLabel.WIZWORD)


def extract_buzznet(net: WordNet, classification: Classification) -> WordNet:
    """Induced subgraph on the buzzword nodes."""
    return _extract(net, classification, ClassLabel.BUZZWORD)


def write_class_csv(
    net: WordNet, classification: Classification, scores: ScoreTable, out: IO[str]
) -> None:
    """Emit id,label,score,in_degree rows, sorted by score descending then id."""
    from .scores import _csv_cell

    indeg = net.in_degrees
    lab = classification.labels
    order = sorted(range(net.n_nodes), key=lambda i: (-scores.values[i], net.ids[i]))
    out.write("id,label,score,in_degree\n")
    for i in order:
        word = net.ids[i]
        out.write(
            f"{_csv_cell(word)},{lab[word].value},{float(scores.values[i]):.12g},{int(indeg[i])}\n"
        )
