"""Wizword-generation likelihood estimates.

Both estimates are smoothed reciprocals 1 / (count + 2), so an empty count
gives 1/2 and the value strictly decreases as the count grows:

* global: count is the number of wizwords already present in the net.
* local (relative to a word x): count is the number of wizwords that
  reference x, i.e. wizwords generated based on x. Referencing is the
  model's only notion of "based on"; transitive descendants are not chased.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classify import Classification, ClassLabel
from .core import WordNet

KIND_GLOBAL = "global"
KIND_LOCAL = "local"


@dataclass(frozen=True)
class LikelihoodReport:
    kind: str
    count: int
    likelihood: float

    def as_dict(self) -> dict:
        return {"kind": self.kind, "count": self.count, "likelihood": self.likelihood}


def global_wizword_likelihood(classification: Classification) -> LikelihoodReport:
    """1 / (number of wizwords + 2)."""
    n = classification.counts()[ClassLabel.WIZWORD]
    return LikelihoodReport(kind=KIND_GLOBAL, count=n, likelihood=1.0 / (n + 2))


def local_wizword_likelihood(
    net: WordNet, classification: Classification, word: str
) -> LikelihoodReport:
    """1 / (number of wizword referrers of word + 2)."""
    at = net.index(word)
    wiz = classification.mask(net, ClassLabel.WIZWORD)
    if net.n_edges:
        m = int(np.sum(wiz[net.src] & (net.dst == at)))
    else:
        m = 0
    return LikelihoodReport(kind=KIND_LOCAL, count=m, likelihood=1.0 / (m + 2))
