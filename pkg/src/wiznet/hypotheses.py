"""Statistical diagnostics of the reference-count distribution.

These operate on in-degrees (reference counts): the basic score is a
monotone rescaling of in-degree, so tail behavior is identical and integer
samples suit the discrete tail machinery.

* pareto_share: how much of the total reference mass the top fraction of
  words holds, plus the Gini coefficient of the in-degree distribution.
* fit_power_law: maximum-likelihood tail exponent under the continuous
  approximation for discrete data,
      alpha_hat = 1 + n_tail / sum(ln(x_i / (xmin - 1/2))),
  with xmin scanned over the distinct sample values (the largest value is
  excluded so a tail always holds at least two distinct values) and chosen
  to minimize the Kolmogorov-Smirnov distance between the empirical tail
  and the fitted tail. Ties go to the smaller xmin. No goodness-of-fit
  p-value is computed; the KS distance is reported as-is.
* reach_comparison: mean influence reach of wizwords versus the rest.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import csr_from_edges, reach_counts
from .classify import Classification, ClassLabel
from .core import WordNet
from .errors import DegenerateClassesError, DomainError, EmptyNetError, InsufficientDataError

MIN_TAIL_SAMPLES = 10


@dataclass(frozen=True)
class ParetoReport:
    top_fraction: float
    share: float
    gini: float

    def as_dict(self) -> dict:
        return {"top_fraction": self.top_fraction, "share": self.share, "gini": self.gini}


@dataclass(frozen=True)
class PowerLawFit:
    alpha_hat: float
    xmin: int
    ks_distance: float
    n_tail: int

    def as_dict(self) -> dict:
        return {
            "alpha_hat": self.alpha_hat,
            "xmin": self.xmin,
            "ks_distance": self.ks_distance,
            "n_tail": self.n_tail,
        }


@dataclass(frozen=True)
class ReachComparison:
    wizword_mean: float
    non_wizword_mean: float

    def as_dict(self) -> dict:
        return {
            "wizword_mean_reach": self.wizword_mean,
            "non_wizword_mean_reach": self.non_wizword_mean,
        }


def gini_coefficient(values: np.ndarray) -> float:
    """Gini inequality of a non-negative distribution; 0 for uniform, 0 if empty."""
    arr = np.sort(np.asarray(values, dtype=np.float64))
    n = arr.size
    total = arr.sum()
    if n == 0 or total == 0.0:
        return 0.0
    ranks = np.arange(1, n + 1, dtype=np.float64)
    return float(2.0 * np.sum(ranks * arr) / (n * total) - (n + 1.0) / n)


def pareto_share(net: WordNet, top_fraction: float = 0.2) -> ParetoReport:
    """Reference share of the top ceil(top_fraction * nodes) words by in-degree.

    Ranking ties break by id ascending (the share itself is unaffected, the
    rule just pins the reported ranking). Raises EmptyNetError for an
    edgeless net and DomainError for a fraction outside (0, 1).
    """
    if not (0.0 < top_fraction < 1.0):
        raise DomainError(f"top_fraction must be in (0, 1), got {top_fraction}")
    if net.n_edges == 0:
        raise EmptyNetError("pareto share needs at least one edge")
    indeg = net.in_degrees
    order = sorted(range(net.n_nodes), key=lambda i: (-indeg[i], net.ids[i]))
    k = int(np.ceil(top_fraction * net.n_nodes))
    top_sum = int(sum(int(indeg[i]) for i in order[:k]))
    return ParetoReport(
        top_fraction=top_fraction,
        share=top_sum / net.n_edges,
        gini=gini_coefficient(indeg),
    )


def fit_power_law(samples) -> PowerLawFit:
    """Fit a power-law tail to positive integer samples; see module docstring.

    Raises InsufficientDataError when no candidate xmin leaves a tail of at
    least MIN_TAIL_SAMPLES samples with two distinct values.
    """
    arr = np.asarray(samples)
    if arr.size == 0:
        raise InsufficientDataError("no samples")
    if not np.issubdtype(arr.dtype, np.integer):
        rounded = np.rint(arr)
        if not np.all(arr == rounded):
            raise DomainError("samples must be positive integers")
        arr = rounded
    arr = arr.astype(np.int64)
    if arr.min() <= 0:
        raise DomainError("samples must be positive integers")

    x = np.sort(arr)
    n = x.size
    logx = np.log(x.astype(np.float64))
    candidates = np.unique(x)[:-1]
    best: PowerLawFit | None = None
    for xmin in candidates:
        lo = int(np.searchsorted(x, xmin, side="left"))
        n_tail = n - lo
        if n_tail < MIN_TAIL_SAMPLES:
            continue
        shift = float(xmin) - 0.5
        alpha = 1.0 + n_tail / float(np.sum(logx[lo:]) - n_tail * np.log(shift))
        tail_vals, tail_counts = np.unique(x[lo:], return_counts=True)
        emp_ge = np.cumsum(tail_counts[::-1])[::-1] / n_tail
        emp_gt = emp_ge - tail_counts / n_tail
        fit_ge = ((tail_vals - 0.5) / shift) ** (1.0 - alpha)
        fit_gt = ((tail_vals + 0.5) / shift) ** (1.0 - alpha)
        ks = float(
            max(np.max(np.abs(emp_ge - fit_ge)), np.max(np.abs(emp_gt - fit_gt)))
        )
        if best is None or ks < best.ks_distance:
            best = PowerLawFit(
                alpha_hat=float(alpha), xmin=int(xmin), ks_distance=ks, n_tail=int(n_tail)
            )
    if best is None:
        raise InsufficientDataError(
            f"no candidate xmin keeps a tail of {MIN_TAIL_SAMPLES}+ samples"
        )
    return best


def all_influence_reach(net: WordNet) -> np.ndarray:
    """Influence reach (reachable nodes, self excluded) for every word."""
    indptr, indices = csr_from_edges(net.dst, net.src, net.n_nodes)
    return reach_counts(indptr, indices, net.n_nodes)


def reach_comparison(net: WordNet, classification: Classification) -> ReachComparison:
    """Mean influence reach of wizwords versus all other words."""
    wiz = classification.mask(net, ClassLabel.WIZWORD)
    n_wiz = int(np.sum(wiz))
    if n_wiz == 0 or n_wiz == net.n_nodes:
        raise DegenerateClassesError("need at least one wizword and one non-wizword")
    counts = all_influence_reach(net)
    return ReachComparison(
        wizword_mean=float(counts[wiz].mean()),
        non_wizword_mean=float(counts[~wiz].mean()),
    )


def degree_histogram(net: WordNet) -> list[tuple[int, int]]:
    """(in-degree value, word count) pairs, ascending by value."""
    values, counts = np.unique(net.in_degrees, return_counts=True)
    return [(int(v), int(c)) for v, c in zip(values, counts)]
