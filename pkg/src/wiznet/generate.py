"""Synthetic wordnet growth simulator.

Growth starts from a full directed clique on m+1 seed words, then each
arriving word adds m distinct references to existing words. Per reference
draw, with probability alpha the target is chosen proportionally to its
current reference count plus one (rich-get-richer; the +1 smoothing keeps
unreferenced words reachable), with probability beta the target is copied
from a uniformly random entry of a uniformly random existing word's
reference list (words following an established flow), and otherwise the
target is uniform over existing words. Draws landing on an already-chosen
target are repeated.

Given the same parameters and seed, the emitted edge list is byte-identical
across runs and across the numba/numpy backends (stream: splitmix64).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import grow
from ._rng import RNG_ALGORITHM
from .core import WordNet
from .errors import InvalidParamsError

WEIGHT_UNIT = "unit"
WEIGHT_UNIFORM = "uniform_random"
WEIGHT_MODES = (WEIGHT_UNIT, WEIGHT_UNIFORM)


@dataclass(frozen=True)
class GrowthParams:
    n_nodes: int
    m_edges_per_node: int
    alpha: float = 0.0
    beta: float = 0.0
    seed: int = 0
    weight_mode: str = WEIGHT_UNIT

    def __post_init__(self) -> None:
        if self.n_nodes < 2:
            raise InvalidParamsError("n_nodes must be at least 2")
        if self.m_edges_per_node < 1:
            raise InvalidParamsError("m_edges_per_node must be at least 1")
        if self.m_edges_per_node >= self.n_nodes:
            raise InvalidParamsError("m_edges_per_node must be smaller than n_nodes")
        if not (0.0 <= self.alpha <= 1.0) or not (0.0 <= self.beta <= 1.0):
            raise InvalidParamsError("alpha and beta must lie in [0, 1]")
        if self.alpha + self.beta > 1.0:
            raise InvalidParamsError("alpha + beta must not exceed 1")
        if not (0 <= self.seed < 2**64):
            raise InvalidParamsError("seed must be an unsigned 64-bit integer")
        if self.weight_mode not in WEIGHT_MODES:
            raise InvalidParamsError(f"weight_mode must be one of {WEIGHT_MODES}")

    def as_dict(self) -> dict:
        return {
            "n_nodes": self.n_nodes,
            "m_edges_per_node": self.m_edges_per_node,
            "alpha": self.alpha,
            "beta": self.beta,
            "seed": self.seed,
            "weight_mode": self.weight_mode,
        }


def generate_wordnet(params: GrowthParams) -> WordNet:
    """Run the growth process; node ids are decimal strings "0".."n-1"."""
    src, dst, weights = grow(
        params.n_nodes,
        params.m_edges_per_node,
        float(params.alpha),
        float(params.beta),
        np.uint64(params.seed),
        params.weight_mode == WEIGHT_UNIT,
    )
    ids = tuple(str(i) for i in range(params.n_nodes))
    return WordNet.from_arrays(ids=ids, src=src, dst=dst, weights=weights)


def generation_metadata(params: GrowthParams) -> dict:
    """Sidecar metadata recorded next to generated edge lists."""
    from . import __version__

    return {
        "generator": "wiznet",
        "version": __version__,
        "rng": RNG_ALGORITHM,
        "params": params.as_dict(),
    }
