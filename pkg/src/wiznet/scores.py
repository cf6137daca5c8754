"""Wizscore metrics.

Three scoring methods over a wordnet, all valued in [0, 1]:

* basic: references received divided by max_ref (the maximum reference
  count over all words). An edgeless net scores 0 everywhere.
* fair_onelevel: each referrer weighted by its own basic score and by the
  weight it put on the edge, normalized by max_ref — the literal one-level
  reading of the weighted-average score.
* fair_iterative: the recursive reading, where referrer scores are
  themselves fair. Solved as the unique fixed point of
      s = (1 - damping) * basic + damping * F(s),
  F(s)(x) = sum over referrers i of s(i) * weight(i->x) / max_ref,
  by damped Jacobi iteration started at the basic scores. The undamped
  recursion collapses to all zeros on acyclic nets (sources score 0 and
  induction propagates), so the iteration anchors to basic with
  damping < 1, which also guarantees contraction.

wizscore_percentage maps a score to the nearest integer percent, ties
rounding half away from zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from functools import cached_property
from typing import IO, Iterator

import numpy as np

from ._kernels import weighted_pull
from .core import WordNet
from .errors import DomainError, InvalidParamsError

METHOD_BASIC = "basic"
METHOD_FAIR_ONELEVEL = "fair_onelevel"
METHOD_FAIR_ITERATIVE = "fair_iterative"
METHODS = (METHOD_BASIC, METHOD_FAIR_ONELEVEL, METHOD_FAIR_ITERATIVE)


@dataclass(frozen=True, eq=False)
class ScoreTable:
    """Per-word scores in [0, 1] for one scoring method, aligned with net.ids."""

    ids: tuple[str, ...]
    values: np.ndarray = field(repr=False)
    method: str

    def __post_init__(self) -> None:
        self.values.setflags(write=False)

    def __getitem__(self, word: str) -> float:
        return self.scores[word]

    def __iter__(self) -> Iterator[str]:
        return iter(self.ids)

    def __len__(self) -> int:
        return len(self.ids)

    @cached_property
    def scores(self) -> dict[str, float]:
        return {word: float(v) for word, v in zip(self.ids, self.values)}

    def __repr__(self) -> str:
        return f"ScoreTable(method={self.method!r}, words={len(self.ids)})"


@dataclass(frozen=True)
class SolverConfig:
    """Damped fixed-point solver settings for the iterative fair score."""

    damping: float = 0.85
    tolerance: float = 1e-9
    max_iterations: int = 100

    def __post_init__(self) -> None:
        if not (0.0 <= self.damping < 1.0):
            raise InvalidParamsError(f"damping must be in [0, 1), got {self.damping}")
        if not self.tolerance > 0.0:
            raise InvalidParamsError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise InvalidParamsError("max_iterations must be at least 1")


@dataclass(frozen=True)
class SolverReport:
    """Outcome of the damped iteration; residuals holds the per-sweep history."""

    iterations_used: int
    final_residual: float
    converged: bool
    residuals: tuple[float, ...] = ()


def basic_wizscore(net: WordNet) -> ScoreTable:
    """references-received / max_ref per word; all zeros when there are no edges."""
    max_ref = net.max_ref
    if max_ref == 0:
        values = np.zeros(net.n_nodes, dtype=np.float64)
    else:
        values = net.in_degrees / np.float64(max_ref)
    return ScoreTable(ids=net.ids, values=values, method=METHOD_BASIC)


def fair_wizscore_onelevel(net: WordNet) -> ScoreTable:
    """Referrers weighted by their basic score and edge weight, over max_ref."""
    max_ref = net.max_ref
    if max_ref == 0:
        values = np.zeros(net.n_nodes, dtype=np.float64)
    else:
        basic = basic_wizscore(net).values
        acc = weighted_pull(net.src, net.dst, net.weights, basic, net.n_nodes)
        # guard against float-sum overshoot of the [0, 1] bound
        values = np.minimum(acc / np.float64(max_ref), 1.0)
    return ScoreTable(ids=net.ids, values=values, method=METHOD_FAIR_ONELEVEL)


def fair_wizscore_iterative(
    net: WordNet, config: SolverConfig | None = None
) -> tuple[ScoreTable, SolverReport]:
    """Damped Jacobi solve of the recursive fair score.

    Updates are simultaneous across nodes within a sweep, so the result does
    not depend on node enumeration order. Non-convergence within
    max_iterations is reported, not raised.
    """
    config = config or SolverConfig()
    max_ref = net.max_ref
    basic = basic_wizscore(net).values
    if max_ref == 0:
        table = ScoreTable(
            ids=net.ids,
            values=np.zeros(net.n_nodes, dtype=np.float64),
            method=METHOD_FAIR_ITERATIVE,
        )
        return table, SolverReport(1, 0.0, True, (0.0,))

    lam = np.float64(config.damping)
    anchor = (1.0 - lam) * basic
    norm = np.float64(max_ref)
    s = basic.copy()
    residuals: list[float] = []
    converged = False
    for _ in range(config.max_iterations):
        acc = weighted_pull(net.src, net.dst, net.weights, s, net.n_nodes)
        new = np.minimum(anchor + lam * (acc / norm), 1.0)
        residual = float(np.max(np.abs(new - s))) if new.size else 0.0
        residuals.append(residual)
        s = new
        if residual < config.tolerance:
            converged = True
            break
    table = ScoreTable(ids=net.ids, values=s, method=METHOD_FAIR_ITERATIVE)
    report = SolverReport(
        iterations_used=len(residuals),
        final_residual=residuals[-1],
        converged=converged,
        residuals=tuple(residuals),
    )
    return table, report


def wizscore_percentage(score: float) -> int:
    """Nearest integer percent of a score in [0, 1]; ties round away from zero.

    The tie rule is applied to the shortest decimal rendering of the float,
    so a value entered as 0.095 rounds to 10 rather than being lost to
    binary representation dust.
    """
    score = float(score)
    if np.isnan(score) or not (0.0 <= score <= 1.0):
        raise DomainError(f"score must be in [0, 1], got {score!r}")
    cents = Decimal(repr(score)) * 100
    return int(cents.quantize(Decimal("1"), rounding=ROUND_HALF_UP))


def compute_scores(net: WordNet, method: str, config: SolverConfig | None = None) -> ScoreTable:
    """Dispatch on method name; the iterative report is dropped here."""
    if method == METHOD_BASIC:
        return basic_wizscore(net)
    if method == METHOD_FAIR_ONELEVEL:
        return fair_wizscore_onelevel(net)
    if method == METHOD_FAIR_ITERATIVE:
        return fair_wizscore_iterative(net, config)[0]
    raise ValueError(f"unknown scoring method: {method!r}")


def write_score_csv(net: WordNet, selected: ScoreTable, out: IO[str]) -> None:
    """Emit id,in_degree,basic,fair,percentage rows.

    The fair column carries the selected method's score (it equals basic
    when the basic method was selected); percentage is derived from it.
    Rows sort by fair descending, then id ascending; reals print with 12
    significant digits.
    """
    basic = basic_wizscore(net).values
    indeg = net.in_degrees
    order = sorted(range(net.n_nodes), key=lambda i: (-selected.values[i], net.ids[i]))
    out.write("id,in_degree,basic,fair,percentage\n")
    for i in order:
        fair = float(selected.values[i])
        out.write(
            f"{_csv_cell(net.ids[i])},{int(indeg[i])},{float(basic[i]):.12g},"
            f"{fair:.12g},{wizscore_percentage(fair)}\n"
        )


def _csv_cell(value: str) -> str:
    if any(ch in value for ch in ',"\n\r'):
        return '"' + value.replace('"', '""') + '"'
    return value
