"""Full analysis report assembly.

The report is a plain dict (serialized to JSON by the CLI) that carries the
net summary, per-method score summaries, classification counts, the global
wizword likelihood, and the distribution diagnostics. Every number is
accompanied by the configuration that produced it, and nothing
non-deterministic (timestamps, hostnames) is included, so re-running on the
same input yields byte-identical output.
"""
from __future__ import annotations

import numpy as np

from .classify import ClassificationConfig, ClassLabel, classify_words
from .core import WordNet
from .errors import WizNetError
from .hypotheses import fit_power_law, pareto_share, reach_comparison
from .likelihood import global_wizword_likelihood
from .paths import wiznet_coverage
from .scores import (
    SolverConfig,
    basic_wizscore,
    compute_scores,
    fair_wizscore_iterative,
    fair_wizscore_onelevel,
)


def _summary(values: np.ndarray) -> dict:
    if values.size == 0:
        return {"min": 0.0, "max": 0.0, "mean": 0.0}
    return {
        "min": float(values.min()),
        "max": float(values.max()),
        "mean": float(values.mean()),
    }


def build_report(
    net: WordNet,
    method: str,
    solver_config: SolverConfig | None = None,
    class_config: ClassificationConfig | None = None,
    top_fraction: float = 0.2,
) -> dict:
    from . import __version__

    solver_config = solver_config or SolverConfig()
    class_config = class_config or ClassificationConfig()

    basic = basic_wizscore(net)
    onelevel = fair_wizscore_onelevel(net)
    iterative, solver_report = fair_wizscore_iterative(net, solver_config)
    selected = {
        "basic": basic,
        "fair_onelevel": onelevel,
        "fair_iterative": iterative,
    }[method]

    classification = classify_words(net, selected, class_config)
    counts = classification.counts()
    likelihood = global_wizword_likelihood(classification)

    hypotheses: dict = {}
    try:
        hypotheses["pareto"] = pareto_share(net, top_fraction).as_dict()
    except WizNetError as exc:
        hypotheses["pareto"] = {"error": str(exc)}
    try:
        positive = net.in_degrees[net.in_degrees > 0]
        hypotheses["power_law"] = fit_power_law(positive).as_dict()
    except WizNetError as exc:
        hypotheses["power_law"] = {"error": str(exc)}
    hypotheses["coverage"] = wiznet_coverage(net, classification)
    try:
        hypotheses["reach"] = reach_comparison(net, classification).as_dict()
    except WizNetError as exc:
        hypotheses["reach"] = {"error": str(exc)}

    return {
        "tool": {"name": "wiznet", "version": __version__},
        "config": {
            "method": method,
            "tau": class_config.tau,
            "buzz_quantile": class_config.buzz_quantile,
            "damping": solver_config.damping,
            "tolerance": solver_config.tolerance,
            "max_iterations": solver_config.max_iterations,
            "top_fraction": top_fraction,
        },
        "net": {
            "nodes": net.n_nodes,
            "edges": net.n_edges,
            "max_ref": net.max_ref,
        },
        "scores": {
            "basic": _summary(basic.values),
            "fair_onelevel": _summary(onelevel.values),
            "fair_iterative": {
                **_summary(iterative.values),
                "solver": {
                    "iterations_used": solver_report.iterations_used,
                    "final_residual": solver_report.final_residual,
                    "converged": solver_report.converged,
                },
            },
        },
        "classification": {
            "wizwords": counts[ClassLabel.WIZWORD],
            "buzzwords": counts[ClassLabel.BUZZWORD],
            "plain": counts[ClassLabel.PLAIN],
        },
        "likelihood": {"global": likelihood.as_dict()},
        "hypotheses": hypotheses,
    }
