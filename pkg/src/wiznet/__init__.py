"""wiznet: reference-network quality scoring and analysis.

Model a corpus of words (pieces of data) as a directed reference network,
score each word's quality, classify wizwords and buzzwords, extract the
wiznet/buzznet subgraphs, estimate wizword-generation likelihoods, mine
wizpaths, and test Pareto/power-law structure on real or synthetically
grown networks.
"""
from ._backend import backend_name
from .classify import (
    Classification,
    ClassificationConfig,
    ClassLabel,
    classify_words,
    extract_buzznet,
    extract_wiznet,
)
from .core import (
    DegreeSummary,
    Reference,
    WordNet,
    degree_summary,
    influence_view,
    load_wordnet,
)
from .errors import (
    DegenerateClassesError,
    DomainError,
    DuplicateEdgeError,
    EmptyNetError,
    InsufficientDataError,
    InvalidParamsError,
    MissingScoreError,
    NotAWizwordError,
    ParseError,
    SelfReferenceError,
    UnknownNodeError,
    WeightOutOfRangeError,
    WizNetError,
)
from .generate import GrowthParams, generate_wordnet
from .hypotheses import (
    ParetoReport,
    PowerLawFit,
    ReachComparison,
    fit_power_law,
    gini_coefficient,
    pareto_share,
    reach_comparison,
)
from .likelihood import LikelihoodReport, global_wizword_likelihood, local_wizword_likelihood
from .paths import (
    WizPath,
    influence_reach,
    shortest_wizpath,
    widest_wizpath,
    wiznet_coverage,
)
from .report import build_report
from .scores import (
    ScoreTable,
    SolverConfig,
    SolverReport,
    basic_wizscore,
    compute_scores,
    fair_wizscore_iterative,
    fair_wizscore_onelevel,
    wizscore_percentage,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    "WordNet",
    "Reference",
    "DegreeSummary",
    "degree_summary",
    "influence_view",
    "load_wordnet",
    "ScoreTable",
    "SolverConfig",
    "SolverReport",
    "basic_wizscore",
    "fair_wizscore_onelevel",
    "fair_wizscore_iterative",
    "compute_scores",
    "wizscore_percentage",
    "ClassLabel",
    "ClassificationConfig",
    "Classification",
    "classify_words",
    "extract_wiznet",
    "extract_buzznet",
    "LikelihoodReport",
    "global_wizword_likelihood",
    "local_wizword_likelihood",
    "WizPath",
    "shortest_wizpath",
    "widest_wizpath",
    "wiznet_coverage",
    "influence_reach",
    "ParetoReport",
    "PowerLawFit",
    "ReachComparison",
    "pareto_share",
    "fit_power_law",
    "reach_comparison",
    "gini_coefficient",
    "GrowthParams",
    "generate_wordnet",
    "build_report",
    "WizNetError",
    "ParseError",
    "SelfReferenceError",
    "DuplicateEdgeError",
    "WeightOutOfRangeError",
    "UnknownNodeError",
    "DomainError",
    "MissingScoreError",
    "NotAWizwordError",
    "EmptyNetError",
    "InsufficientDataError",
    "DegenerateClassesError",
    "InvalidParamsError",
]
