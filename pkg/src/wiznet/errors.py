"""Exception hierarchy.

Everything raised for bad input data or bad parameters derives from
WizNetError so the CLI can map any of it to a single data-error exit code.
"""


class WizNetError(Exception):
    """Base class for all wiznet data and parameter errors."""


class ParseError(WizNetError):
    """Input file is malformed (bad CSV row, bad JSON shape, empty id)."""


class SelfReferenceError(WizNetError):
    """An edge has source == target."""


class DuplicateEdgeError(WizNetError):
    """The same (source, target) pair appears more than once."""


class WeightOutOfRangeError(WizNetError):
    """An edge weight is outside [0, 1]."""


class UnknownNodeError(WizNetError):
    """A referenced node id is not part of the wordnet."""


class DomainError(WizNetError):
    """A numeric argument is outside its documented domain."""


class MissingScoreError(WizNetError):
    """A score table does not cover every node of the wordnet."""


class NotAWizwordError(WizNetError):
    """A path endpoint is not labeled as a wizword."""


class EmptyNetError(WizNetError):
    """The operation needs at least one edge."""


class InsufficientDataError(WizNetError):
    """Too few samples for a meaningful tail fit."""


class DegenerateClassesError(WizNetError):
    """A comparison needs both wizwords and non-wizwords to be present."""


class InvalidParamsError(WizNetError):
    """A parameter object violates its invariants."""
