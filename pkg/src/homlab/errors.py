"""Exception hierarchy shared across the package.

Everything raised on purpose derives from HomlabError so callers can
catch the package's failures with a single except clause while letting
genuine bugs (TypeError, KeyError, ...) propagate.
"""

from __future__ import annotations


class HomlabError(Exception):
    """Base class for every deliberate failure in this package."""


class InvalidParameterError(HomlabError, ValueError):
    """An argument is outside the documented domain (bad sizes, parity, range)."""


class PreconditionError(HomlabError):
    """Input is well formed but violates a structural precondition.

    Raised when an operation needs, say, a connected non-bipartite graph
    and the caller handed it something else.
    """


class BudgetExceededError(HomlabError):
    """A search ran out of time or nodes before reaching a definitive answer.

    Distinct from a negative result on purpose: absence of a witness is a
    theorem, running out of budget is not.
    """

    def __init__(self, message: str, *, elapsed_secs: float | None = None,
                 nodes: int | None = None) -> None:
        super().__init__(message)
        self.elapsed_secs = elapsed_secs
        self.nodes = nodes


class IndeterminateComparisonError(BudgetExceededError):
    """A two-sided comparison could not settle one of its directions in budget."""


class ConstructionRejectedError(HomlabError):
    """A built object failed its own mandatory verification checks."""


class StreamExhaustedError(HomlabError):
    """Every candidate in a search stream was tried and rejected."""


class GapError(HomlabError):
    """The requested interval is a gap: nothing lies strictly between its endpoints."""
