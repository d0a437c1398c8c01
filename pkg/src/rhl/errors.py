"""Exception hierarchy shared across the package."""

from __future__ import annotations


class RHLError(Exception):
    """Base class for every error raised by rhl."""


class NotAnEdge(RHLError, ValueError):
    pass


class OutOfRange(RHLError, IndexError):
    pass


class InvalidPermutation(RHLError, ValueError):
    pass


class BadParameters(RHLError, ValueError):
    pass


class TooLarge(RHLError, ValueError):
    pass


class ParseError(RHLError, ValueError):
    """Malformed coloring, pattern or certificate input.

    ``line`` is 1-based, or ``None`` when the problem is not tied to a line
    (for instance a missing edge discovered at end of file).
    """

    def __init__(self, reason: str, line: int | None = None):
        self.reason = reason
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{reason}")


class PreconditionFailed(RHLError):
    """A certifier or search was called outside its domain.

    ``witness`` carries the machine-checkable obstruction when there is one,
    e.g. the rainbow embedding that disqualifies the input.
    """

    def __init__(self, reason: str, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__(reason)


class TheoremViolation(RHLError):
    """The computation contradicts a structural or Ramsey-type statement.

    Never expected. The offending coloring travels with the exception so that
    it can be written out for triage.
    """

    def __init__(self, message: str, coloring=None, obstruction=None):
        self.coloring = coloring
        self.obstruction = obstruction
        super().__init__(message)


class HypothesisNotMet(RHLError):
    pass


class SearchInconclusive(RHLError):
    """A search ran out of budget; ``outcome`` holds the partial result."""

    def __init__(self, outcome):
        self.outcome = outcome
        super().__init__(f"search inconclusive after {outcome.nodes} nodes")
