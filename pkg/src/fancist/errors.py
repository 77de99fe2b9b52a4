"""Exception types raised across the package."""

from __future__ import annotations


class CistError(Exception):
    """Base class for every error raised by this package."""


class ParseError(CistError, ValueError):
    SYNTAX = "Syntax"
    SELF_LOOP = "SelfLoop"
    DUPLICATE_EDGE = "DuplicateEdge"

    def __init__(self, kind: str, message: str, line: int | None = None):
        self.kind = kind
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{kind}: {where}{message}")


class InvalidVertex(CistError, IndexError):
    pass


class InvalidInput(CistError, ValueError):
    pass


class InvalidPartition(CistError, ValueError):
    pass


class NotACistPartition(CistError, ValueError):
    pass


class NotASpanningTree(CistError, ValueError):
    pass


class NotApplicable(CistError, ValueError):
    pass


class PreconditionFailed(CistError):
    """The input graph does not satisfy the hypothesis of the construction.

    ``conjunct`` is one of ``"connected"``, ``"n >= 7"`` or ``"mu2 >= n"``.
    """

    def __init__(self, conjunct: str, message: str = ""):
        self.conjunct = conjunct
        super().__init__(message or conjunct)


class InternalInvariantViolation(CistError, AssertionError):
    """A fact that the proof guarantees did not hold. Always a bug."""


class TooLarge(CistError, ValueError):
    pass


class GenerationFailed(CistError, RuntimeError):
    pass


class FixtureUnavailable(CistError, LookupError):
    """No known graph drives the constructor into the requested branch."""
