"""Exception hierarchy shared across the package.

Every error deliberately raised by labelkit derives from LabelkitError so the
CLI can map domain failures to exit code 1 while genuine bugs still surface
as ordinary tracebacks.
"""

from __future__ import annotations


class LabelkitError(Exception):
    """Base class for all errors raised on purpose by this package."""


class SizeGuardError(LabelkitError):
    """An operation was asked to exceed its configured size guard."""


class DomainError(LabelkitError):
    """A precondition on an operation's inputs does not hold."""


class GraphParseError(DomainError):
    """An edge-list document is malformed; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class MalformedLineError(GraphParseError):
    pass


class EndpointRangeError(GraphParseError):
    pass


class LoopEdgeError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass
