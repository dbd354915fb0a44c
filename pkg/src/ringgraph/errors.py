"""Error taxonomy shared across the package.

Three families matter to callers: structural misuse (wrong ring, wrong
shape), refused preconditions (the input is legal but outside the
certified reach of an operation), and undecided components (a prime
decomposition leaf the splitting strategy cannot certify).
"""

from __future__ import annotations


class RingGraphError(Exception):
    """Base class for every error raised by this package."""


class StructuralError(RingGraphError):
    """Mismatched ambient rings, malformed generators, bad arguments."""


class PreconditionError(RingGraphError):
    """A documented precondition failed; the operation refuses to guess.

    CLI maps this to exit code 2.
    """


class ZerodivisorError(PreconditionError):
    """Denominator is zero or a zerodivisor in the quotient ring."""


class UndecidedComponentError(PreconditionError):
    """Prime splitting reached a leaf it cannot certify.

    Carries the offending leaf ideal so the caller can inspect it or
    supply an asserted decomposition instead.
    """

    def __init__(self, message: str, leaf=None):
        super().__init__(message)
        self.leaf = leaf


class SessionSyntaxError(RingGraphError):
    """Session text failed to parse; carries a 1-based location."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.bare_message = message
