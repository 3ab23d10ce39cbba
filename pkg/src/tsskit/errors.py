"""Exception hierarchy shared by every tsskit module."""

from __future__ import annotations


class TSSError(Exception):
    """Base class for all tsskit errors."""


class GraphInputError(TSSError, ValueError):
    """Malformed graph data: self-loop, bad id, duplicate edge, missing threshold."""


class DisconnectedGraphError(TSSError, ValueError):
    """Raised when an operation that needs a connected graph receives more than one component."""

    def __init__(self, first: int, second: int):
        self.representatives = (first, second)
        super().__init__(
            f"graph is disconnected: vertices {first} and {second} lie in different components"
        )


class WrongClassError(TSSError):
    """The network is outside the graph class a solver handles."""


class WrongThresholdsError(TSSError):
    """A threshold exceeds what the chosen solver supports."""


class NoSolutionWithinCap(TSSError):
    """No target set of size at most ``cap`` exists."""


class OracleLimitExceeded(TSSError):
    """The brute-force oracle refuses networks above its vertex limit."""


class TooLargeError(TSSError):
    """Explicit materialization of a Hamming graph would exceed the configured limit."""


class ParseError(TSSError):
    """Malformed instance file; ``line`` is 1-based (0 when not tied to a line)."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        where = f"line {line}: " if line else ""
        super().__init__(f"{where}{reason}")
