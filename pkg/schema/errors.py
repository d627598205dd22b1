"""Exception hierarchy shared by every package of the monitor."""

from typing import Optional


class MonitorError(Exception):
    """Base class for all errors raised by the monitor library."""


class FormulaError(MonitorError):
    """A formula could not be parsed, validated or compiled."""


class FormulaSyntaxError(FormulaError):
    """Concrete syntax error with the offending position and the expected token."""

    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(f"syntax error at position {position}: {expected}")


class BoundError(FormulaError):
    """Invalid time bound (lower > upper, or a fractional bound in discrete time)."""


class UnsupportedInDenseError(FormulaError):
    """Operator that has no dense-time counterpart (the previously operator)."""


class IntervalError(MonitorError):
    """Malformed interval or period, or a period outside its span."""


class ChunkError(IntervalError):
    """Segments do not tile a span, or two chunks cover different spans."""


class NetworkError(MonitorError):
    """Misuse of a compiled network."""


class MissingPropositionError(NetworkError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no value given for proposition '{name}'")


class ChunkAlignmentError(NetworkError):
    """A chunk does not start where the previous one ended."""


class StreamClosedError(NetworkError):
    """Input arrived after finish(), or finish() was called twice."""


class NetworkStateError(NetworkError):
    """Configuration change attempted after evaluation started."""


class OracleError(MonitorError):
    """Invalid arguments for a reference evaluator."""


class TraceDataError(MonitorError):
    """Malformed trace input. ``row`` is the 1-based data row, if known."""

    def __init__(self, message: str, row: Optional[int] = None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
