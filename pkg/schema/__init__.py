from .errors import (
    BoundError,
    ChunkAlignmentError,
    ChunkError,
    FormulaError,
    FormulaSyntaxError,
    IntervalError,
    MissingPropositionError,
    MonitorError,
    NetworkError,
    NetworkStateError,
    OracleError,
    StreamClosedError,
    TraceDataError,
    UnsupportedInDenseError,
)
from .models import BenchResult, BenchSpec, CheckMismatch, CheckReport, RunConfig
from .settings import MonitorSettings

__all__ = [
    "BenchResult",
    "BenchSpec",
    "BoundError",
    "ChunkAlignmentError",
    "ChunkError",
    "CheckMismatch",
    "CheckReport",
    "FormulaError",
    "FormulaSyntaxError",
    "IntervalError",
    "MissingPropositionError",
    "MonitorError",
    "MonitorSettings",
    "NetworkError",
    "NetworkStateError",
    "OracleError",
    "RunConfig",
    "StreamClosedError",
    "TraceDataError",
    "UnsupportedInDenseError",
]
