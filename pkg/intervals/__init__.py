from intervals.int_set import IntIntervalSet, int_add, int_contains, int_prune
from intervals.period_set import (
    EMPTY,
    PeriodSet,
    format_time,
    period_complement,
    period_intersect,
    period_union,
    to_time,
)
from intervals.chunk import Chunk, Segment, merge_stutter, synchronize, synchronize_periods

__all__ = [
    "EMPTY",
    "Chunk",
    "IntIntervalSet",
    "PeriodSet",
    "Segment",
    "format_time",
    "int_add",
    "int_contains",
    "int_prune",
    "merge_stutter",
    "period_complement",
    "period_intersect",
    "period_union",
    "synchronize",
    "synchronize_periods",
    "to_time",
]
