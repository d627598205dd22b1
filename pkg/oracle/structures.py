"""Input structures of the reference evaluators."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from intervals.chunk import Chunk
from intervals.period_set import PeriodSet, Span, Time, format_time, to_time
from logic.formula import Formula, bounds_of
from schema.errors import OracleError


@dataclass(frozen=True)
class DiscreteTrace:
    """Boolean columns indexed by step; step 1 is the first element."""

    columns: Mapping[str, Tuple[bool, ...]] = field(default_factory=dict)

    def __post_init__(self):
        columns = {name: tuple(bool(v) for v in values) for name, values in self.columns.items()}
        lengths = {len(values) for values in columns.values()}
        if len(lengths) > 1:
            raise OracleError(f"trace columns have different lengths: {sorted(lengths)}")
        object.__setattr__(self, "columns", columns)

    @classmethod
    def from_rows(cls, names: Sequence[str], rows: Iterable[Mapping[str, bool]]) -> "DiscreteTrace":
        rows = list(rows)
        return cls({name: tuple(row[name] for row in rows) for name in names})

    @property
    def length(self) -> int:
        for values in self.columns.values():
            return len(values)
        return 0

    def __len__(self) -> int:
        return self.length

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self.columns)

    def value(self, name: str, t: int) -> bool:
        if name not in self.columns:
            raise OracleError(f"trace has no column '{name}'")
        return self.columns[name][t - 1]

    def rows(self) -> Iterator[Dict[str, bool]]:
        for i in range(self.length):
            yield {name: values[i] for name, values in self.columns.items()}

    def prefix(self, length: int) -> "DiscreteTrace":
        return DiscreteTrace({name: values[:length] for name, values in self.columns.items()})


@dataclass(frozen=True)
class HomStructure:
    """Homogeneous valuation over a finite timeline.

    Each proposition is given by its maximal true periods; every sub-period
    of one of them satisfies the proposition.
    """

    span: Span
    valuations: Mapping[str, PeriodSet] = field(default_factory=dict)

    def __post_init__(self):
        begin, end = to_time(self.span[0]), to_time(self.span[1])
        if math.isinf(end) or not begin < end:
            raise OracleError(
                f"timeline ({format_time(begin)},{format_time(end)}) must be finite and nonempty"
            )
        object.__setattr__(self, "span", (begin, end))
        for name, periods in self.valuations.items():
            if not periods.within((begin, end)):
                raise OracleError(f"valuation of '{name}' {periods} leaves the timeline")

    @classmethod
    def from_chunks(cls, chunks: Sequence[Chunk]) -> "HomStructure":
        sets: Dict[str, PeriodSet] = {}
        for chunk in chunks:
            for name in chunk.names:
                sets[name] = sets.get(name, PeriodSet()).union(chunk.true_periods(name))
        return cls((chunks[0].begin, chunks[-1].end), sets)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self.valuations)

    def periods(self, name: str) -> PeriodSet:
        if name not in self.valuations:
            raise OracleError(f"structure has no valuation for '{name}'")
        return self.valuations[name]

    def to_chunk(self) -> Chunk:
        return Chunk.from_period_sets(self.span, self.valuations)

    def endpoints(self) -> List[Time]:
        points = list(self.span)
        for periods in self.valuations.values():
            points.extend(periods.boundaries())
        return points


def common_denominator(values: Iterable[Time]) -> int:
    """Least common denominator of the finite values."""
    denominator = 1
    for value in values:
        if isinstance(value, float) and math.isinf(value):
            continue
        denominator = math.lcm(denominator, Fraction(value).denominator)
    return denominator


def grid_denominator(f: Formula, h: HomStructure, *extra: Time) -> int:
    """Denominator of the coarsest grid holding every endpoint and bound of the instance."""
    values = h.endpoints() + list(extra)
    for bound in bounds_of(f):
        values.extend((bound.lower, bound.upper))
    return common_denominator(values)
