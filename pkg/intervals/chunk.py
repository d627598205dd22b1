"""
Finite fragments of point-free behaviors.

A chunk tiles its span with segments; every segment carries one Boolean per
named signal. Values are only defined on the open segments, never on the
boundaries between them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Mapping, Sequence, Tuple

from intervals.period_set import PeriodSet, Span, Time, format_time, to_time
from schema.errors import ChunkError


@dataclass(frozen=True)
class Segment:
    begin: Time
    end: Time
    values: Tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "begin", to_time(self.begin))
        object.__setattr__(self, "end", to_time(self.end))
        object.__setattr__(self, "values", tuple(bool(v) for v in self.values))
        if not self.begin < self.end:
            raise ChunkError(
                f"segment ({format_time(self.begin)},{format_time(self.end)}) is empty"
            )

    @property
    def period(self) -> Tuple[Time, Time]:
        return (self.begin, self.end)


@dataclass(frozen=True)
class Chunk:
    names: Tuple[str, ...]
    segments: Tuple[Segment, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "segments", tuple(self.segments))
        if not self.segments:
            raise ChunkError("a chunk needs at least one segment")
        if len(set(self.names)) != len(self.names):
            raise ChunkError(f"duplicate signal names in {self.names}")
        for segment in self.segments:
            if len(segment.values) != len(self.names):
                raise ChunkError(
                    f"segment has {len(segment.values)} values for {len(self.names)} signals"
                )
        for left, right in zip(self.segments, self.segments[1:]):
            if left.end != right.begin:
                raise ChunkError(
                    f"segments do not tile: {format_time(left.end)} != {format_time(right.begin)}"
                )

    @property
    def span(self) -> Span:
        return (self.segments[0].begin, self.segments[-1].end)

    @property
    def begin(self) -> Time:
        return self.segments[0].begin

    @property
    def end(self) -> Time:
        return self.segments[-1].end

    def true_periods(self, name: str) -> PeriodSet:
        index = self.names.index(name)
        return PeriodSet(s.period for s in self.segments if s.values[index])

    def value_sets(self) -> dict:
        return {name: self.true_periods(name) for name in self.names}

    def slice(self, begin: Time, end: Time) -> "Chunk":
        """Restriction of the chunk to ``(begin, end)``."""
        begin, end = to_time(begin), to_time(end)
        if begin < self.begin or end > self.end or not begin < end:
            raise ChunkError(
                f"({format_time(begin)},{format_time(end)}) is not a sub-span of this chunk"
            )
        pieces = []
        for segment in self.segments:
            lo, hi = max(segment.begin, begin), min(segment.end, end)
            if lo < hi:
                pieces.append(Segment(lo, hi, segment.values))
        return Chunk(self.names, tuple(pieces))

    def split(self, cuts: Iterable[Time]) -> List["Chunk"]:
        """Cut the chunk at the given interior times into consecutive chunks."""
        points = sorted({to_time(c) for c in cuts if self.begin < to_time(c) < self.end})
        edges = [self.begin, *points, self.end]
        return [self.slice(lo, hi) for lo, hi in zip(edges, edges[1:])]

    @classmethod
    def from_period_sets(cls, span: Span, sets: Mapping[str, PeriodSet]) -> "Chunk":
        """Build the stutter-free chunk over ``span`` whose true periods are ``sets``."""
        begin, end = to_time(span[0]), to_time(span[1])
        names = tuple(sets)
        clipped = [sets[name].clip(begin, end) for name in names]
        cuts = {begin, end}
        for periods in clipped:
            cuts.update(t for t in periods.boundaries() if begin < t < end)
        edges = sorted(cuts)
        segments = tuple(
            Segment(lo, hi, tuple(p.contains_period(lo, hi) for p in clipped))
            for lo, hi in zip(edges, edges[1:])
        )
        return merge_stutter(cls(names, segments))

    @classmethod
    def from_rows(
        cls, names: Sequence[str], rows: Iterable[Tuple[object, Sequence[bool]]], t0: object = 0
    ) -> "Chunk":
        """Rows ``(t, values)`` mean the values hold on ``(previous t, t)``, starting at ``t0``."""
        previous = to_time(t0)
        segments = []
        for t, values in rows:
            t = to_time(t)
            segments.append(Segment(previous, t, tuple(values)))
            previous = t
        return cls(tuple(names), tuple(segments))


def synchronize(a: Chunk, b: Chunk) -> List[Segment]:
    """Common refinement of two chunks over the same span.

    Each output segment carries ``a``'s values followed by ``b``'s values. The
    boundaries are exactly the union of both inputs' boundaries.
    """
    if a.span != b.span:
        raise ChunkError(
            "cannot synchronize chunks over different spans "
            f"({format_time(a.begin)},{format_time(a.end)}) and "
            f"({format_time(b.begin)},{format_time(b.end)})"
        )
    out = []
    i = j = 0
    cursor = a.begin
    while i < len(a.segments) and j < len(b.segments):
        sa, sb = a.segments[i], b.segments[j]
        end = min(sa.end, sb.end)
        out.append(Segment(cursor, end, sa.values + sb.values))
        cursor = end
        if sa.end == end:
            i += 1
        if sb.end == end:
            j += 1
    return out


def synchronize_periods(span: Span, left: PeriodSet, right: PeriodSet) -> List[Segment]:
    """Split ``span`` where either operand changes; values are ``(in left, in right)``."""
    begin, end = span
    cuts = {begin, end}
    cuts.update(t for t in left.boundaries() if begin < t < end)
    cuts.update(t for t in right.boundaries() if begin < t < end)
    edges = sorted(cuts)
    return [
        Segment(lo, hi, (left.contains_period(lo, hi), right.contains_period(lo, hi)))
        for lo, hi in zip(edges, edges[1:])
    ]


def merge_stutter(c: Chunk) -> Chunk:
    """Coalesce neighbouring segments that carry identical values."""
    merged = [c.segments[0]]
    for segment in c.segments[1:]:
        last = merged[-1]
        if segment.values == last.values:
            merged[-1] = Segment(last.begin, segment.end, last.values)
        else:
            merged.append(segment)
    if len(merged) == len(c.segments):
        return c
    return Chunk(c.names, tuple(merged))


def constant_chunk(names: Sequence[str], span: Span, values: Sequence[bool]) -> Chunk:
    return Chunk(tuple(names), (Segment(span[0], span[1], tuple(values)),))
