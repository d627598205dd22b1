"""
Sets of open time periods with exact rational endpoints.

A ``PeriodSet`` holds maximal periods ``(s, e)`` in increasing order. Two
periods that overlap or merely touch are merged: the point-free time model has
no boundary points, so ``(a, b)`` and ``(b, c)`` together describe ``(a, c)``.
"""

from __future__ import annotations

import bisect
import heapq
import math
import re
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Iterator, Tuple, Union

from schema.errors import IntervalError

Time = Union[Fraction, float]
Period = Tuple[Time, Time]
Span = Tuple[Time, Time]

INF = math.inf


def to_time(value) -> Time:
    """Convert ints, decimal strings, Decimals and Fractions to an exact time value.

    ``inf`` (string or float) maps to ``math.inf``; finite floats are rejected
    unless they are integral, since binary fractions would leak into the
    open-bound comparisons.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise IntervalError(f"not a time value: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if math.isinf(value) and value > 0:
            return INF
        if value.is_integer():
            return Fraction(int(value))
        raise IntervalError(f"inexact float time {value!r}; pass a string or Fraction")
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if text in ("inf", "+inf"):
            return INF
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise IntervalError(f"not a time value: {value!r}") from exc
    raise IntervalError(f"not a time value: {value!r}")


def format_time(value: Time) -> str:
    """Decimal text for terminating fractions, ``n/d`` otherwise, ``inf`` for infinity."""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    denominator = value.denominator
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    if denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    scaled = value * 10**digits
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled.numerator), 10**digits)
    return f"{sign}{whole}.{str(frac).rjust(digits, '0').rstrip('0')}"


class PeriodSet:
    """Immutable canonical union of open periods."""

    __slots__ = ("_periods",)

    def __init__(self, periods: Iterable[Tuple[object, object]] = ()):
        converted = []
        for start, end in periods:
            s, e = to_time(start), to_time(end)
            if math.isinf(s):
                raise IntervalError("a period cannot start at infinity")
            if not s < e:
                raise IntervalError(f"empty period ({format_time(s)},{format_time(e)})")
            converted.append((s, e))
        converted.sort()
        self._periods = _merge_sorted(converted)

    @classmethod
    def _canonical(cls, periods: Tuple[Period, ...]) -> "PeriodSet":
        instance = cls.__new__(cls)
        instance._periods = periods
        return instance

    @classmethod
    def single(cls, start, end) -> "PeriodSet":
        return cls([(start, end)])

    @classmethod
    def parse(cls, text: str) -> "PeriodSet":
        """Parse ``{(s1,e1),(s2,e2),...}``; ``{}`` and ``∅`` denote the empty set."""
        body = text.strip()
        if body in ("∅", "{}"):
            return EMPTY
        if not (body.startswith("{") and body.endswith("}")):
            raise IntervalError(f"period set must be enclosed in braces: {text!r}")
        pairs = re.findall(r"\(\s*([^,()]+?)\s*,\s*([^,()]+?)\s*\)", body)
        leftover = re.sub(r"\(\s*[^,()]+?\s*,\s*[^,()]+?\s*\)", "", body[1:-1])
        if leftover.replace(",", "").strip():
            raise IntervalError(f"malformed period set: {text!r}")
        return cls(pairs)

    @property
    def periods(self) -> Tuple[Period, ...]:
        return self._periods

    def __iter__(self) -> Iterator[Period]:
        return iter(self._periods)

    def __len__(self) -> int:
        return len(self._periods)

    def __bool__(self) -> bool:
        return bool(self._periods)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PeriodSet):
            return NotImplemented
        return self._periods == other._periods

    def __hash__(self) -> int:
        return hash(self._periods)

    def __str__(self) -> str:
        inner = ",".join(f"({format_time(s)},{format_time(e)})" for s, e in self._periods)
        return "{" + inner + "}"

    def __repr__(self) -> str:
        return f"PeriodSet({self})"

    def __or__(self, other: "PeriodSet") -> "PeriodSet":
        return self.union(other)

    def __and__(self, other: "PeriodSet") -> "PeriodSet":
        return self.intersect(other)

    def union(self, other: "PeriodSet") -> "PeriodSet":
        if not other._periods:
            return self
        if not self._periods:
            return other
        merged = _merge_sorted(list(heapq.merge(self._periods, other._periods)))
        return PeriodSet._canonical(merged)

    def intersect(self, other: "PeriodSet") -> "PeriodSet":
        a, b = self._periods, other._periods
        i = j = 0
        out = []
        while i < len(a) and j < len(b):
            start = max(a[i][0], b[j][0])
            end = min(a[i][1], b[j][1])
            if start < end:
                out.append((start, end))
            if a[i][1] < b[j][1]:
                i += 1
            else:
                j += 1
        # pieces of canonical inputs are separated by a gap of one input
        return PeriodSet._canonical(tuple(out))

    def complement(self, span: Span) -> "PeriodSet":
        """Maximal periods of ``span`` not covered by this set."""
        begin, end = to_time(span[0]), to_time(span[1])
        if not begin < end:
            raise IntervalError("complement needs a nonempty span")
        out = []
        cursor = begin
        for s, e in self._periods:
            if s < begin or e > end:
                raise IntervalError(
                    f"period ({format_time(s)},{format_time(e)}) lies outside span "
                    f"({format_time(begin)},{format_time(end)})"
                )
            if s > cursor:
                out.append((cursor, s))
            cursor = e
        if cursor < end:
            out.append((cursor, end))
        return PeriodSet._canonical(tuple(out))

    def clip(self, begin: Time, end: Time = INF) -> "PeriodSet":
        """Intersection with the open period ``(begin, end)``."""
        if not begin < end:
            return EMPTY
        periods = self._periods
        if not periods or (periods[0][0] >= begin and periods[-1][1] <= end):
            return self
        out = []
        for s, e in periods:
            if e <= begin:
                continue
            if s >= end:
                break
            out.append((max(s, begin), min(e, end)))
        return PeriodSet._canonical(tuple(out))

    def after(self, t: Time) -> "PeriodSet":
        """Intersection with ``(t, inf)``."""
        periods = self._periods
        if not periods or periods[0][0] >= t:
            return self
        index = bisect.bisect_left(periods, (t,))
        # the period just before the index may still extend past t
        start = index - 1 if index > 0 and periods[index - 1][1] > t else index
        out = list(periods[start:])
        if out and out[0][0] < t:
            out[0] = (t, out[0][1])
        return PeriodSet._canonical(tuple(out))

    def contains_period(self, start: Time, end: Time) -> bool:
        """True when the open period ``(start, end)`` lies inside one maximal period."""
        index = bisect.bisect_right(self._periods, (start, INF)) - 1
        if index < 0:
            return False
        s, e = self._periods[index]
        return s <= start and end <= e

    def contains_point(self, t: Time) -> bool:
        """True when ``t`` is an interior point of some period."""
        index = bisect.bisect_left(self._periods, (t,)) - 1
        if index < 0:
            return False
        s, e = self._periods[index]
        return s < t < e

    def within(self, span: Span) -> bool:
        if not self._periods:
            return True
        return self._periods[0][0] >= span[0] and self._periods[-1][1] <= span[1]

    def boundaries(self) -> Iterator[Time]:
        for s, e in self._periods:
            yield s
            yield e


def _merge_sorted(periods) -> Tuple[Period, ...]:
    out = []
    for s, e in periods:
        if out and s <= out[-1][1]:
            if e > out[-1][1]:
                out[-1] = (out[-1][0], e)
        else:
            out.append((s, e))
    return tuple(out)


EMPTY = PeriodSet()


def period_union(a: PeriodSet, b: PeriodSet) -> PeriodSet:
    return a.union(b)


def period_intersect(a: PeriodSet, b: PeriodSet) -> PeriodSet:
    return a.intersect(b)


def period_complement(a: PeriodSet, span: Span) -> PeriodSet:
    return a.complement(span)
