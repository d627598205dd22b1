"""
Sets of integers stored as closed intervals.

This is the state container of timed discrete nodes: forward-shifted windows
``[k+a, k+b]`` go in, everything below the current step is pruned, and the
output is a membership test. Intervals are kept disjoint and non-adjacent
(``[2,3]`` and ``[4,7]`` are stored as ``[2,7]``), so equal sets always have
equal representations.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator, Tuple, Union

from sortedcontainers import SortedList

from schema.errors import IntervalError

Endpoint = Union[int, float]
IntInterval = Tuple[int, Endpoint]

INF = math.inf


class IntIntervalSet:
    """Mutable canonical set of closed integer intervals; only the last may be unbounded."""

    __slots__ = ("_intervals",)

    def __init__(self, intervals: Iterable[IntInterval] = ()):
        self._intervals = SortedList()
        for lo, hi in intervals:
            self.add(lo, hi)

    @classmethod
    def parse(cls, text: str) -> "IntIntervalSet":
        """Parse ``{[2,3],[6,inf]}``; ``{}`` and ``∅`` denote the empty set."""
        body = text.strip()
        if body in ("∅", "{}"):
            return cls()
        if not (body.startswith("{") and body.endswith("}")):
            raise IntervalError(f"interval set must be enclosed in braces: {text!r}")
        pattern = r"\[\s*(-?\d+)\s*,\s*(-?\d+|inf)\s*\]"
        leftover = re.sub(pattern, "", body[1:-1])
        if leftover.replace(",", "").strip():
            raise IntervalError(f"malformed interval set: {text!r}")
        return cls(
            (int(lo), INF if hi == "inf" else int(hi)) for lo, hi in re.findall(pattern, body)
        )

    def add(self, lo: int, hi: Endpoint) -> None:
        """Insert ``[lo, hi]``, merging with overlapping or adjacent intervals."""
        if not lo <= hi:
            raise IntervalError(f"empty interval [{lo},{hi}]")
        intervals = self._intervals
        i = intervals.bisect_left((lo, -INF))
        if i > 0 and intervals[i - 1][1] + 1 >= lo:
            i -= 1
            lo = intervals[i][0]
        j = i
        n = len(intervals)
        while j < n and intervals[j][0] <= hi + 1:
            if intervals[j][1] > hi:
                hi = intervals[j][1]
            j += 1
        if j > i:
            del intervals[i:j]
        intervals.add((lo, hi))

    def prune(self, k: int) -> None:
        """Intersect with ``[k, inf)`` in place."""
        intervals = self._intervals
        while intervals and intervals[0][1] < k:
            intervals.pop(0)
        if intervals and intervals[0][0] < k:
            _, hi = intervals.pop(0)
            intervals.add((k, hi))

    def contains(self, k: int) -> bool:
        intervals = self._intervals
        i = intervals.bisect_right((k, INF))
        return i > 0 and intervals[i - 1][1] >= k

    def replace(self, lo: int, hi: Endpoint) -> None:
        """Make the set exactly ``[lo, hi]``."""
        self._intervals.clear()
        self.add(lo, hi)

    def clear(self) -> None:
        self._intervals.clear()

    def copy(self) -> "IntIntervalSet":
        other = IntIntervalSet()
        other._intervals.update(self._intervals)
        return other

    @property
    def intervals(self) -> Tuple[IntInterval, ...]:
        return tuple(self._intervals)

    def __iter__(self) -> Iterator[IntInterval]:
        return iter(self._intervals)

    def __len__(self) -> int:
        return len(self._intervals)

    def __bool__(self) -> bool:
        return bool(self._intervals)

    def __contains__(self, k: int) -> bool:
        return self.contains(k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntIntervalSet):
            return NotImplemented
        return list(self._intervals) == list(other._intervals)

    __hash__ = None

    def __str__(self) -> str:
        return "{" + ",".join(f"[{lo},{_endpoint(hi)}]" for lo, hi in self._intervals) + "}"

    def __repr__(self) -> str:
        return f"IntIntervalSet({self})"


def _endpoint(value: Endpoint) -> str:
    return "inf" if value == INF else str(value)


def int_add(s: IntIntervalSet, ivl: IntInterval) -> IntIntervalSet:
    result = s.copy()
    result.add(*ivl)
    return result


def int_prune(s: IntIntervalSet, k: int) -> IntIntervalSet:
    result = s.copy()
    result.prune(k)
    return result


def int_contains(s: IntIntervalSet, k: int) -> bool:
    return s.contains(k)
