"""
Cross-check between the pointy semantics under left continuity and the
point-free semantics projected onto period end points.

The pointy side is evaluated independently of :mod:`oracle.pointfree`: exact
rational time points, the satisfaction clauses quantified over finitely many
representative witnesses. Propositions are realized left-continuously (true
on ``(s, e]`` for a maximal period ``(s, e)``), and every subformula is read
left-continuously at grid points: its value at a grid point is its value just
before it.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple

from loguru import logger

from intervals.period_set import format_time
from logic.desugar import desugar_for_dense
from logic.formula import And, Constant, Formula, Implies, Not, Or, Prop, Since, effective_bound
from oracle.pointfree import eval_pointfree
from oracle.structures import HomStructure, grid_denominator
from schema.errors import OracleError

# sample offsets inside a cell, in cell widths before its right end
_LC_OFFSETS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


class _PointyDense:
    def __init__(self, h: HomStructure, scale: int):
        self.h = h
        self.start, self.end = h.span
        self.scale = scale
        self.width = Fraction(1, scale)
        self.cache: Dict[Tuple[Formula, Fraction], bool] = {}

    def on_grid(self, x: Fraction) -> bool:
        return ((x - self.start) * self.scale).denominator == 1

    def cell_start(self, x: Fraction) -> Fraction:
        """Left end of the cell holding the interior point ``x``."""
        return self.start + Fraction(math.floor((x - self.start) * self.scale), self.scale)

    def holds(self, f: Formula, x: Fraction) -> bool:
        key = (f, x)
        cached = self.cache.get(key)
        if cached is None:
            if self.on_grid(x):
                cached = self.holds(f, x - self.width * _LC_OFFSETS[0])
            else:
                cached = self._clause(f, x)
            self.cache[key] = cached
        return cached

    def _clause(self, f: Formula, x: Fraction) -> bool:
        if isinstance(f, Constant):
            return f.value
        if isinstance(f, Prop):
            return self.h.periods(f.name).contains_point(x)
        if isinstance(f, Not):
            return not self.holds(f.child, x)
        if isinstance(f, And):
            return self.holds(f.left, x) and self.holds(f.right, x)
        if isinstance(f, Or):
            return self.holds(f.left, x) or self.holds(f.right, x)
        if isinstance(f, Implies):
            return not self.holds(f.left, x) or self.holds(f.right, x)
        if isinstance(f, Since):
            return self._since(f, x)
        raise OracleError(f"unknown formula node {f!r}")

    def _pieces_before(self, x: Fraction) -> Iterator[Tuple[str, Fraction, Fraction]]:
        """Walk left from the interior point ``x``: open cell pieces and grid points."""
        hi = x
        lo = self.cell_start(x)
        while True:
            yield "piece", lo, hi
            if lo <= self.start:
                return
            yield "point", lo, lo
            hi, lo = lo, lo - self.width

    def _since(self, f: Since, x: Fraction) -> bool:
        bound = effective_bound(f.bound)
        a, b = bound.lower, bound.upper
        if a >= b:
            return False
        # witnesses r need a < x - r < b
        w_lo = x - b if not math.isinf(b) else None
        w_hi = x - a
        left_holds = True  # left operand on (current position, x)
        for kind, lo, hi in self._pieces_before(x):
            if w_lo is not None and hi <= w_lo:
                return False
            if kind == "point":
                r = lo
                if r > self.start and (w_lo is None or w_lo < r) and r < w_hi:
                    if left_holds and self.holds(f.right, r):
                        return True
                left_holds = left_holds and self.holds(f.left, r)
            else:
                o_lo = lo if w_lo is None else max(lo, w_lo)
                o_hi = min(hi, w_hi)
                if o_lo < o_hi and left_holds:
                    r = (o_lo + o_hi) / 2
                    if self.holds(f.right, r) and self.holds(f.left, (r + hi) / 2):
                        return True
                left_holds = left_holds and self.holds(f.left, (lo + hi) / 2)
            if not left_holds:
                return False
        return False

    def left_continuous(self, f: Formula, cell_end: Fraction) -> bool:
        values = {self.holds(f, cell_end - self.width * p) for p in _LC_OFFSETS}
        return len(values) == 1


def check_flattening(f: Formula, h: HomStructure, refine: int = 2) -> bool:
    """True when, at every grid point ``x`` of the instance, ``f`` holds at
    ``x`` under the left-continuous pointy semantics exactly when some period
    ``(t, x)`` satisfies ``f`` point-free.
    """
    g = desugar_for_dense(f)
    scale = grid_denominator(g, h) * refine
    pointy = _PointyDense(h, scale)
    pointfree = eval_pointfree(g, h, refine)
    start, end = h.span
    cells = int((end - start) * scale)
    for j in range(1, cells + 1):
        x = start + Fraction(j, scale)
        if not pointy.left_continuous(g, x):
            logger.warning("left continuity fails for {} before {}", g, format_time(x))
            return False
        flattened = pointfree.contains_period(x - pointy.width, x)
        if pointy.holds(g, x) != flattened:
            logger.warning(
                "flattening mismatch for {} at {}: pointy {}, point-free {}",
                g,
                format_time(x),
                not flattened,
                flattened,
            )
            return False
    return True


def check_continuity(f: Formula, h: HomStructure, refine: int = 2) -> bool:
    """True when ``f`` holds under the pointy semantics at the midpoint of a
    grid cell exactly when that cell lies inside a maximal period of the
    point-free result.
    """
    g = desugar_for_dense(f)
    scale = grid_denominator(g, h) * refine
    pointy = _PointyDense(h, scale)
    pointfree = eval_pointfree(g, h, refine)
    start, end = h.span
    for j in range(int((end - start) * scale)):
        middle = start + Fraction(2 * j + 1, 2 * scale)
        if pointy.holds(g, middle) != pointfree.contains_point(middle):
            logger.warning("continuity fails for {} at {}", g, format_time(middle))
            return False
    return True
