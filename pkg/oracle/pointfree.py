"""
Reference evaluator of the point-free dense-time semantics.

Every endpoint and bound of an instance is a multiple of ``1/D`` for the
least common denominator ``D``, and so is every boundary of every
subformula's valuation: boundaries only arise as sums of input endpoints and
bounds. The timeline is cut into cells of width ``1/(D*refine)``; a formula
is constant on the interior of each cell, so it is decided at the cell
midpoint, and maximal periods are read back as runs of true cells.

Since holds at a point ``x`` inside cell ``i`` when some earlier point ``r``
with ``a < x - r < b`` ends a period of the right operand and the left
operand holds on ``(r, x)``. The witness ``r`` is either a grid point (the
right operand then holds on the cell ending at ``r``) or a point inside a
cell (the right operand holds on that cell).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Optional

import numpy as np

from intervals.period_set import PeriodSet
from logic.desugar import desugar_for_dense
from logic.formula import And, Constant, Formula, Implies, Not, Or, Prop, Since, effective_bound
from oracle.structures import HomStructure, grid_denominator
from schema.errors import OracleError


class CellGrid:
    """Uniform cells ``(start + i/scale, start + (i+1)/scale)`` covering a timeline."""

    def __init__(self, h: HomStructure, scale: int):
        self.start, self.end = h.span
        self.scale = scale
        cells = (self.end - self.start) * scale
        if cells.denominator != 1:
            raise OracleError("timeline length is not a multiple of the cell width")
        self.size = int(cells)

    def index(self, t) -> int:
        offset = (t - self.start) * self.scale
        if Fraction(offset).denominator != 1:
            raise OracleError(f"{t} is not on the grid")
        return int(offset)

    def time(self, i: int) -> Fraction:
        return self.start + Fraction(i, self.scale)

    def cells_of(self, periods: PeriodSet) -> np.ndarray:
        cells = np.zeros(self.size, dtype=bool)
        for s, e in periods:
            cells[self.index(s) : self.index(e)] = True
        return cells

    def periods_of(self, cells: np.ndarray) -> PeriodSet:
        padded = np.concatenate(([False], cells, [False])).astype(np.int8)
        changes = np.flatnonzero(np.diff(padded))
        starts, ends = changes[0::2], changes[1::2]
        return PeriodSet((self.time(int(s)), self.time(int(e))) for s, e in zip(starts, ends))


def _ticks(value, scale: int) -> Optional[int]:
    if math.isinf(value):
        return None
    ticks = Fraction(value) * scale
    if ticks.denominator != 1:
        raise OracleError(f"bound {value} is not on the grid")
    return int(ticks)


def _since_cells(left: np.ndarray, right: np.ndarray, a: int, b: Optional[int]) -> np.ndarray:
    n = len(left)
    if n == 0 or (b is not None and a >= b):
        return np.zeros(n, dtype=bool)
    idx = np.arange(n)
    # latest cell <= i where the left operand fails, -1 if none
    last_false = np.maximum.accumulate(np.where(left, -1, idx))
    prefix = np.concatenate(([0], np.cumsum(right, dtype=np.int64)))
    earliest = np.zeros(n, dtype=np.int64) if b is None else np.maximum(0, idx - b)

    def any_right(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
        valid = lo <= hi
        lo_c = np.clip(lo, 0, n)
        hi_c = np.clip(hi + 1, 0, n)
        return valid & (prefix[np.maximum(hi_c, lo_c)] - prefix[lo_c] > 0)

    # witness at grid point c+1: right on cell c, left on cells c+1..i
    grid = any_right(np.maximum(earliest, last_false), idx - a - 1)
    # witness inside cell c: right on cell c, left on cells c..i
    interior = any_right(np.maximum(earliest, last_false + 1), idx - a)
    return grid | interior


class _PointFree:
    def __init__(self, h: HomStructure, grid: CellGrid):
        self.h = h
        self.grid = grid
        self.cache: Dict[Formula, np.ndarray] = {}

    def cells(self, f: Formula) -> np.ndarray:
        cached = self.cache.get(f)
        if cached is None:
            cached = self.cache[f] = self._evaluate(f)
        return cached

    def _evaluate(self, f: Formula) -> np.ndarray:
        n = self.grid.size
        if isinstance(f, Constant):
            return np.full(n, f.value, dtype=bool)
        if isinstance(f, Prop):
            return self.grid.cells_of(self.h.periods(f.name))
        if isinstance(f, Not):
            return ~self.cells(f.child)
        if isinstance(f, And):
            return self.cells(f.left) & self.cells(f.right)
        if isinstance(f, Or):
            return self.cells(f.left) | self.cells(f.right)
        if isinstance(f, Implies):
            return ~self.cells(f.left) | self.cells(f.right)
        if isinstance(f, Since):
            bound = effective_bound(f.bound)
            return _since_cells(
                self.cells(f.left),
                self.cells(f.right),
                _ticks(bound.lower, self.grid.scale),
                _ticks(bound.upper, self.grid.scale),
            )
        raise OracleError(f"unknown formula node {f!r}")


def eval_pointfree_cells(f: Formula, h: HomStructure, refine: int = 2):
    """Cell values of ``f`` together with the grid they live on."""
    if refine < 1:
        raise OracleError("refinement factor must be positive")
    g = desugar_for_dense(f)
    grid = CellGrid(h, grid_denominator(g, h) * refine)
    return _PointFree(h, grid).cells(g), grid


def eval_pointfree(f: Formula, h: HomStructure, refine: int = 2) -> PeriodSet:
    """Maximal periods of the timeline on which ``f`` holds."""
    cells, grid = eval_pointfree_cells(f, h, refine)
    return grid.periods_of(cells)
