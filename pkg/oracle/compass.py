"""
Metric compass logic: modal logic over periods with bounded Allen-relation
modalities, evaluated by enumerating witnesses on a finite grid.

It serves as a second, independent reading of the point-free semantics:
:func:`to_compass` translates past-MTL formulas into compass formulas and
:func:`check_mcl_equivalences` compares both evaluations.

Witness enumeration is exact on a dyadic refinement of the instance grid. A
modality of modal depth ``d`` receives period endpoints on a grid of step
``2**d`` ticks; its truth can only change when a witness crosses one of those
grid points, so trying every grid point and every midpoint (step
``2**(d-1)``) is enough. One instance grid unit is ``2**(depth+1)`` ticks,
which leaves room for half-unit periods at the top.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from loguru import logger

from intervals.period_set import Span, Time, format_time, to_time
from logic.desugar import desugar_for_dense
from logic.formula import And, Bound, Constant, Formula, Implies, Not, Or, Prop, Since
from oracle.pointfree import eval_pointfree
from oracle.structures import HomStructure, common_denominator, grid_denominator
from schema.errors import OracleError


class Relation(Enum):
    """Allen relations between the current period ``(x, y)`` and a witness period."""

    A = "A"  # (y, z): meets the current period on the right
    A_BAR = "Ā"  # (z, x): meets it on the left
    B = "B"  # (x, z), z < y: begins it
    B_BAR = "B̄"  # (x, z), z > y: begun by it
    E = "E"  # (z, y), z > x: ends it
    E_BAR = "Ē"  # (z, y), z < x: ended by it


class MclFormula:
    def children(self) -> Tuple["MclFormula", ...]:
        return ()


@dataclass(frozen=True)
class MTop(MclFormula):
    def __str__(self):
        return "⊤"


@dataclass(frozen=True)
class MProp(MclFormula):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class MNeg(MclFormula):
    """Plain complement: the period itself does not satisfy the child."""

    child: MclFormula

    def children(self):
        return (self.child,)

    def __str__(self):
        return f"~{self.child}"


@dataclass(frozen=True)
class MAnd(MclFormula):
    left: MclFormula
    right: MclFormula

    def children(self):
        return (self.left, self.right)

    def __str__(self):
        return f"({self.left} ∩ {self.right})"


@dataclass(frozen=True)
class MOr(MclFormula):
    left: MclFormula
    right: MclFormula

    def children(self):
        return (self.left, self.right)

    def __str__(self):
        return f"({self.left} ∪ {self.right})"


@dataclass(frozen=True)
class Diamond(MclFormula):
    relation: Relation
    child: MclFormula
    bound: Optional[Bound] = None

    def children(self):
        return (self.child,)

    def __str__(self):
        bound = "" if self.bound is None else f"({format_time(self.bound.lower)},{format_time(self.bound.upper)})"
        return f"<{self.relation.value}>{bound} {self.child}"


def box(relation: Relation, child: MclFormula, bound: Optional[Bound] = None) -> MclFormula:
    """Universal modality ``[X] f`` as ``~<X> ~f``."""
    return MNeg(Diamond(relation, MNeg(child), bound))


def e_or_ebar(child: MclFormula, bound: Optional[Bound] = None) -> MclFormula:
    """``<E ∪ Ē> f``: some period with the same right end satisfies ``f``."""
    return MOr(Diamond(Relation.E, child, bound), Diamond(Relation.E_BAR, child, bound))


@lru_cache(maxsize=None)
def modal_depth(m: MclFormula) -> int:
    own = 1 if isinstance(m, Diamond) else 0
    return own + max((modal_depth(c) for c in m.children()), default=0)


def compass_bounds(m: MclFormula) -> List[Time]:
    values: List[Time] = []
    if isinstance(m, Diamond) and m.bound is not None:
        values.extend((m.bound.lower, m.bound.upper))
    for child in m.children():
        values.extend(compass_bounds(child))
    return values


def to_compass(f: Formula, negation_order: str = "BE") -> MclFormula:
    """Translate a past-MTL formula into compass logic.

    Negation becomes ``[B][E] ~f`` (or ``[E][B] ~f`` with ``negation_order="EB"``),
    conjunction becomes intersection, and
    ``f1 since(a,b) f2`` becomes ``[E] <Ā>(a,b) (f1 ∩ <Ā> f2)``: every suffix
    ``(z, y)`` of the period starts at distance ``(a, b)`` after a period
    ``(r, z)`` on which ``f1`` holds and which is met by an ``f2`` period.
    """
    if negation_order not in ("BE", "EB"):
        raise OracleError(f"negation order must be 'BE' or 'EB', got {negation_order!r}")
    first, second = (
        (Relation.B, Relation.E) if negation_order == "BE" else (Relation.E, Relation.B)
    )

    def negate(m: MclFormula) -> MclFormula:
        return box(first, box(second, MNeg(m)))

    def translate(node: Formula) -> MclFormula:
        if isinstance(node, Constant):
            return MTop() if node.value else MNeg(MTop())
        if isinstance(node, Prop):
            return MProp(node.name)
        if isinstance(node, Not):
            return negate(translate(node.child))
        if isinstance(node, And):
            return MAnd(translate(node.left), translate(node.right))
        if isinstance(node, Or):
            return translate(Not(And(Not(node.left), Not(node.right))))
        if isinstance(node, Implies):
            return translate(Not(And(node.left, Not(node.right))))
        if isinstance(node, Since):
            witness = MAnd(translate(node.left), Diamond(Relation.A_BAR, translate(node.right)))
            return box(Relation.E, Diamond(Relation.A_BAR, witness, node.bound))
        raise OracleError(f"cannot translate {node!r}")

    return translate(desugar_for_dense(f))


class CompassEvaluator:
    """Evaluates compass formulas on periods with integer tick endpoints."""

    def __init__(self, h: HomStructure, denominator: int, depth: int):
        self.h = h
        self.start, self.end = h.span
        self.scale = denominator * 2 ** (depth + 1)
        self.last = self.ticks(self.end)
        self.props: Dict[str, Tuple[List[int], List[Tuple[int, int]]]] = {}
        for name, periods in h.valuations.items():
            pairs = [(self.ticks(s), self.ticks(e)) for s, e in periods]
            self.props[name] = ([s for s, _ in pairs], pairs)
        self.memo: Dict[tuple, bool] = {}

    def ticks(self, t: Time) -> int:
        value = (to_time(t) - self.start) * self.scale
        if Fraction(value).denominator != 1:
            raise OracleError(f"{format_time(to_time(t))} is not on the evaluation grid")
        return int(value)

    def bound_ticks(self, bound: Optional[Bound]) -> Tuple[int, Optional[int]]:
        if bound is None:
            return 0, None
        upper = None if math.isinf(bound.upper) else int(bound.upper * self.scale)
        return int(bound.lower * self.scale), upper

    def holds(self, m: MclFormula, x: int, y: int) -> bool:
        if isinstance(m, Diamond) and m.relation is Relation.A_BAR:
            key = (m, x, None)
        elif isinstance(m, Diamond) and m.relation is Relation.A:
            key = (m, None, y)
        else:
            key = (m, x, y)
        cached = self.memo.get(key)
        if cached is None:
            cached = self.memo[key] = self._clause(m, x, y)
        return cached

    def _prop(self, name: str, x: int, y: int) -> bool:
        if name not in self.props:
            raise OracleError(f"structure has no valuation for '{name}'")
        starts, pairs = self.props[name]
        index = bisect.bisect_right(starts, x) - 1
        return index >= 0 and pairs[index][0] <= x and y <= pairs[index][1]

    def _clause(self, m: MclFormula, x: int, y: int) -> bool:
        if isinstance(m, MTop):
            return True
        if isinstance(m, MProp):
            return self._prop(m.name, x, y)
        if isinstance(m, MNeg):
            return not self.holds(m.child, x, y)
        if isinstance(m, MAnd):
            return self.holds(m.left, x, y) and self.holds(m.right, x, y)
        if isinstance(m, MOr):
            return self.holds(m.left, x, y) or self.holds(m.right, x, y)
        if isinstance(m, Diamond):
            return self._diamond(m, x, y)
        raise OracleError(f"unknown compass formula {m!r}")

    def _diamond(self, m: Diamond, x: int, y: int) -> bool:
        a, b = self.bound_ticks(m.bound)
        rel = m.relation
        # open range (lo, hi) of the free endpoint z; None is unbounded
        if rel is Relation.B:
            lo, hi = (x if b is None else max(x, y - b)), y - a
        elif rel is Relation.E:
            lo, hi = x + a, (y if b is None else min(y, x + b))
        elif rel in (Relation.A, Relation.B_BAR):
            lo, hi = y + a, (None if b is None else y + b)
        else:
            lo, hi = (None if b is None else x - b), x - a
        step = 2 ** (modal_depth(m) - 1)
        first = 0 if lo is None else max(0, (lo // step + 1) * step)
        top = self.last // step * step
        last = top if hi is None else min(top, (hi - 1) // step * step)
        if first > last:
            return False
        # nearest witnesses first
        if rel in (Relation.A_BAR, Relation.E_BAR, Relation.B):
            candidates = range(last, first - 1, -step)
        else:
            candidates = range(first, last + 1, step)
        child = m.child
        for z in candidates:
            if rel is Relation.A_BAR:
                period = (z, x)
            elif rel is Relation.A:
                period = (y, z)
            elif rel in (Relation.B, Relation.B_BAR):
                period = (x, z)
            else:
                period = (z, y)
            if self.holds(child, *period):
                return True
        return False


def eval_mcl(m: MclFormula, h: HomStructure, period: Span) -> bool:
    """Truth of ``m`` on ``period``; witnesses range over periods inside the timeline."""
    begin, end = to_time(period[0]), to_time(period[1])
    if not begin < end:
        raise OracleError("a period needs begin < end")
    if begin < h.span[0] or end > h.span[1]:
        raise OracleError(
            f"period ({format_time(begin)},{format_time(end)}) lies outside the timeline"
        )
    denominator = common_denominator(h.endpoints() + compass_bounds(m) + [begin, end])
    evaluator = CompassEvaluator(h, denominator, modal_depth(m))
    return evaluator.holds(m, evaluator.ticks(begin), evaluator.ticks(end))


def check_mcl_equivalences(f: Formula, h: HomStructure) -> bool:
    """Compare the point-free valuation of ``f`` with its compass translations
    (both negation orders) on every half cell of the instance grid.
    """
    expected = eval_pointfree(f, h)
    denominator = grid_denominator(desugar_for_dense(f), h)
    start, end = h.span
    half = Fraction(1, 2 * denominator)
    cells = int((end - start) / half)
    for order in ("BE", "EB"):
        m = to_compass(f, order)
        evaluator = CompassEvaluator(h, denominator, modal_depth(m))
        for j in range(cells):
            lo, hi = start + j * half, start + (j + 1) * half
            got = evaluator.holds(m, evaluator.ticks(lo), evaluator.ticks(hi))
            if got != expected.contains_period(lo, hi):
                logger.warning(
                    "compass translation ({}) of {} disagrees on ({},{})",
                    order,
                    f,
                    format_time(lo),
                    format_time(hi),
                )
                return False
    return True
