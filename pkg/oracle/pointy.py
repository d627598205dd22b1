"""
Reference evaluator of the pointy discrete-time semantics.

Evaluation follows the satisfaction clauses directly, by quantifying over
earlier steps. It keeps no state between calls; the only cache lives for the
duration of one call so that nested temporal operators stay polynomial.
"""

from __future__ import annotations

import math
from typing import Dict, List, Tuple

from logic.formula import (
    And,
    Constant,
    Formula,
    Historically,
    Implies,
    Not,
    Once,
    Or,
    Pre,
    Prop,
    Since,
    effective_bound,
)
from oracle.structures import DiscreteTrace
from schema.errors import OracleError


class _PointyDiscrete:
    def __init__(self, w: DiscreteTrace, strong_historically: bool):
        self.w = w
        self.strong_historically = strong_historically
        self.cache: Dict[Tuple[Formula, int], bool] = {}

    def holds(self, f: Formula, t: int) -> bool:
        key = (f, t)
        cached = self.cache.get(key)
        if cached is None:
            cached = self.cache[key] = self._clause(f, t)
        return cached

    def _clause(self, f: Formula, t: int) -> bool:
        if isinstance(f, Constant):
            return f.value
        if isinstance(f, Prop):
            return self.w.value(f.name, t)
        if isinstance(f, Not):
            return not self.holds(f.child, t)
        if isinstance(f, And):
            return self.holds(f.left, t) and self.holds(f.right, t)
        if isinstance(f, Or):
            return self.holds(f.left, t) or self.holds(f.right, t)
        if isinstance(f, Implies):
            return not self.holds(f.left, t) or self.holds(f.right, t)
        if isinstance(f, Pre):
            return t > 1 and self.holds(f.child, t - 1)

        bound = effective_bound(f.bound)
        lo = int(bound.lower)
        hi = math.inf if math.isinf(bound.upper) else int(bound.upper)
        earliest = 1 if math.isinf(hi) else max(1, t - hi)
        window = range(earliest, t - lo + 1)

        if isinstance(f, Once):
            return any(self.holds(f.child, u) for u in window)
        if isinstance(f, Historically):
            if self.strong_historically and (math.isinf(hi) or t - hi < 1):
                # steps before the trace count as violations
                return False
            return all(self.holds(f.child, u) for u in window)
        if isinstance(f, Since):
            # exists u with t-u in [lo, hi], right at u, left on every step in (u, t]
            for u in window:
                if self.holds(f.right, u) and all(
                    self.holds(f.left, v) for v in range(u + 1, t + 1)
                ):
                    return True
            return False
        raise OracleError(f"unknown formula node {f!r}")


def eval_pointy_discrete(
    f: Formula, w: DiscreteTrace, t: int, *, strong_historically: bool = False
) -> bool:
    """Truth of ``f`` at step ``t`` (1-based) of ``w``."""
    if not 1 <= t <= w.length:
        raise OracleError(f"step {t} outside the trace 1..{w.length}")
    return _PointyDiscrete(w, strong_historically).holds(f, t)


def eval_pointy_discrete_trace(
    f: Formula, w: DiscreteTrace, *, strong_historically: bool = False
) -> List[bool]:
    """Truth of ``f`` at every step of ``w``."""
    evaluator = _PointyDiscrete(w, strong_historically)
    return [evaluator.holds(f, t) for t in range(1, w.length + 1)]
