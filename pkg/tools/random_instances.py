"""Seeded random formulas, traces and behaviors for differential checking."""

import math
import random
from fractions import Fraction
from typing import List, Optional, Sequence

from intervals.chunk import Chunk
from intervals.period_set import PeriodSet, Span
from logic.formula import (
    FALSE,
    TRUE,
    And,
    Bound,
    Formula,
    Historically,
    Implies,
    Not,
    Once,
    Or,
    Pre,
    Prop,
    Since,
    TimeModel,
)
from oracle.structures import DiscreteTrace, HomStructure

PROPS = ("p", "q", "r")


def random_bound(rng: random.Random, max_bound: int) -> Optional[Bound]:
    roll = rng.random()
    if roll < 0.25:
        return None
    lower = rng.randint(0, max_bound)
    if roll < 0.4:
        return Bound(lower, math.inf)
    return Bound(lower, rng.randint(lower, max_bound))


def random_formula(
    rng: random.Random,
    depth: int,
    max_bound: int = 8,
    props: Sequence[str] = PROPS,
    time_model: TimeModel = TimeModel.DISCRETE,
) -> Formula:
    """A formula of height at most ``depth``; dense formulas contain no ``pre``."""
    if depth <= 0 or rng.random() < 0.2:
        if rng.random() < 0.1:
            return rng.choice((TRUE, FALSE))
        return Prop(rng.choice(props))
    unary = [Not, Once, Historically]
    if time_model is TimeModel.DISCRETE:
        unary.append(Pre)
    binary = [And, Or, Implies, Since, Since]

    def sub() -> Formula:
        return random_formula(rng, depth - 1, max_bound, props, time_model)

    if rng.random() < 0.4:
        op = rng.choice(unary)
        if op in (Once, Historically):
            return op(sub(), random_bound(rng, max_bound))
        return op(sub())
    op = rng.choice(binary)
    if op is Since:
        return Since(sub(), sub(), random_bound(rng, max_bound))
    return op(sub(), sub())


def random_trace(
    rng: random.Random, length: int, props: Sequence[str] = PROPS, density: float = 0.5
) -> DiscreteTrace:
    return DiscreteTrace(
        {name: tuple(rng.random() < density for _ in range(length)) for name in props}
    )


def random_period_set(rng: random.Random, span_end: int, max_periods: int = 4) -> PeriodSet:
    count = rng.randint(0, max_periods)
    points = sorted(rng.sample(range(span_end + 1), min(2 * count, span_end + 1)))
    if len(points) % 2:
        points.pop()
    return PeriodSet(zip(points[0::2], points[1::2]))


def random_structure(
    rng: random.Random,
    max_span: int = 50,
    props: Sequence[str] = PROPS,
    max_periods: int = 4,
) -> HomStructure:
    """Integer endpoints in ``[0, span_end]`` with ``span_end <= max_span``."""
    span_end = rng.randint(2, max_span)
    return HomStructure(
        (Fraction(0), Fraction(span_end)),
        {name: random_period_set(rng, span_end, max_periods) for name in props},
    )


def random_cuts(rng: random.Random, span: Span, count: int) -> List[Fraction]:
    """Cut points on the half-unit grid strictly inside ``span``."""
    begin, end = span
    slots = int((end - begin) * 2) - 1
    if slots <= 0:
        return []
    picks = rng.sample(range(1, slots + 1), min(count, slots))
    return sorted(begin + Fraction(i, 2) for i in picks)


def random_chunking(rng: random.Random, h: HomStructure, max_cuts: int = 6) -> List[Chunk]:
    chunk = h.to_chunk()
    return chunk.split(random_cuts(rng, h.span, rng.randint(0, max_cuts)))


def random_compass_formula(
    rng: random.Random, props: Sequence[str] = ("p", "q"), max_bound: int = 3, literals: int = 2
) -> Formula:
    """Conjunction of possibly negated propositions and since formulas.

    The left operand of since is a proposition or true, the right one a
    proposition or a conjunction of two; bounds are open integer windows.
    """

    def base() -> Formula:
        if rng.random() < 0.3:
            return Prop(rng.choice(props))
        left = TRUE if rng.random() < 0.3 else Prop(rng.choice(props))
        if rng.random() < 0.3:
            right = And(Prop(props[0]), Prop(props[-1]))
        else:
            right = Prop(rng.choice(props))
        bound = None
        if rng.random() < 0.7:
            lower = rng.randint(0, max_bound - 1)
            bound = Bound(lower, rng.randint(lower + 1, max_bound))
        return Since(left, right, bound)

    def literal() -> Formula:
        f = base()
        return Not(f) if rng.random() < 0.4 else f

    f = literal()
    for _ in range(rng.randint(0, literals - 1)):
        f = And(f, literal())
    return f
