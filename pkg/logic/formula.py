"""
Abstract syntax of past metric temporal logic.

Formulas are immutable, hashable values. Structurally equal formulas compare
equal, which is what the subformula DAG relies on for sharing.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

from intervals.period_set import format_time
from schema.errors import BoundError, FormulaError

Time = Union[Fraction, float]

KEYWORDS = frozenset(
    {"true", "false", "not", "and", "or", "pre", "since", "once", "historically", "inf"}
)

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class TimeModel(str, Enum):
    DISCRETE = "discrete"
    DENSE = "dense"


@dataclass(frozen=True)
class Bound:
    """Duration bound. Closed ``[lower, upper]`` in discrete time, open in dense time."""

    lower: Fraction
    upper: Time = math.inf

    def __post_init__(self):
        object.__setattr__(self, "lower", Fraction(self.lower))
        if not math.isinf(self.upper):
            object.__setattr__(self, "upper", Fraction(self.upper))
        if self.lower < 0:
            raise BoundError(f"negative lower bound {format_time(self.lower)}")
        if self.lower > self.upper:
            raise BoundError(
                f"lower bound {format_time(self.lower)} exceeds upper bound {format_time(self.upper)}"
            )

    @property
    def is_untimed(self) -> bool:
        return self.lower == 0 and math.isinf(self.upper)

    @property
    def is_integral(self) -> bool:
        upper_ok = math.isinf(self.upper) or self.upper.denominator == 1
        return self.lower.denominator == 1 and upper_ok

    def __str__(self) -> str:
        return f"[{_bound_number(self.lower)}:{_bound_number(self.upper)}]"


UNBOUNDED = Bound(Fraction(0), math.inf)


def _bound_number(value: Time) -> str:
    # non-terminating fractions print as n/d, which the parser does not read back
    return format_time(value)


class Formula:
    """Base class of formula nodes."""

    def children(self) -> Tuple["Formula", ...]:
        return ()

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Constant(Formula):
    value: bool


TRUE = Constant(True)
FALSE = Constant(False)


@dataclass(frozen=True)
class Prop(Formula):
    name: str

    def __post_init__(self):
        if not _IDENTIFIER.match(self.name) or self.name in KEYWORDS:
            raise FormulaError(f"invalid proposition name {self.name!r}")


@dataclass(frozen=True)
class Not(Formula):
    child: Formula

    def children(self):
        return (self.child,)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Pre(Formula):
    """Previously: true at step k when the child held at step k-1."""

    child: Formula

    def children(self):
        return (self.child,)


@dataclass(frozen=True)
class Since(Formula):
    left: Formula
    right: Formula
    bound: Optional[Bound] = None

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Once(Formula):
    child: Formula
    bound: Optional[Bound] = None

    def children(self):
        return (self.child,)


@dataclass(frozen=True)
class Historically(Formula):
    child: Formula
    bound: Optional[Bound] = None

    def children(self):
        return (self.child,)


def effective_bound(bound: Optional[Bound]) -> Bound:
    """An absent bound means ``[0, inf)``."""
    return UNBOUNDED if bound is None else bound


def is_timed(bound: Optional[Bound]) -> bool:
    return bound is not None and not bound.is_untimed


_BINARY_SYMBOLS = {And: "&&", Or: "||", Implies: "->"}


def format_formula(f: Formula) -> str:
    """Print ``f`` in the concrete syntax accepted by :func:`logic.parser.parse`.

    Binary terms are always parenthesized, so the output parses back to the
    same tree regardless of precedence.
    """
    if isinstance(f, Constant):
        return "true" if f.value else "false"
    if isinstance(f, Prop):
        return f.name
    if isinstance(f, Not):
        return "!" + format_formula(f.child)
    if isinstance(f, Pre):
        return "pre " + format_formula(f.child)
    if isinstance(f, (Once, Historically)):
        keyword = "once" if isinstance(f, Once) else "historically"
        bound = "" if f.bound is None else str(f.bound)
        return f"{keyword}{bound} {format_formula(f.child)}"
    if isinstance(f, Since):
        bound = "" if f.bound is None else str(f.bound)
        return f"({format_formula(f.left)} since{bound} {format_formula(f.right)})"
    symbol = _BINARY_SYMBOLS.get(type(f))
    if symbol is None:
        raise FormulaError(f"unknown formula node {f!r}")
    return f"({format_formula(f.left)} {symbol} {format_formula(f.right)})"


def formula_size(f: Formula) -> int:
    """Number of nodes of the syntax tree, shared subtrees counted every time."""
    size = 0
    stack = [f]
    while stack:
        node = stack.pop()
        size += 1
        stack.extend(node.children())
    return size


def propositions(f: Formula) -> Tuple[str, ...]:
    names = set()
    stack = [f]
    seen = set()
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        if isinstance(node, Prop):
            names.add(node.name)
        stack.extend(node.children())
    return tuple(sorted(names))


def bounds_of(f: Formula) -> Tuple[Bound, ...]:
    """All explicit bounds occurring in ``f``."""
    found = []
    stack = [f]
    while stack:
        node = stack.pop()
        bound = getattr(node, "bound", None)
        if bound is not None:
            found.append(bound)
        stack.extend(node.children())
    return tuple(found)
