"""
pyparsing grammar for past-MTL formulas.

Precedence, loosest first: ``->`` (right associative), ``||``/``or``,
``&&``/``and``, ``since`` (non-associative: both operands are unary), then
the prefix operators ``!``/``not``, ``pre``, ``once`` and ``historically``.
Bounds are written ``[a:b]`` or ``[a:inf]``.
"""

from functools import lru_cache, reduce
from fractions import Fraction
import math

import pyparsing as pp

from logic.formula import (
    FALSE,
    KEYWORDS,
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
from schema.errors import BoundError, FormulaSyntaxError


def _bound_action(discrete: bool):
    def make_bound(s, loc, toks):
        lower = Fraction(toks[0])
        upper = math.inf if toks[1] == "inf" else Fraction(toks[1])
        if lower > upper:
            raise BoundError(f"position {loc}: lower bound {toks[0]} exceeds upper bound {toks[1]}")
        bound = Bound(lower, upper)
        if discrete and not bound.is_integral:
            raise BoundError(f"position {loc}: discrete-time bounds must be integers, got {bound}")
        return bound

    return make_bound


def _prefix_action(node_type):
    def make(toks):
        if len(toks) == 2:
            return node_type(toks[1], toks[0])
        return node_type(toks[0])

    return make


def _since_action(toks):
    if len(toks) == 1:
        return toks[0]
    if len(toks) == 2:
        return Since(toks[0], toks[1])
    return Since(toks[0], toks[2], toks[1])


def _implies_action(toks):
    if len(toks) == 1:
        return toks[0]
    return Implies(toks[0], toks[1])


@lru_cache(maxsize=None)
def _grammar(time_model: TimeModel) -> pp.ParserElement:
    discrete = time_model is TimeModel.DISCRETE

    lbrack, rbrack, colon, lpar, rpar = map(pp.Suppress, "[]:()")
    keyword = pp.MatchFirst([pp.Keyword(k) for k in sorted(KEYWORDS)])

    number = pp.Regex(r"\d+(?:\.\d+)?").set_name("number")
    upper = number | pp.Keyword("inf")
    bound = (lbrack + number + colon + upper + rbrack).set_name("bound")
    bound.set_parse_action(_bound_action(discrete))

    identifier = (~keyword + pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*")).set_name("proposition")
    identifier.set_parse_action(lambda toks: Prop(toks[0]))

    formula = pp.Forward().set_name("formula")
    unary = pp.Forward().set_name("operand")

    atom = (
        pp.Keyword("true").set_parse_action(lambda: TRUE)
        | pp.Keyword("false").set_parse_action(lambda: FALSE)
        | identifier
        | lpar + formula + rpar
    )

    negation = ((pp.Literal("!") | pp.Keyword("not")).suppress() + unary).set_parse_action(
        lambda toks: Not(toks[0])
    )
    previously = (pp.Keyword("pre").suppress() + unary).set_parse_action(lambda toks: Pre(toks[0]))
    once = (pp.Keyword("once").suppress() + pp.Opt(bound) + unary).set_parse_action(
        _prefix_action(Once)
    )
    historically = (pp.Keyword("historically").suppress() + pp.Opt(bound) + unary).set_parse_action(
        _prefix_action(Historically)
    )
    unary <<= negation | previously | once | historically | atom

    # no backtracking once "since" is read; the error points at the missing operand
    since = (unary + pp.Opt(pp.Keyword("since").suppress() - (pp.Opt(bound) + unary))).set_parse_action(
        _since_action
    )
    conjunction = (
        since + pp.ZeroOrMore((pp.Literal("&&") | pp.Keyword("and")).suppress() + since)
    ).set_parse_action(lambda toks: reduce(And, toks))
    disjunction = (
        conjunction
        + pp.ZeroOrMore((pp.Literal("||") | pp.Keyword("or")).suppress() + conjunction)
    ).set_parse_action(lambda toks: reduce(Or, toks))

    implication = pp.Forward()
    implication <<= (disjunction + pp.Opt(pp.Literal("->").suppress() + implication)).set_parse_action(
        _implies_action
    )
    formula <<= implication
    return formula


def parse(text: str, time_model=TimeModel.DISCRETE) -> Formula:
    """Parse ``text`` into a :class:`Formula`.

    In discrete time, bounds must be integers. ``pre`` is accepted in both
    time models; the dense compiler rejects it.
    """
    time_model = TimeModel(time_model)
    if not text or not text.strip():
        raise FormulaSyntaxError(text or "", 0, "Expected formula")
    try:
        result = _grammar(time_model).parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise FormulaSyntaxError(text, exc.loc, exc.msg) from exc
    return result[0]
