"""Rewrite derived temporal operators into since, as the dense compiler expects."""

from __future__ import annotations

from typing import Dict

from logic.formula import (
    TRUE,
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
)
from schema.errors import UnsupportedInDenseError


def desugar_for_dense(f: Formula) -> Formula:
    """Replace ``once_I f`` by ``true since_I f`` and ``historically_I f`` by
    ``!(true since_I !f)``. Fails on ``pre``, which has no dense counterpart.
    """
    memo: Dict[Formula, Formula] = {}

    def rewrite(node: Formula) -> Formula:
        if node in memo:
            return memo[node]
        if isinstance(node, (Constant, Prop)):
            result = node
        elif isinstance(node, Pre):
            raise UnsupportedInDenseError(
                "the previously operator has no meaning over dense time"
            )
        elif isinstance(node, Not):
            result = Not(rewrite(node.child))
        elif isinstance(node, (And, Or, Implies)):
            result = type(node)(rewrite(node.left), rewrite(node.right))
        elif isinstance(node, Since):
            result = Since(rewrite(node.left), rewrite(node.right), node.bound)
        elif isinstance(node, Once):
            result = Since(TRUE, rewrite(node.child), node.bound)
        elif isinstance(node, Historically):
            result = Not(Since(TRUE, Not(rewrite(node.child)), node.bound))
        else:
            raise TypeError(f"unknown formula node {node!r}")
        memo[node] = result
        return result

    return rewrite(f)
