"""
Node types of the discrete-time sequential network.

Every node owns the state variable of one subformula. ``update`` is called
once per step, after the node's children, with the list of the current
outputs of all nodes, and returns the node's own output.
"""

from __future__ import annotations

from typing import List, Mapping, Tuple

from intervals.int_set import INF, IntIntervalSet
from logic.formula import Bound, Formula
from schema.errors import MissingPropositionError


class DiscreteNode:
    timed = False

    def __init__(self, formula: Formula, children: Tuple[int, ...]):
        self.formula = formula
        self.children = children

    def update(self, k: int, outputs: List[bool], valuation: Mapping[str, bool]) -> bool:
        raise NotImplementedError

    def reset(self, strong_historically: bool = False) -> None:
        """Restore the initial state."""

    def state(self):
        return None

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.formula})"


class ConstantNode(DiscreteNode):
    def update(self, k, outputs, valuation):
        return self.formula.value


class PropNode(DiscreteNode):
    def __init__(self, formula, children):
        super().__init__(formula, children)
        self.name = formula.name

    def update(self, k, outputs, valuation):
        try:
            return bool(valuation[self.name])
        except KeyError:
            raise MissingPropositionError(self.name) from None


class NotNode(DiscreteNode):
    def update(self, k, outputs, valuation):
        return not outputs[self.children[0]]


class AndNode(DiscreteNode):
    def update(self, k, outputs, valuation):
        return outputs[self.children[0]] and outputs[self.children[1]]


class OrNode(DiscreteNode):
    def update(self, k, outputs, valuation):
        return outputs[self.children[0]] or outputs[self.children[1]]


class ImpliesNode(DiscreteNode):
    def update(self, k, outputs, valuation):
        return (not outputs[self.children[0]]) or outputs[self.children[1]]


class PreNode(DiscreteNode):
    """Outputs the child's value of the previous step; false at the first step."""

    def __init__(self, formula, children):
        super().__init__(formula, children)
        self.buffer = False

    def update(self, k, outputs, valuation):
        value = self.buffer
        self.buffer = outputs[self.children[0]]
        return value

    def reset(self, strong_historically=False):
        self.buffer = False

    def state(self):
        return self.buffer


class SinceNode(DiscreteNode):
    """Untimed since: ``V_k = y2 or (y1 and V_{k-1})``."""

    def __init__(self, formula, children):
        super().__init__(formula, children)
        self.value = False

    def update(self, k, outputs, valuation):
        self.value = outputs[self.children[1]] or (outputs[self.children[0]] and self.value)
        return self.value

    def reset(self, strong_historically=False):
        self.value = False

    def state(self):
        return self.value


class OnceNode(DiscreteNode):
    def __init__(self, formula, children):
        super().__init__(formula, children)
        self.value = False

    def update(self, k, outputs, valuation):
        self.value = outputs[self.children[0]] or self.value
        return self.value

    def reset(self, strong_historically=False):
        self.value = False

    def state(self):
        return self.value


class HistoricallyNode(DiscreteNode):
    """Untimed historically. Starts true (vacuous truth) unless strong semantics is on."""

    def __init__(self, formula, children):
        super().__init__(formula, children)
        self.value = True

    def update(self, k, outputs, valuation):
        self.value = outputs[self.children[0]] and self.value
        return self.value

    def reset(self, strong_historically=False):
        self.value = not strong_historically

    def state(self):
        return self.value


class TimedNode(DiscreteNode):
    """Base of nodes whose state is a set of future steps, shifted forward by ``[a, b]``."""

    timed = True

    def __init__(self, formula, children, bound: Bound):
        super().__init__(formula, children)
        self.a = int(bound.lower)
        self.b: float = INF if bound.upper == INF else int(bound.upper)
        self.window = IntIntervalSet()

    def reset(self, strong_historically=False):
        self.window.clear()

    def state(self):
        return self.window.copy()


class TimedOnceNode(TimedNode):
    def update(self, k, outputs, valuation):
        window = self.window
        if outputs[self.children[0]]:
            window.add(k + self.a, k + self.b)
        window.prune(k)
        return window.contains(k)


class TimedHistoricallyNode(TimedNode):
    """Stores the steps at which the formula is violated; output is non-membership."""

    def update(self, k, outputs, valuation):
        window = self.window
        if not outputs[self.children[0]]:
            window.add(k + self.a, k + self.b)
        window.prune(k)
        return not window.contains(k)

    def reset(self, strong_historically=False):
        self.window.clear()
        if strong_historically:
            self.window.add(0, self.b)


class TimedSinceNode(TimedNode):
    def update(self, k, outputs, valuation):
        window = self.window
        left = outputs[self.children[0]]
        right = outputs[self.children[1]]
        if right:
            if left:
                window.add(k + self.a, k + self.b)
            else:
                window.replace(k + self.a, k + self.b)
        elif not left:
            window.clear()
        window.prune(k)
        return window.contains(k)

