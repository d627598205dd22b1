"""
Discrete-time sequential network compiled from a past-MTL formula.

One node per unique subformula, evaluated children-first at every step.
Timed operators keep forward-shifted integer interval sets; operators bounded
by ``[0, inf)`` compile to their Boolean untimed form.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Mapping, Type

from loguru import logger

from logic.dag import SubformulaDag, build_dag
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
    is_timed,
    propositions,
)
from networks.discrete_nodes import (
    AndNode,
    ConstantNode,
    DiscreteNode,
    HistoricallyNode,
    ImpliesNode,
    NotNode,
    OnceNode,
    OrNode,
    PreNode,
    PropNode,
    SinceNode,
    TimedHistoricallyNode,
    TimedOnceNode,
    TimedSinceNode,
)
from schema.errors import FormulaError, NetworkStateError

_UNTIMED: Dict[type, Type[DiscreteNode]] = {
    Constant: ConstantNode,
    Prop: PropNode,
    Not: NotNode,
    And: AndNode,
    Or: OrNode,
    Implies: ImpliesNode,
    Pre: PreNode,
    Since: SinceNode,
    Once: OnceNode,
    Historically: HistoricallyNode,
}

_TIMED: Dict[type, Type[DiscreteNode]] = {
    Since: TimedSinceNode,
    Once: TimedOnceNode,
    Historically: TimedHistoricallyNode,
}


def _make_node(f: Formula, children) -> DiscreteNode:
    bound = getattr(f, "bound", None)
    if is_timed(bound):
        if not bound.is_integral:
            raise FormulaError(f"discrete-time bound {bound} is not integral")
        return _TIMED[type(f)](f, children, bound)
    return _UNTIMED[type(f)](f, children)


class DiscreteNetwork:
    """Steps through a trace one valuation at a time.

    ``step`` numbers start at 1; before the first call the network is at step 0
    with every state at its initial value.
    """

    def __init__(self, dag: SubformulaDag):
        self.dag = dag
        self.nodes: List[DiscreteNode] = [
            _make_node(f, children) for f, children in zip(dag.nodes, dag.children)
        ]
        self.propositions = propositions(dag.formula)
        self.strong_historically = False
        self.k = 0
        self._outputs: List[bool] = [False] * len(self.nodes)
        self._timed = [node for node in self.nodes if node.timed]
        self.reset()

    @property
    def formula(self) -> Formula:
        return self.dag.formula

    def step(self, valuation: Mapping[str, bool]) -> bool:
        """Consume the valuation of step k+1 and return the root output."""
        k = self.k + 1
        outputs = self._outputs
        for index, node in enumerate(self.nodes):
            outputs[index] = node.update(k, outputs, valuation)
        self.k = k
        return outputs[self.dag.root]

    def run(self, trace: Iterable[Mapping[str, bool]]) -> Iterator[bool]:
        for valuation in trace:
            yield self.step(valuation)

    def reset(self) -> None:
        """Back to step 0. The compiled structure and the strong flag are kept."""
        for node in self.nodes:
            node.reset(self.strong_historically)
        self.k = 0
        self._outputs = [False] * len(self.nodes)

    def set_strong_historically(self, enabled: bool) -> None:
        """Assume the operand of historically was false before step 1."""
        if self.k > 0:
            raise NetworkStateError(
                f"strong historically must be chosen before the first step (now at step {self.k})"
            )
        self.strong_historically = bool(enabled)
        self.reset()

    def output_of(self, f: Formula) -> bool:
        """Output of subformula ``f`` at the current step."""
        return self._outputs[self.dag.index(f)]

    def state_of(self, f: Formula):
        """State of subformula ``f``: a Boolean, an ``IntIntervalSet`` copy, or None."""
        return self.nodes[self.dag.index(f)].state()

    def timed_state_size(self) -> int:
        """Total number of intervals held by timed nodes."""
        return sum(len(node.window) for node in self._timed)

    def __repr__(self) -> str:
        return f"DiscreteNetwork({self.formula}, nodes={len(self.nodes)}, k={self.k})"


def compile_discrete(f: Formula) -> DiscreteNetwork:
    net = DiscreteNetwork(build_dag(f))
    logger.debug(
        "compiled discrete network for {}: {} nodes, {} timed",
        f,
        len(net.nodes),
        len(net._timed),
    )
    return net
