"""
Dense-time network over point-free behaviors, fed chunk by chunk.

Formulas are desugared to the since fragment before compilation. Every
``feed_chunk`` call returns the root's true periods inside the chunk span;
the since states carry pending truths across chunk boundaries.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Optional, Type

from loguru import logger

from intervals.chunk import Chunk
from intervals.period_set import EMPTY, PeriodSet, Time, format_time, to_time
from logic.dag import SubformulaDag, build_dag
from logic.desugar import desugar_for_dense
from logic.formula import And, Constant, Formula, Implies, Not, Or, Prop, Since, propositions
from networks.dense_nodes import (
    AndNode,
    ConstantNode,
    DenseNode,
    ImpliesNode,
    NotNode,
    OrNode,
    PropNode,
    SegmentHook,
    SinceNode,
)
from schema.errors import ChunkAlignmentError, StreamClosedError

_NODES: Dict[type, Type[DenseNode]] = {
    Constant: ConstantNode,
    Prop: PropNode,
    Not: NotNode,
    And: AndNode,
    Or: OrNode,
    Implies: ImpliesNode,
    Since: SinceNode,
}


class DenseNetwork:
    def __init__(self, dag: SubformulaDag, t0: Time = 0):
        self.dag = dag
        self.nodes: List[DenseNode] = [
            _NODES[type(f)](f, children) for f, children in zip(dag.nodes, dag.children)
        ]
        self.propositions = propositions(dag.formula)
        self.t0 = to_time(t0)
        self.clock = self.t0
        self.finished = False
        self._since = [node for node in self.nodes if isinstance(node, SinceNode)]

    @property
    def formula(self) -> Formula:
        return self.dag.formula

    def feed_chunk(self, chunk: Chunk, on_segment: Optional[SegmentHook] = None) -> PeriodSet:
        """Evaluate the next chunk; it must start at the current clock.

        ``on_segment(formula, segment, state)`` is called after each local
        step of every since node, with the state after that step.
        """
        if self.finished:
            raise StreamClosedError("chunk fed after finish()")
        if chunk.begin != self.clock:
            raise ChunkAlignmentError(
                f"chunk starts at {format_time(chunk.begin)} but the network clock is at "
                f"{format_time(self.clock)}"
            )
        span = chunk.span
        outputs: List[PeriodSet] = [EMPTY] * len(self.nodes)
        for index, node in enumerate(self.nodes):
            outputs[index] = node.evaluate(span, outputs, chunk, on_segment)
        self.clock = chunk.end
        logger.debug(
            "chunk ({},{}) consumed, {} pending periods",
            format_time(span[0]),
            format_time(span[1]),
            self.pending_size(),
        )
        return outputs[self.dag.root]

    def run(self, chunks: Iterable[Chunk]) -> Iterator[PeriodSet]:
        for chunk in chunks:
            yield self.feed_chunk(chunk)

    def finish(self) -> None:
        """Mark the end of the stream. The clock is left where it is."""
        if self.finished:
            raise StreamClosedError("finish() called twice")
        self.finished = True

    def reset(self) -> None:
        for node in self.nodes:
            node.reset()
        self.clock = self.t0
        self.finished = False

    def state_of(self, f: Formula) -> Optional[PeriodSet]:
        """Pending periods of a since subformula (after desugaring)."""
        return self.nodes[self.dag.index(f)].state()

    def pending_size(self) -> int:
        """Total number of periods held by since nodes."""
        return sum(len(node.pending) for node in self._since)

    def __repr__(self) -> str:
        return f"DenseNetwork({self.formula}, nodes={len(self.nodes)}, clock={format_time(self.clock)})"


def compile_dense(f: Formula, t0: Time = 0) -> DenseNetwork:
    net = DenseNetwork(build_dag(desugar_for_dense(f)), t0)
    logger.debug("compiled dense network for {}: {} nodes", f, len(net.nodes))
    return net
