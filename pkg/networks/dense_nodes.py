"""
Node types of the dense-time (point-free) network.

A node turns the output behaviors of its children over the current chunk span
into its own output behavior, as a ``PeriodSet`` inside that span.
"""

from __future__ import annotations

from typing import Callable, List, Optional, Tuple

from intervals.chunk import Chunk, Segment, synchronize_periods
from intervals.period_set import EMPTY, PeriodSet, Span
from logic.formula import Formula, effective_bound
from schema.errors import MissingPropositionError

SegmentHook = Callable[[Formula, Segment, PeriodSet], None]


class DenseNode:
    def __init__(self, formula: Formula, children: Tuple[int, ...]):
        self.formula = formula
        self.children = children

    def evaluate(
        self,
        span: Span,
        outputs: List[PeriodSet],
        chunk: Chunk,
        on_segment: Optional[SegmentHook] = None,
    ) -> PeriodSet:
        raise NotImplementedError

    def reset(self) -> None:
        """Restore the initial state."""

    def state(self) -> Optional[PeriodSet]:
        return None

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.formula})"


class ConstantNode(DenseNode):
    def evaluate(self, span, outputs, chunk, on_segment=None):
        return PeriodSet.single(*span) if self.formula.value else EMPTY


class PropNode(DenseNode):
    def __init__(self, formula, children):
        super().__init__(formula, children)
        self.name = formula.name

    def evaluate(self, span, outputs, chunk, on_segment=None):
        if self.name not in chunk.names:
            raise MissingPropositionError(self.name)
        return chunk.true_periods(self.name)


class NotNode(DenseNode):
    def evaluate(self, span, outputs, chunk, on_segment=None):
        return outputs[self.children[0]].complement(span)


class AndNode(DenseNode):
    def evaluate(self, span, outputs, chunk, on_segment=None):
        return outputs[self.children[0]].intersect(outputs[self.children[1]])


class OrNode(DenseNode):
    def evaluate(self, span, outputs, chunk, on_segment=None):
        return outputs[self.children[0]].union(outputs[self.children[1]])


class ImpliesNode(DenseNode):
    def evaluate(self, span, outputs, chunk, on_segment=None):
        left = outputs[self.children[0]].complement(span)
        return left.union(outputs[self.children[1]])


class SinceNode(DenseNode):
    """Timed since over open bounds ``(a, b)``; untimed since uses ``(0, inf)``.

    The state ``V`` holds the future periods already known to satisfy the
    formula. It is carried from one chunk to the next.
    """

    def __init__(self, formula, children):
        super().__init__(formula, children)
        bound = effective_bound(formula.bound)
        self.a = bound.lower
        self.b = bound.upper
        # no distance lies strictly inside (a, a)
        self.empty_window = self.a == self.b
        self.pending = EMPTY

    def evaluate(self, span, outputs, chunk, on_segment=None):
        left = outputs[self.children[0]]
        right = outputs[self.children[1]]
        a, b = self.a, self.b
        pieces = []
        state = self.pending
        for segment in synchronize_periods(span, left, right):
            t, t2 = segment.begin, segment.end
            y1, y2 = segment.values
            state = state.after(t)
            if self.empty_window:
                state = EMPTY
            elif y1 and y2:
                state = state.union(PeriodSet._canonical(((t + a, t2 + b),)))
            elif y2:
                state = PeriodSet._canonical(((t2 + a, t2 + b),))
            elif not y1:
                state = EMPTY
            if on_segment is not None:
                on_segment(self.formula, segment, state)
            pieces.extend(state.clip(t, t2))
        self.pending = state
        return PeriodSet(pieces)

    def reset(self):
        self.pending = EMPTY

    def state(self):
        return self.pending

