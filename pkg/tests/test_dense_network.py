from fractions import Fraction

import pytest

from intervals.chunk import Chunk, constant_chunk
from intervals.period_set import EMPTY, PeriodSet
from logic.formula import TimeModel
from logic.parser import parse
from networks.dense_network import compile_dense
from schema.errors import (
    ChunkAlignmentError,
    MissingPropositionError,
    StreamClosedError,
    UnsupportedInDenseError,
)

P = PeriodSet.parse


def dense(text):
    return parse(text, TimeModel.DENSE)


def feed_all(text, chunks, t0=0):
    net = compile_dense(dense(text), t0)
    outputs = [net.feed_chunk(c) for c in chunks]
    net.finish()
    return outputs


class TestDenseSinceRun:
    """Four chunks through ``p since[18:24] q``."""

    def test_outputs_per_chunk(self, dense_since):
        outputs = feed_all("p since[18:24] q", dense_since)
        assert outputs == [P("{(25,30)}"), P("{(30,32)}"), EMPTY, P("{(88,99)}")]

    def test_states_inside_the_last_chunk(self, dense_since):
        f = dense("p since[18:24] q")
        net = compile_dense(f)
        for chunk in dense_since[:3]:
            net.feed_chunk(chunk)
        seen = []
        net.feed_chunk(dense_since[3], lambda node, segment, state: seen.append((segment.period, state)))
        assert seen == [((75, 89), P("{(88,113)}")), ((89, 99), P("{(89,113)}"))]

    def test_rechunking_does_not_change_the_behavior(self, dense_since):
        whole = Chunk(("p", "q"), tuple(s for c in dense_since for s in c.segments))
        merged = EMPTY
        for output in feed_all("p since[18:24] q", whole.split([Fraction(51, 2), 31, 60, 93])):
            merged = merged | output
        assert merged == P("{(25,32),(88,99)}")

    def test_clock_follows_the_chunks(self, dense_since):
        net = compile_dense(dense("p since[18:24] q"))
        net.feed_chunk(dense_since[0])
        assert net.clock == 30
        assert net.pending_size() == 1


class TestDenseOperators:
    def test_boolean_operators(self):
        chunk = Chunk.from_period_sets((0, 20), {"p": P("{(2,4),(7,10),(11,17)}"), "q": P("{(3,8),(14,15)}")})
        assert feed_all("!p", [chunk]) == [P("{(0,2),(4,7),(10,11),(17,20)}")]
        assert feed_all("p && q", [chunk]) == [P("{(3,4),(7,8),(14,15)}")]
        assert feed_all("p || q", [chunk]) == [P("{(2,10),(11,17)}")]
        assert feed_all("p -> q", [chunk]) == [P("{(0,2),(3,8),(10,11),(14,15),(17,20)}")]

    def test_abutting_periods_merge(self):
        chunk = Chunk.from_period_sets((0, 9), {"p": P("{(3,4)}"), "q": P("{(4,6)}")})
        assert feed_all("p || q", [chunk]) == [P("{(3,6)}")]

    def test_untimed_once(self):
        chunk = Chunk.from_period_sets((0, 10), {"p": P("{(2,3)}")})
        assert feed_all("once p", [chunk]) == [P("{(2,10)}")]

    def test_bounded_once_uses_open_bounds(self):
        chunk = Chunk.from_period_sets((0, 10), {"p": P("{(2,3)}")})
        assert feed_all("once[1:2] p", [chunk]) == [P("{(3,5)}")]

    def test_equal_bounds_give_an_empty_window(self):
        chunk = Chunk.from_period_sets((0, 10), {"p": P("{(0,10)}"), "q": P("{(2,3)}")})
        assert feed_all("p since[2:2] q", [chunk]) == [EMPTY]

    def test_historically(self):
        chunk = Chunk.from_period_sets((0, 10), {"p": P("{(0,4),(5,10)}")})
        assert feed_all("historically p", [chunk]) == [P("{(0,4)}")]

    def test_fractional_bounds_and_origin(self):
        chunk = Chunk.from_rows(("p",), [("1.5", (1,)), ("4", (0,))], t0=1)
        assert feed_all("once[0.5:1] p", [chunk], t0=1) == [P("{(1.5,2.5)}")]


class TestDenseLifecycle:
    def test_misaligned_chunk(self):
        net = compile_dense(dense("p"))
        with pytest.raises(ChunkAlignmentError):
            net.feed_chunk(constant_chunk(("p",), (1, 2), (True,)))

    def test_feed_after_finish(self):
        net = compile_dense(dense("p"))
        net.finish()
        with pytest.raises(StreamClosedError):
            net.feed_chunk(constant_chunk(("p",), (0, 2), (True,)))
        with pytest.raises(StreamClosedError):
            net.finish()

    def test_missing_proposition(self):
        net = compile_dense(dense("p && q"))
        with pytest.raises(MissingPropositionError):
            net.feed_chunk(constant_chunk(("p",), (0, 2), (True,)))

    def test_previously_is_rejected(self):
        with pytest.raises(UnsupportedInDenseError):
            compile_dense(dense("pre p"))

    def test_reset(self, dense_since):
        net = compile_dense(dense("p since[18:24] q"))
        first = list(net.run(dense_since))
        net.finish()
        net.reset()
        assert net.clock == 0 and not net.finished
        assert list(net.run(dense_since)) == first

    def test_state_of_since_node(self, dense_since):
        f = dense("p since[18:24] q")
        net = compile_dense(f)
        net.feed_chunk(dense_since[0])
        assert net.state_of(f) == P("{(25,32)}")
