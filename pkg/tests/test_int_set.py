import random

import pytest

from intervals.int_set import INF, IntIntervalSet, int_add, int_contains, int_prune
from schema.errors import IntervalError


class TestIntIntervalSet:
    """Closed integer intervals kept disjoint and non-adjacent."""

    def test_adjacent_intervals_merge(self):
        s = IntIntervalSet()
        s.add(2, 3)
        s.add(4, 7)
        assert str(s) == "{[2,7]}"

    def test_disjoint_intervals_stay_apart(self):
        s = IntIntervalSet([(5, 6), (2, 3)])
        assert s.intervals == ((2, 3), (5, 6))

    def test_add_swallows_covered_intervals(self):
        s = IntIntervalSet([(1, 2), (5, 6), (9, 9), (12, 14)])
        s.add(2, 8)
        assert s == IntIntervalSet.parse("{[1,9],[12,14]}")

    def test_unbounded_interval(self):
        s = IntIntervalSet([(3, 4)])
        s.add(6, INF)
        assert str(s) == "{[3,4],[6,inf]}"
        assert s.contains(10**9)

    def test_prune_drops_the_past(self):
        s = IntIntervalSet.parse("{[2,3],[6,inf]}")
        s.prune(3)
        assert s == IntIntervalSet.parse("{[3,3],[6,inf]}")
        s.prune(7)
        assert s == IntIntervalSet.parse("{[7,inf]}")

    def test_contains(self):
        s = IntIntervalSet.parse("{[5,5],[7,8]}")
        assert [k for k in range(4, 10) if k in s] == [5, 7, 8]

    def test_replace(self):
        s = IntIntervalSet.parse("{[5,5],[7,8]}")
        s.replace(9, 10)
        assert s.intervals == ((9, 10),)

    def test_empty_interval_is_rejected(self):
        with pytest.raises(IntervalError):
            IntIntervalSet().add(4, 3)

    @pytest.mark.parametrize("text", ["{[2,3]", "{[2,3],x}", "[2,3]"])
    def test_malformed_text(self, text):
        with pytest.raises(IntervalError):
            IntIntervalSet.parse(text)

    def test_empty_set_spellings(self):
        assert IntIntervalSet.parse("∅") == IntIntervalSet.parse("{}") == IntIntervalSet()
        assert not IntIntervalSet()


class TestPureHelpers:
    def test_helpers_leave_the_input_alone(self):
        s = IntIntervalSet.parse("{[2,3]}")
        assert str(int_add(s, (4, 5))) == "{[2,5]}"
        assert str(int_prune(s, 3)) == "{[3,3]}"
        assert str(s) == "{[2,3]}"
        assert int_contains(s, 2)


def assert_canonical(s):
    pairs = s.intervals
    assert all(lo <= hi for lo, hi in pairs)
    assert all(hi + 1 < lo for (_, hi), (lo, _) in zip(pairs, pairs[1:]))


class TestRandomInsertions:
    """Random add and prune sequences against a plain set of integers."""

    def test_membership_matches_a_bitset(self):
        rng = random.Random(17)
        for _ in range(200):
            s = IntIntervalSet()
            members = set()
            for _ in range(rng.randint(1, 12)):
                lo = rng.randint(0, 40)
                hi = lo + rng.randint(0, 5)
                s.add(lo, hi)
                members.update(range(lo, hi + 1))
                assert_canonical(s)
            assert [k for k in range(-2, 50) if k in s] == sorted(members)

    def test_prune_matches_a_bitset(self):
        rng = random.Random(18)
        for _ in range(200):
            s = IntIntervalSet()
            members = set()
            for _ in range(rng.randint(1, 8)):
                lo = rng.randint(0, 40)
                hi = lo + rng.randint(0, 5)
                s.add(lo, hi)
                members.update(range(lo, hi + 1))
            k = rng.randint(0, 48)
            s.prune(k)
            assert_canonical(s)
            assert [j for j in range(-2, 50) if j in s] == sorted(m for m in members if m >= k)

    def test_add_then_prune_grows_by_at_most_one_interval(self):
        rng = random.Random(19)
        s = IntIntervalSet()
        for k in range(1, 500):
            before = len(s)
            lo = k + rng.randint(0, 6)
            s = int_prune(int_add(s, (lo, lo + rng.randint(0, 3))), k)
            assert len(s) <= before + 1
            assert_canonical(s)

    def test_unbounded_tail_stays_last(self):
        rng = random.Random(20)
        for _ in range(100):
            s = IntIntervalSet([(rng.randint(10, 30), INF)])
            for _ in range(6):
                lo = rng.randint(0, 40)
                s.add(lo, lo + rng.randint(0, 4))
            assert all(hi != INF for _, hi in s.intervals[:-1])
            assert s.intervals[-1][1] == INF
