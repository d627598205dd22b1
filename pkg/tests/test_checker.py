import pytest

from helpers import structure, trace
from intervals.period_set import EMPTY
from logic.formula import TimeModel
from logic.parser import parse
from networks.dense_nodes import SinceNode
from networks.discrete_nodes import TimedOnceNode
from schema.errors import BoundError, UnsupportedInDenseError
from tools.checker import (
    SHIPPED_FORMULAS,
    DifferentialChecker,
    dense_mismatch,
    discrete_mismatch,
    parse_check_formula,
    run_check,
    shipped_formulas,
    shrink_dense,
    shrink_discrete,
    write_report,
)


def broken_once(self, k, outputs, valuation):
    return False


def broken_since(self, span, outputs, chunk, on_segment=None):
    return EMPTY


class TestRunCheck:
    """Differential sessions over the shipped formulas."""

    def test_shipped_formulas_pass(self):
        report = run_check(shipped_formulas(), trials=3, seed=0)
        assert report.ok
        assert report.instances == 6 * len(SHIPPED_FORMULAS)
        assert report.formulas[0] == "((p || q) since !r)"

    def test_formulas_with_previously_skip_dense_trials(self):
        report = run_check([parse("pre p || q")], trials=4, seed=1)
        assert report.ok
        assert report.instances == 4

    def test_decimal_bounds_skip_discrete_trials(self):
        f = parse_check_formula("once[0.5:1.5] p")
        report = run_check([f], trials=4, seed=2)
        assert report.ok
        assert report.instances == 4

    def test_integral_bounds_parse_as_in_discrete_time(self):
        assert parse_check_formula("p since[2:3] q") == parse("p since[2:3] q")
        with pytest.raises(UnsupportedInDenseError):
            parse_check_formula("pre p since[0.5:1] q")
        with pytest.raises(BoundError):
            parse_check_formula("once[3:1] p")

    def test_report_round_trip(self, tmp_path):
        report = run_check([parse("p")], trials=1)
        path = write_report(report, tmp_path / "nested" / "check.json")
        assert path.exists()
        assert '"mismatches": []' in path.read_text(encoding="utf-8")


class TestShrinking:
    def test_discrete_counterexample_is_minimized(self, monkeypatch):
        monkeypatch.setattr(TimedOnceNode, "update", broken_once)
        f = parse("once[0:2] p")
        w = trace(p="FFTFTTFF", q="TTTTTTTT")
        assert discrete_mismatch(f, w) == (3, False, True)
        small = shrink_discrete(f, w, False)
        assert small.length == 3
        assert small.columns["p"] == (False, False, True)
        assert small.columns["q"] == (False, False, False)

    def test_dense_counterexample_is_a_prefix(self, monkeypatch):
        monkeypatch.setattr(SinceNode, "evaluate", broken_since)
        f = parse("once p", TimeModel.DENSE)
        h = structure(10, p="{(2,3)}")
        assert dense_mismatch(f, h, [h.to_chunk()]) is not None
        small, cuts = shrink_dense(f, h, [5])
        assert small.span == (0, 3)
        assert cuts == []

    def test_checker_reports_the_minimized_trace(self, monkeypatch):
        monkeypatch.setattr(TimedOnceNode, "update", broken_once)
        checker = DifferentialChecker(seed=4)
        f = parse("once[0:3] p")
        mismatch = None
        for _ in range(20):
            mismatch = checker.check_discrete(f)
            if mismatch is not None:
                break
        assert mismatch is not None
        assert mismatch.check == "discrete"
        assert sum(row["p"] for row in mismatch.trace) == 1

    def test_dense_checker_reports_cuts(self, monkeypatch):
        monkeypatch.setattr(SinceNode, "evaluate", broken_since)
        checker = DifferentialChecker(seed=5)
        f = parse("once p", TimeModel.DENSE)
        mismatch = None
        for _ in range(20):
            mismatch = checker.check_dense(f)
            if mismatch is not None:
                break
        assert mismatch is not None
        assert mismatch.check == "dense"
        assert mismatch.trace[-1]["p"] == 1
