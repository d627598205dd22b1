import pytest
from pydantic import ValidationError

from schema.models import BenchSpec
from tools.trace_gen import collect, dense_rows, generate_rows, trace_names


def spec(**overrides) -> BenchSpec:
    values = {"kind": "qpr", "a": 1, "b": 4, "length": 200, "seed": 3}
    values.update(overrides)
    return BenchSpec(**values)


class TestBenchSpec:
    """Benchmark properties and their formulas."""

    def test_formulas(self):
        assert spec(kind="pandq").formula_text == "p since[1:4] q"
        assert spec(kind="delay", b=600).formula_text == "p since[600:600] q"
        assert spec().formula_text == "historically ((r && !q && once q) -> (p since[1:4] q))"

    def test_labels(self):
        assert spec(kind="delay", b=6).label == "delay(6)"
        assert spec(kind="qpr", a=0, b=9).label == "qpr(0,9)"

    def test_lower_bound_above_upper(self):
        with pytest.raises(ValidationError):
            spec(kind="pandq", a=5, b=3)

    def test_delay_ignores_the_lower_bound(self):
        assert spec(kind="delay", a=5, b=3).formula_text == "p since[3:3] q"

    @pytest.mark.parametrize("field, value", [("length", 0), ("stutter", 0), ("q_density", 1.5), ("b", 0)])
    def test_field_ranges(self, field, value):
        with pytest.raises(ValidationError):
            spec(**{field: value})


class TestGenerators:
    def test_names(self):
        assert trace_names(spec()) == ("p", "q", "r")
        assert trace_names(spec(kind="delay")) == ("p", "q")

    def test_pandq_is_constant(self):
        rows = collect(spec(kind="pandq", length=5))
        assert rows == [{"p": True, "q": True}] * 5

    def test_delay_pulses_q(self):
        rows = collect(spec(kind="delay", b=6, length=6))
        assert [row["q"] for row in rows] == [True, False, True, False, True, False]
        assert all(row["p"] for row in rows)

    def test_qpr_is_seeded(self):
        assert collect(spec(seed=1)) == collect(spec(seed=1))
        assert collect(spec(seed=1)) != collect(spec(seed=2))

    def test_densities(self):
        rows = collect(spec(q_density=0.0, r_density=1.0))
        assert not any(row["q"] for row in rows)
        assert all(row["r"] for row in rows)

    def test_stutter_holds_each_valuation(self):
        rows = collect(spec(stutter=3, length=9))
        assert len(rows) == 9
        for start in (0, 3, 6):
            assert rows[start] is rows[start + 1] is rows[start + 2]

    def test_rows_are_shared(self):
        rows = collect(spec(kind="pandq", length=4))
        assert rows[0] is rows[3]

    def test_length_is_exact(self):
        assert sum(1 for _ in generate_rows(spec(length=17, stutter=5))) == 17


class TestDenseRows:
    def test_each_step_is_one_time_unit(self):
        rows = [{"p": True}, {"p": False}, {"p": True}]
        assert list(dense_rows(rows, ("p",), max_run=10)) == [(1, (True,)), (2, (False,)), (3, (True,))]

    def test_equal_runs_merge_up_to_max_run(self):
        rows = [{"p": True}] * 7 + [{"p": False}]
        assert list(dense_rows(rows, ("p",), max_run=3)) == [
            (3, (True,)),
            (6, (True,)),
            (7, (True,)),
            (8, (False,)),
        ]

    def test_empty_trace(self):
        assert list(dense_rows([], ("p",), max_run=3)) == []
