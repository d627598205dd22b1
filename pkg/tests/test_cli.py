import csv
import io
import json

import pytest

from app import EXIT_DATA, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from helpers import DENSE_SINCE_ROWS
from networks.discrete_nodes import TimedSinceNode


@pytest.fixture(autouse=True)
def quiet_settings(monkeypatch, tmp_path):
    monkeypatch.setenv("MTLMON_LOG_LEVEL", "ERROR")
    monkeypatch.setenv("MTLMON_REPORT_DIR", str(tmp_path / "reports"))


@pytest.fixture
def discrete_csv(tmp_path):
    path = tmp_path / "trace.csv"
    path.write_text("p,q\n1,0\n0,0\n0,0\n0,0\n0,1\n0,0\n", encoding="utf-8")
    return path


@pytest.fixture
def dense_csv(tmp_path):
    path = tmp_path / "dense.csv"
    lines = ["time,p,q"] + [f"{t},{p},{q}" for block in DENSE_SINCE_ROWS for t, p, q in block]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


class TestMonitorCommand:
    """Streaming a CSV trace through the monitor."""

    def test_discrete(self, discrete_csv, capsys):
        code = main(["monitor", "--formula", "once[1:2] once[1:2] (p || q)", "--input", str(discrete_csv)])
        assert code == EXIT_OK
        assert capsys.readouterr().out == "0\n0\n1\n1\n1\n0\n"

    def test_discrete_inline_reader(self, discrete_csv, capsys, monkeypatch):
        monkeypatch.setenv("MTLMON_QUEUE_SIZE", "0")
        code = main(["monitor", "--formula", "p since[2:3] q", "--input", str(discrete_csv)])
        assert code == EXIT_OK
        assert capsys.readouterr().out == "0\n0\n0\n0\n0\n0\n"

    def test_strong_historically(self, discrete_csv, capsys):
        args = ["monitor", "--formula", "historically[0:1] !q", "--input", str(discrete_csv)]
        assert main(args) == EXIT_OK
        weak = capsys.readouterr().out
        assert main(args + ["--strong-historically"]) == EXIT_OK
        strong = capsys.readouterr().out
        assert weak == "1\n1\n1\n1\n0\n0\n"
        assert strong == "0\n1\n1\n1\n0\n0\n"

    def test_dense(self, dense_csv, capsys):
        code = main(
            ["monitor", "--mode", "dense", "--formula", "p since[18:24] q", "--input", str(dense_csv), "--chunk-rows", "4"]
        )
        assert code == EXIT_OK
        assert capsys.readouterr().out == "25,30\n30,32\n88,99\n"

    def test_output_file(self, discrete_csv, tmp_path):
        out = tmp_path / "verdicts.txt"
        code = main(["monitor", "--formula", "p || q", "--input", str(discrete_csv), "--output", str(out)])
        assert code == EXIT_OK
        assert out.read_text(encoding="utf-8") == "1\n0\n0\n0\n1\n0\n"

    @pytest.mark.parametrize("mode", ["discrete", "dense"])
    def test_empty_trace(self, tmp_path, capsys, mode):
        empty = tmp_path / "empty.csv"
        empty.write_text("", encoding="utf-8")
        assert main(["monitor", "--mode", mode, "--formula", "p", "--input", str(empty)]) == EXIT_OK
        assert capsys.readouterr().out == ""


class TestMonitorErrors:
    def test_syntax_error(self, discrete_csv, capsys):
        assert main(["monitor", "--formula", "p since", "--input", str(discrete_csv)]) == EXIT_USAGE
        assert "syntax error" in capsys.readouterr().err

    def test_bound_error(self, discrete_csv):
        assert main(["monitor", "--formula", "once[3:1] p", "--input", str(discrete_csv)]) == EXIT_USAGE

    def test_previously_in_dense_mode(self, dense_csv):
        args = ["monitor", "--mode", "dense", "--formula", "pre p", "--input", str(dense_csv)]
        assert main(args) == EXIT_USAGE

    def test_bad_value(self, tmp_path, capsys):
        path = tmp_path / "bad.csv"
        path.write_text("p\n1\n2\n", encoding="utf-8")
        assert main(["monitor", "--formula", "p", "--input", str(path)]) == EXIT_DATA
        captured = capsys.readouterr()
        assert captured.out == "1\n"
        assert "row 2" in captured.err

    def test_missing_column(self, discrete_csv, capsys):
        assert main(["monitor", "--formula", "p && r", "--input", str(discrete_csv)]) == EXIT_DATA
        assert "missing columns: r" in capsys.readouterr().err

    def test_time_must_increase(self, tmp_path):
        path = tmp_path / "dense.csv"
        path.write_text("time,p\n2,1\n2,0\n", encoding="utf-8")
        args = ["monitor", "--mode", "dense", "--formula", "p", "--input", str(path)]
        assert main(args) == EXIT_DATA

    def test_missing_input_file(self, tmp_path):
        assert main(["monitor", "--formula", "p", "--input", str(tmp_path / "nope.csv")]) == EXIT_DATA

    def test_missing_formula_argument(self):
        assert main(["monitor"]) == EXIT_USAGE


class TestGenCommand:
    def test_delay_trace(self, capsys):
        assert main(["gen", "--property", "delay", "-b", "3", "--length", "6"]) == EXIT_OK
        assert capsys.readouterr().out == "p,q\n1,1\n1,0\n1,1\n1,0\n1,1\n1,0\n"

    def test_seeded_generation_is_deterministic(self, capsys):
        args = ["gen", "--property", "qpr", "-a", "1", "-b", "4", "--length", "40", "--seed", "9"]
        main(args)
        first = capsys.readouterr().out
        main(args)
        assert capsys.readouterr().out == first
        assert first.splitlines()[0] == "p,q,r"
        assert len(first.splitlines()) == 41

    def test_dense_trace_merges_runs(self, capsys):
        args = ["gen", "--property", "pandq", "-b", "2", "--length", "5", "--mode", "dense", "--max-run", "2"]
        assert main(args) == EXIT_OK
        assert capsys.readouterr().out == "time,p,q\n2,1,1\n4,1,1\n5,1,1\n"

    def test_reversed_bounds(self):
        assert main(["gen", "--property", "pandq", "-a", "5", "-b", "3", "--length", "5"]) == EXIT_USAGE


class TestBenchCommand:
    def test_csv_on_stdout(self, capsys):
        assert main(["bench", "--property", "pandq", "-a", "1", "-b", "3", "--length", "50"]) == EXIT_OK
        (row,) = csv.DictReader(io.StringIO(capsys.readouterr().out))
        assert row["label"] == "pandq(1,3)"
        assert row["formula"] == "p since[1:3] q"
        assert row["true_outputs"] == "49"

    def test_report_file(self, tmp_path):
        report = tmp_path / "bench.csv"
        args = ["bench", "--property", "delay", "-b", "6", "--length", "30", "--report", str(report)]
        assert main(args) == EXIT_OK
        assert main(args) == EXIT_OK
        lines = report.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 3
        assert lines[0].startswith("label,formula,mode")


class TestCheckCommand:
    def test_no_trials(self, capsys):
        assert main(["check", "--trials", "0"]) == EXIT_OK

    def test_negative_trials(self):
        assert main(["check", "--trials", "-1"]) == EXIT_USAGE

    def test_single_formula_report(self, tmp_path):
        report = tmp_path / "check.json"
        args = ["check", "--formula", "p since[2:3] q", "--trials", "10", "--seed", "1", "--report", str(report)]
        assert main(args) == EXIT_OK
        data = json.loads(report.read_text(encoding="utf-8"))
        assert data["mismatches"] == []
        assert data["instances"] == 20

    def test_decimal_bounds_get_dense_trials(self, tmp_path):
        report = tmp_path / "check.json"
        args = ["check", "--formula", "p since[0.5:1.5] q", "--trials", "5", "--report", str(report)]
        assert main(args) == EXIT_OK
        data = json.loads(report.read_text(encoding="utf-8"))
        assert data["mismatches"] == []
        assert data["instances"] == 5

    def test_pre_with_decimal_bounds_fits_no_time_model(self):
        assert main(["check", "--formula", "pre (p since[0.5:1] q)", "--trials", "1"]) == EXIT_USAGE

    def test_corrupted_update_is_caught(self, monkeypatch, tmp_path, capsys):
        monkeypatch.setattr(TimedSinceNode, "update", lambda self, k, outputs, valuation: False)
        code = main(["check", "--formula", "p since[0:3] q", "--trials", "50", "--seed", "2"])
        assert code == EXIT_MISMATCH
        report = tmp_path / "reports" / "check-2.json"
        data = json.loads(report.read_text(encoding="utf-8"))
        assert data["mismatches"][0]["check"] == "discrete"
        assert "mismatch" in capsys.readouterr().err
