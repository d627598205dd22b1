"""
Timing harness for the benchmark properties.

Traces are generated before the clock starts; the measured loop covers
stepping (or chunk feeding) and the state-size reading after each step.
"""

import csv
import statistics
import time
from pathlib import Path
from typing import Iterable, List, TextIO

from loguru import logger
from rich.table import Table

from logic.formula import TimeModel
from logic.parser import parse
from networks.dense_network import compile_dense
from networks.discrete_network import compile_discrete
from schema.models import BenchResult, BenchSpec
from tools.csv_traces import chunk_rows_of
from tools.trace_gen import dense_rows, generate_rows, trace_names


def _time_discrete(spec: BenchSpec):
    rows = list(generate_rows(spec))
    net = compile_discrete(parse(spec.formula_text))
    peak = 0
    true_outputs = 0
    started = time.perf_counter()
    for row in rows:
        if net.step(row):
            true_outputs += 1
        size = net.timed_state_size()
        if size > peak:
            peak = size
    return time.perf_counter() - started, peak, true_outputs


def _time_dense(spec: BenchSpec):
    names = trace_names(spec)
    chunks = list(
        chunk_rows_of(names, dense_rows(generate_rows(spec), names, spec.max_run), spec.chunk_rows)
    )
    net = compile_dense(parse(spec.formula_text, TimeModel.DENSE))
    peak = 0
    true_time = 0
    started = time.perf_counter()
    for chunk in chunks:
        for s, e in net.feed_chunk(chunk):
            true_time += e - s
        size = net.pending_size()
        if size > peak:
            peak = size
    return time.perf_counter() - started, peak, int(true_time)


def run_bench(spec: BenchSpec, repeat: int = 1) -> BenchResult:
    """Run the property ``repeat`` times and keep the median wall time."""
    timer = _time_dense if spec.mode == "dense" else _time_discrete
    samples = [timer(spec) for _ in range(max(1, repeat))]
    seconds = statistics.median(s for s, _, _ in samples)
    _, peak, true_outputs = samples[0]
    result = BenchResult(
        label=spec.label,
        formula=spec.formula_text,
        mode=spec.mode,
        length=spec.length,
        chunk_rows=spec.chunk_rows,
        stutter=spec.stutter,
        max_run=spec.max_run,
        seconds=seconds,
        steps_per_second=spec.length / seconds if seconds > 0 else 0.0,
        peak_state=peak,
        true_outputs=true_outputs,
    )
    logger.info(
        "{} [{}] {} steps in {:.3f}s, peak state {}",
        result.label,
        result.mode,
        result.length,
        result.seconds,
        result.peak_state,
    )
    return result


def write_bench_rows(stream: TextIO, results: Iterable[BenchResult], header: bool = True) -> None:
    writer = csv.DictWriter(stream, fieldnames=list(BenchResult.model_fields), lineterminator="\n")
    if header:
        writer.writeheader()
    for result in results:
        writer.writerow(result.model_dump())


def write_bench_csv(path: Path, results: Iterable[BenchResult]) -> None:
    """Append results to a CSV report, writing the header for a new file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fresh = not path.exists() or path.stat().st_size == 0
    with path.open("a", newline="", encoding="utf-8") as f:
        write_bench_rows(f, results, header=fresh)


def bench_table(results: List[BenchResult]) -> Table:
    table = Table(title="Benchmark results")
    for column in ("property", "mode", "steps", "seconds", "steps/s", "peak state", "true"):
        table.add_column(column, justify="left" if column in ("property", "mode") else "right")
    for r in results:
        table.add_row(
            r.label,
            r.mode if r.mode == "discrete" else f"dense/{r.chunk_rows}",
            str(r.length),
            f"{r.seconds:.3f}",
            f"{r.steps_per_second:,.0f}",
            str(r.peak_state),
            str(r.true_outputs),
        )
    return table
