#!/usr/bin/env python3
"""
Past-MTL online monitor - command-line entry point.

    python app.py monitor --formula "once[1:2] (p || q)" --input trace.csv
    python app.py monitor --mode dense --formula "p since[18:24] q" --input dense.csv
    python app.py gen --property delay -b 600 --length 1000000 > delay.csv
    python app.py bench --property pandq -a 1 -b 600 --length 1000000
    python app.py check --trials 200 --seed 7

Data goes to stdout (or --output); logs and status lines go to stderr.
Exit codes: 0 ok, 1 check mismatch, 2 usage or formula error, 3 data error.
"""

import argparse
import contextlib
import sys
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError
from rich.console import Console

from intervals.period_set import format_time, to_time
from logic.formula import TimeModel
from logic.parser import parse
from networks.dense_network import compile_dense
from networks.discrete_network import compile_discrete
from schema.errors import (
    ChunkAlignmentError,
    FormulaError,
    FormulaSyntaxError,
    MonitorError,
    TraceDataError,
)
from schema.models import BenchSpec, RunConfig
from schema.settings import MonitorSettings
from tools.bench import bench_table, run_bench, write_bench_csv, write_bench_rows
from tools.checker import parse_check_formula, run_check, shipped_formulas, write_report
from tools.csv_traces import read_dense_chunks, read_discrete_rows, write_dense_csv, write_discrete_csv
from tools.pipeline import prefetch
from tools.trace_gen import dense_rows, generate_rows, trace_names

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DATA = 3

console = Console(stderr=True)


def status(message: str) -> None:
    console.print(message, markup=False, highlight=False)


def configure_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level)


@contextlib.contextmanager
def _open_input(path: str):
    if path == "-":
        yield sys.stdin
    else:
        with open(path, newline="", encoding="utf-8") as f:
            yield f


@contextlib.contextmanager
def _open_output(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as f:
            yield f


def cmd_monitor(cfg: RunConfig, settings: MonitorSettings) -> int:
    """Stream a CSV trace through the compiled formula."""
    if cfg.mode == "discrete":
        net = compile_discrete(parse(cfg.formula, TimeModel.DISCRETE))
        net.set_strong_historically(cfg.strong_historically)
        with _open_input(cfg.input) as source, _open_output(cfg.output) as sink:
            rows = read_discrete_rows(source, required=net.propositions)
            for row in prefetch(rows, settings.queue_size):
                sink.write("1\n" if net.step(row) else "0\n")
        logger.info("monitored {} steps", net.k)
        return EXIT_OK

    if cfg.strong_historically:
        logger.warning("--strong-historically has no effect in dense mode")
    t0 = to_time(cfg.t0)
    net = compile_dense(parse(cfg.formula, TimeModel.DENSE), t0)
    with _open_input(cfg.input) as source, _open_output(cfg.output) as sink:
        chunks = read_dense_chunks(source, cfg.chunk_rows, t0, required=net.propositions)
        for chunk in prefetch(chunks, settings.queue_size):
            for s, e in net.feed_chunk(chunk):
                sink.write(f"{format_time(s)},{format_time(e)}\n")
            sink.flush()
    net.finish()
    logger.info("monitored up to time {}", format_time(net.clock))
    return EXIT_OK


def cmd_gen(spec: BenchSpec, output: Optional[str]) -> int:
    names = trace_names(spec)
    with _open_output(output) as sink:
        if spec.mode == "dense":
            count = write_dense_csv(sink, names, dense_rows(generate_rows(spec), names, spec.max_run))
        else:
            count = write_discrete_csv(sink, names, generate_rows(spec))
    status(f"✅ {spec.label}: {count} rows generated")
    return EXIT_OK


def cmd_bench(spec: BenchSpec, repeat: int, report: Optional[str]) -> int:
    result = run_bench(spec, repeat)
    console.print(bench_table([result]))
    if report:
        write_bench_csv(Path(report), [result])
        status(f"✅ report appended to {report}")
    else:
        write_bench_rows(sys.stdout, [result])
    return EXIT_OK


def cmd_check(
    formula: Optional[str], trials: int, seed: int, report: Optional[str], settings: MonitorSettings
) -> int:
    formulas = [parse_check_formula(formula)] if formula else shipped_formulas()
    result = run_check(formulas, trials, seed)
    path = None
    if report:
        path = write_report(result, Path(report))
    elif not result.ok:
        path = write_report(result, Path(settings.report_dir) / f"check-{seed}.json")
    if result.ok:
        status(
            f"✅ {result.instances} instances over {len(formulas)} formulas, no mismatches"
        )
        return EXIT_OK
    for mismatch in result.mismatches:
        status(f"❌ {mismatch.check} mismatch for {mismatch.formula}: {mismatch.detail}")
    status(f"⚠️  counterexamples written to {path}")
    return EXIT_MISMATCH


def _decimal(text: str) -> Decimal:
    try:
        return Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}") from None


def _add_bench_arguments(p: argparse.ArgumentParser, settings: MonitorSettings) -> None:
    p.add_argument("--property", dest="kind", choices=("qpr", "pandq", "delay"), required=True)
    p.add_argument("-a", type=int, default=0, help="lower bound (qpr, pandq)")
    p.add_argument("-b", type=int, required=True, help="upper bound")
    p.add_argument("--length", type=int, default=1000, help="number of steps")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p-density", type=float, default=0.5)
    p.add_argument("--q-density", type=float, default=0.1)
    p.add_argument("--r-density", type=float, default=0.1)
    p.add_argument("--mode", choices=("discrete", "dense"), default="discrete")
    p.add_argument("--chunk-rows", type=int, default=settings.chunk_rows)
    p.add_argument("--stutter", type=int, default=1, help="steps each drawn valuation is held")
    p.add_argument("--max-run", type=int, default=1000, help="dense: longest merged stutter run")


def build_parser(settings: MonitorSettings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Online monitoring of past-MTL formulas")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    monitor = commands.add_parser("monitor", help="monitor a CSV trace")
    monitor.add_argument("--mode", choices=("discrete", "dense"), default="discrete")
    monitor.add_argument("--formula", required=True)
    monitor.add_argument("--input", default="-", help="CSV path or - for stdin")
    monitor.add_argument("--chunk-rows", type=int, default=settings.chunk_rows)
    monitor.add_argument("--t0", type=_decimal, default=Decimal(0), help="dense time origin")
    monitor.add_argument("--strong-historically", action="store_true")
    monitor.add_argument("--output", default=None)

    gen = commands.add_parser("gen", help="generate a benchmark trace")
    _add_bench_arguments(gen, settings)
    gen.add_argument("--output", default=None)

    bench = commands.add_parser("bench", help="time a benchmark property")
    _add_bench_arguments(bench, settings)
    bench.add_argument("--repeat", type=int, default=1, help="runs; the median time is kept")
    bench.add_argument("--report", default=None, help="CSV file the result is appended to")

    check = commands.add_parser("check", help="differential check against the reference semantics")
    check.add_argument("--formula", default=None, help="defaults to the shipped formulas")
    check.add_argument("--trials", type=int, default=settings.check_trials)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--report", default=None, help="JSON report path")
    return parser


def _bench_spec(args) -> BenchSpec:
    return BenchSpec(
        kind=args.kind,
        a=args.a,
        b=args.b,
        length=args.length,
        seed=args.seed,
        p_density=args.p_density,
        q_density=args.q_density,
        r_density=args.r_density,
        mode=args.mode,
        chunk_rows=args.chunk_rows,
        stutter=args.stutter,
        max_run=args.max_run,
    )


def main(argv: Optional[List[str]] = None) -> int:
    try:
        settings = MonitorSettings.from_env()
    except (ValidationError, ValueError) as e:
        status(f"❌ Invalid environment configuration: {e}")
        return EXIT_USAGE
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    configure_logging("DEBUG" if args.verbose else settings.log_level)

    try:
        if args.command == "monitor":
            cfg = RunConfig(
                mode=args.mode,
                formula=args.formula,
                input=args.input,
                chunk_rows=args.chunk_rows,
                t0=args.t0,
                strong_historically=args.strong_historically,
                output=args.output,
            )
            return cmd_monitor(cfg, settings)
        if args.command == "gen":
            return cmd_gen(_bench_spec(args), args.output)
        if args.command == "bench":
            return cmd_bench(_bench_spec(args), args.repeat, args.report)
        if args.trials < 0:
            status("❌ --trials must be >= 0")
            return EXIT_USAGE
        return cmd_check(args.formula, args.trials, args.seed, args.report, settings)
    except ValidationError as e:
        status(f"❌ Invalid arguments: {e}")
        return EXIT_USAGE
    except FormulaSyntaxError as e:
        status(f"❌ {e}")
        status(f"   {e.text}\n   {' ' * e.position}^")
        return EXIT_USAGE
    except FormulaError as e:
        status(f"❌ Formula error: {e}")
        return EXIT_USAGE
    except (TraceDataError, ChunkAlignmentError) as e:
        status(f"❌ Trace error: {e}")
        return EXIT_DATA
    except OSError as e:
        status(f"❌ Cannot read or write: {e}")
        return EXIT_DATA
    except MonitorError as e:
        status(f"❌ {e}")
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
