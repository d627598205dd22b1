from .csv_traces import read_dense_chunks, read_discrete_rows, write_dense_csv, write_discrete_csv
from .pipeline import prefetch
from .trace_gen import dense_rows, generate_rows, trace_names
from .bench import run_bench, write_bench_csv
from .checker import DifferentialChecker, run_check, shipped_formulas

__all__ = [
    "DifferentialChecker",
    "dense_rows",
    "generate_rows",
    "prefetch",
    "read_dense_chunks",
    "read_discrete_rows",
    "run_bench",
    "run_check",
    "shipped_formulas",
    "trace_names",
    "write_bench_csv",
    "write_dense_csv",
    "write_discrete_csv",
]