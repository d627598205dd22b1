"""
Differential checking of the compiled networks against the reference evaluators.

Discrete trials run a random trace through the network and compare every
output with the pointy evaluator. Dense trials run a random behavior through
the network under several chunkings and compare the merged output with the
point-free evaluator. Mismatches are shrunk before they are reported.
"""

import random
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from intervals.chunk import Chunk
from intervals.period_set import PeriodSet, Time, format_time
from logic.desugar import desugar_for_dense
from logic.formula import Formula, Pre, TimeModel, bounds_of, propositions
from logic.parser import parse
from networks.dense_network import compile_dense
from networks.discrete_network import compile_discrete
from oracle.pointfree import eval_pointfree
from oracle.pointy import eval_pointy_discrete_trace
from oracle.structures import DiscreteTrace, HomStructure
from schema.models import BenchSpec, CheckMismatch, CheckReport
from tools.random_instances import PROPS, random_cuts, random_structure, random_trace

SHIPPED_FORMULAS: Tuple[str, ...] = (
    "(p || q) since !r",
    "once[1:2] once[1:2] (p || q)",
    "historically[1:2] p",
    "p since[2:3] q",
    "p since[18:24] q",
    "!p",
    "p && q",
    "p || q",
    BenchSpec(kind="qpr", a=1, b=3, length=1).formula_text,
    BenchSpec(kind="pandq", a=1, b=3, length=1).formula_text,
    BenchSpec(kind="delay", b=3, length=1).formula_text,
)


def _contains_pre(f: Formula) -> bool:
    return isinstance(f, Pre) or any(_contains_pre(c) for c in f.children())


def _integral(f: Formula) -> bool:
    return all(bound.is_integral for bound in bounds_of(f))


def _trace_names(f: Formula) -> Tuple[str, ...]:
    return propositions(f) or PROPS[:1]


def discrete_mismatch(
    f: Formula, trace: DiscreteTrace, strong_historically: bool = False
) -> Optional[Tuple[int, bool, bool]]:
    """First step where network and reference differ, as ``(step, network, reference)``."""
    net = compile_discrete(f)
    net.set_strong_historically(strong_historically)
    expected = eval_pointy_discrete_trace(f, trace, strong_historically=strong_historically)
    for step, (row, want) in enumerate(zip(trace.rows(), expected), start=1):
        got = net.step(row)
        if got != want:
            return step, got, want
    return None


def shrink_discrete(f: Formula, trace: DiscreteTrace, strong_historically: bool) -> DiscreteTrace:
    """Cut the trace at the first mismatch, then clear true values while it persists."""
    found = discrete_mismatch(f, trace, strong_historically)
    if found is None:
        return trace
    columns = {name: list(values) for name, values in trace.prefix(found[0]).columns.items()}
    for name, values in columns.items():
        for i, value in enumerate(values):
            if not value:
                continue
            values[i] = False
            if discrete_mismatch(f, DiscreteTrace(columns), strong_historically) is None:
                values[i] = True
    return DiscreteTrace(columns)


def dense_mismatch(f: Formula, h: HomStructure, chunks: Sequence[Chunk]) -> Optional[str]:
    net = compile_dense(f, h.span[0])
    got = PeriodSet()
    for chunk in chunks:
        got = got | net.feed_chunk(chunk)
    net.finish()
    expected = eval_pointfree(f, h)
    if got != expected:
        return f"network {got}, reference {expected}"
    return None


def shrink_dense(
    f: Formula, h: HomStructure, cuts: Sequence[Time]
) -> Tuple[HomStructure, List[Time]]:
    """Shortest prefix of the behavior, in segments, that still mismatches."""
    whole = h.to_chunk()
    for segment in whole.segments:
        prefix = whole.slice(whole.begin, segment.end)
        inner = [c for c in cuts if c < segment.end]
        candidate = HomStructure.from_chunks([prefix])
        if dense_mismatch(f, candidate, prefix.split(inner)) is not None:
            return candidate, inner
    return h, list(cuts)


def _dense_rows(h: HomStructure) -> List[dict]:
    chunk = h.to_chunk()
    return [
        {"time": format_time(s.end), **{n: int(v) for n, v in zip(chunk.names, s.values)}}
        for s in chunk.segments
    ]


class DifferentialChecker:
    """Random differential trials for one seed."""

    def __init__(
        self,
        seed: int = 0,
        max_length: int = 30,
        max_span: int = 50,
        rechunkings: int = 3,
    ):
        self.rng = random.Random(seed)
        self.max_length = max_length
        self.max_span = max_span
        self.rechunkings = rechunkings
        self.instances = 0

    def check_discrete(self, f: Formula) -> Optional[CheckMismatch]:
        trace = random_trace(self.rng, self.rng.randint(1, self.max_length), _trace_names(f))
        strong = self.rng.random() < 0.5
        self.instances += 1
        found = discrete_mismatch(f, trace, strong)
        if found is None:
            return None
        small = shrink_discrete(f, trace, strong)
        step, got, want = discrete_mismatch(f, small, strong) or found
        flag = " (strong historically)" if strong else ""
        return CheckMismatch(
            check="discrete",
            formula=str(f),
            detail=f"step {step}: network {int(got)}, reference {int(want)}{flag}",
            trace=[{name: int(v) for name, v in row.items()} for row in small.rows()],
        )

    def check_dense(self, f: Formula) -> Optional[CheckMismatch]:
        h = random_structure(self.rng, self.max_span, _trace_names(f))
        chunk = h.to_chunk()
        chunkings = [[]] + [
            random_cuts(self.rng, h.span, self.rng.randint(1, 6)) for _ in range(self.rechunkings)
        ]
        self.instances += 1
        for cuts in chunkings:
            if dense_mismatch(f, h, chunk.split(cuts)) is None:
                continue
            small, small_cuts = shrink_dense(f, h, cuts)
            return CheckMismatch(
                check="dense",
                formula=str(f),
                detail=dense_mismatch(f, small, small.to_chunk().split(small_cuts)) or "",
                trace=_dense_rows(small),
                cuts=[format_time(c) for c in small_cuts],
            )
        return None


def run_check(formulas: Sequence[Formula], trials: int, seed: int = 0) -> CheckReport:
    """Run ``trials`` discrete and dense trials per formula; stop a formula at its first mismatch.

    Formulas with decimal bounds get dense trials only, formulas with ``pre`` discrete only.
    """
    checker = DifferentialChecker(seed)
    report = CheckReport(seed=seed, trials=trials, formulas=[str(f) for f in formulas])
    for f in formulas:
        discrete = _integral(f)
        dense = not _contains_pre(f)
        for _ in range(trials):
            mismatch = checker.check_discrete(f) if discrete else None
            if mismatch is None and dense:
                mismatch = checker.check_dense(f)
            if mismatch is not None:
                logger.warning("{} check of {} failed: {}", mismatch.check, f, mismatch.detail)
                report.mismatches.append(mismatch)
                break
        logger.debug("checked {} ({} instances so far)", f, checker.instances)
    report.instances = checker.instances
    return report


def parse_check_formula(text: str) -> Formula:
    """Parse a formula for checking. Decimal bounds restrict it to the dense trials."""
    f = parse(text, TimeModel.DENSE)
    if not _integral(f):
        desugar_for_dense(f)
    return f


def shipped_formulas() -> List[Formula]:
    return [parse(text, TimeModel.DISCRETE) for text in SHIPPED_FORMULAS]


def write_report(report: CheckReport, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.model_dump_json(indent=2), encoding="utf-8")
    return path
