"""
Benchmark trace generators.

``pandq`` keeps p and q true everywhere, ``delay`` keeps p true and pulses q
at every odd step, ``qpr`` draws p, q and r independently per step from a
seeded generator. Rows are shared dict objects, one per distinct valuation,
so long traces stay cheap to hold in memory.
"""

import random
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from schema.models import BenchSpec

Valuation = Dict[str, bool]


def trace_names(spec: BenchSpec) -> Tuple[str, ...]:
    return ("p", "q", "r") if spec.kind == "qpr" else ("p", "q")


def generate_rows(spec: BenchSpec) -> Iterator[Valuation]:
    """``spec.length`` valuations; each drawn value is held for ``spec.stutter`` steps."""
    names = trace_names(spec)
    interned: Dict[Tuple[bool, ...], Valuation] = {}

    def row(*values: bool) -> Valuation:
        shared = interned.get(values)
        if shared is None:
            shared = interned[values] = dict(zip(names, values))
        return shared

    rng = random.Random(spec.seed)
    current = None
    for step in range(spec.length):
        run, offset = divmod(step, spec.stutter)
        if offset == 0:
            if spec.kind == "pandq":
                current = row(True, True)
            elif spec.kind == "delay":
                current = row(True, run % 2 == 0)
            else:
                current = row(
                    rng.random() < spec.p_density,
                    rng.random() < spec.q_density,
                    rng.random() < spec.r_density,
                )
        yield current


def dense_rows(
    rows: Iterable[Valuation], names: Sequence[str], max_run: int
) -> Iterator[Tuple[int, Tuple[bool, ...]]]:
    """Dense rendition of a discrete trace: step ``k`` holds on ``(k-1, k)``.

    Consecutive equal valuations are merged into one row covering at most
    ``max_run`` time units.
    """
    previous = None
    run = 0
    t = 0
    for row in rows:
        values = tuple(row[name] for name in names)
        if previous is not None and (values != previous or run == max_run):
            yield t, previous
            run = 0
        previous = values
        run += 1
        t += 1
    if previous is not None:
        yield t, previous


def collect(spec: BenchSpec) -> List[Valuation]:
    return list(generate_rows(spec))
