"""Inputs shared by the test modules, including the golden runs."""

from typing import Dict, List

from intervals.chunk import Chunk
from intervals.period_set import PeriodSet
from oracle.structures import DiscreteTrace, HomStructure


def bits(text: str) -> List[bool]:
    """``"TFFT"`` -> ``[True, False, False, True]``."""
    return [c == "T" for c in text]


def rows_of(columns: Dict[str, str]) -> List[Dict[str, bool]]:
    length = len(next(iter(columns.values())))
    return [{name: values[i] == "T" for name, values in columns.items()} for i in range(length)]


# dense since run: (end time, p, q) rows in four chunks
DENSE_SINCE_ROWS = (
    ((3, 0, 0), (7, 0, 1), (8, 1, 1), (30, 1, 0)),
    ((35, 1, 0), (38, 0, 0), (39, 0, 1), (47, 1, 0)),
    ((49, 1, 0), (63, 0, 0), (70, 1, 0), (75, 1, 1)),
    ((89, 1, 1), (99, 1, 0)),
)


def dense_since_chunks() -> List[Chunk]:
    chunks = []
    start = 0
    for block in DENSE_SINCE_ROWS:
        chunk = Chunk.from_rows(("p", "q"), [(t, (p, q)) for t, p, q in block], start)
        chunks.append(chunk)
        start = chunk.end
    return chunks


def structure(span_end, **periods: str) -> HomStructure:
    return HomStructure((0, span_end), {name: PeriodSet.parse(text) for name, text in periods.items()})


def trace(**columns: str) -> DiscreteTrace:
    return DiscreteTrace({name: tuple(bits(values)) for name, values in columns.items()})

