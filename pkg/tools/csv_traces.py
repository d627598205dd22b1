"""
CSV wire format of traces.

Discrete traces: a header row of proposition names, then one row of 0/1
values per step. Dense traces: a header ``time,p1,...``; the row
``t,v1,...`` says the values hold on ``(previous t, t)``, where the first
previous time is the origin ``t0``. Row numbers in errors count data rows
from 1 (the header is row 0).
"""

import csv
import math
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, TextIO, Tuple

from loguru import logger

from intervals.chunk import Chunk
from intervals.period_set import Time, format_time, to_time
from schema.errors import IntervalError, TraceDataError

_BITS = {"0": False, "1": True}


def _header(reader, required: Sequence[str], skip: int = 0) -> Optional[List[str]]:
    header = next(reader, None)
    while header is not None and not any(cell.strip() for cell in header):
        header = next(reader, None)
    if header is None:
        return None
    names = [cell.strip() for cell in header]
    if any(not name for name in names):
        raise TraceDataError("empty column name in header", row=0)
    if len(set(names)) != len(names):
        raise TraceDataError(f"duplicate column names in header {names}", row=0)
    missing = [name for name in required if name not in names[skip:]]
    if missing:
        raise TraceDataError(f"missing columns: {', '.join(missing)}", row=0)
    return names


def _bit(text: str, row: int, column: str) -> bool:
    value = _BITS.get(text.strip())
    if value is None:
        logger.warning("row {}: column '{}' holds {!r}", row, column, text)
        raise TraceDataError(f"column '{column}' must be 0 or 1, got {text!r}", row=row)
    return value


def _data_rows(reader, width: int) -> Iterator[Tuple[int, List[str]]]:
    for number, cells in enumerate(reader, start=1):
        if not any(cell.strip() for cell in cells):
            continue
        if len(cells) != width:
            raise TraceDataError(f"expected {width} values, got {len(cells)}", row=number)
        yield number, cells


def read_discrete_rows(stream: TextIO, required: Sequence[str] = ()) -> Iterator[Dict[str, bool]]:
    """Valuations of a discrete CSV trace, one dict per step.

    An empty input is an empty trace. ``required`` names columns that must
    be present; other columns are passed through.
    """
    reader = csv.reader(stream)
    names = _header(reader, required)
    if names is None:
        return
    for number, cells in _data_rows(reader, len(names)):
        yield {name: _bit(cell, number, name) for name, cell in zip(names, cells)}


def read_dense_rows(
    stream: TextIO, required: Sequence[str] = (), t0: Time = 0
) -> Tuple[Tuple[str, ...], Iterator[Tuple[Time, Tuple[bool, ...]]]]:
    """Signal names and an iterator of ``(t, values)`` rows of a dense CSV trace."""
    reader = csv.reader(stream)
    names = _header(reader, required, skip=1)
    if names is None:
        return (), iter(())
    if names[0] != "time":
        raise TraceDataError(f"first dense column must be 'time', got '{names[0]}'", row=0)
    signals = tuple(names[1:])

    def rows() -> Iterator[Tuple[Time, Tuple[bool, ...]]]:
        previous = to_time(t0)
        for number, cells in _data_rows(reader, len(names)):
            try:
                t = to_time(cells[0])
            except IntervalError as exc:
                raise TraceDataError(str(exc), row=number) from exc
            if math.isinf(t) or not t > previous:
                logger.warning("row {}: time {} after {}", number, cells[0], format_time(previous))
                raise TraceDataError(
                    f"time {cells[0].strip()} does not increase past {format_time(previous)}",
                    row=number,
                )
            yield t, tuple(_bit(cell, number, name) for name, cell in zip(signals, cells[1:]))
            previous = t

    return signals, rows()


def read_dense_chunks(
    stream: TextIO, chunk_rows: int, t0: Time = 0, required: Sequence[str] = ()
) -> Iterator[Chunk]:
    """Consecutive chunks of at most ``chunk_rows`` rows, the first starting at ``t0``."""
    names, rows = read_dense_rows(stream, required, t0)
    yield from chunk_rows_of(names, rows, chunk_rows, t0)


def chunk_rows_of(
    names: Sequence[str],
    rows: Iterable[Tuple[Time, Sequence[bool]]],
    chunk_rows: int,
    t0: Time = 0,
) -> Iterator[Chunk]:
    start = to_time(t0)
    batch = []
    for row in rows:
        batch.append(row)
        if len(batch) == chunk_rows:
            chunk = Chunk.from_rows(names, batch, start)
            start = chunk.end
            batch = []
            yield chunk
    if batch:
        yield Chunk.from_rows(names, batch, start)


def write_discrete_csv(stream: TextIO, names: Sequence[str], rows: Iterable[Dict[str, bool]]) -> int:
    """Write a discrete trace; returns the number of data rows."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(names)
    count = 0
    for row in rows:
        writer.writerow([int(row[name]) for name in names])
        count += 1
    return count


def write_dense_csv(
    stream: TextIO, names: Sequence[str], rows: Iterable[Tuple[Time, Sequence[bool]]]
) -> int:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["time", *names])
    count = 0
    for t, values in rows:
        writer.writerow([format_time(to_time(t)), *(int(v) for v in values)])
        count += 1
    return count
