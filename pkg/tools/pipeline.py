"""Bounded-queue prefetching between a trace reader and the engine."""

import queue
import threading
from typing import Iterable, Iterator, TypeVar

from loguru import logger

T = TypeVar("T")

_DONE = object()


class _Failure:
    def __init__(self, error: BaseException):
        self.error = error


def prefetch(items: Iterable[T], maxsize: int) -> Iterator[T]:
    """Iterate ``items`` produced by a reader thread through a queue of ``maxsize``.

    The reader blocks while the queue is full. An exception raised by the
    reader is re-raised in the consumer at the point it occurred in the
    stream. ``maxsize`` of 0 iterates inline without a thread.
    """
    if maxsize <= 0:
        yield from items
        return

    buffer: "queue.Queue" = queue.Queue(maxsize=maxsize)
    stop = threading.Event()

    def put(item) -> bool:
        while not stop.is_set():
            try:
                buffer.put(item, timeout=0.1)
                return True
            except queue.Full:
                continue
        return False

    def produce():
        try:
            for item in items:
                if not put(item):
                    return
        except BaseException as exc:  # handed over to the consumer
            put(_Failure(exc))
            return
        put(_DONE)

    reader = threading.Thread(target=produce, name="trace-reader", daemon=True)
    reader.start()
    logger.debug("reader thread started, queue size {}", maxsize)
    try:
        while True:
            item = buffer.get()
            if item is _DONE:
                return
            if isinstance(item, _Failure):
                raise item.error
            yield item
    finally:
        stop.set()
        reader.join(timeout=1.0)
