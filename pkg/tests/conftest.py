from typing import Dict, List, Sequence

import pytest

from helpers import dense_since_chunks, rows_of
from intervals.chunk import Chunk
from oracle.structures import HomStructure


@pytest.fixture
def nested_once_rows() -> Sequence[Dict[str, bool]]:
    return rows_of({"p": "TFFFFF", "q": "FFFFTF"})


@pytest.fixture
def timed_since_rows() -> Sequence[Dict[str, bool]]:
    return rows_of({"p": "FFTTTT", "q": "FTFFTF"})


@pytest.fixture
def dense_since() -> List[Chunk]:
    return dense_since_chunks()


@pytest.fixture
def dense_since_structure() -> HomStructure:
    return HomStructure.from_chunks(dense_since_chunks())
