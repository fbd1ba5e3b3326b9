from __future__ import annotations

import pytest
from hypothesis import strategies as st

from diagmon.core import DiagramPartition, MonoidFamily
from diagmon.oracle import enumerate_elements


def _diagram_from_raw(n: int, raw: list[int]) -> DiagramPartition:
    """Normalize an arbitrary int string into a valid growth code."""
    blocks: list[list[int]] = []
    code: list[int] = []
    for i, pick in enumerate(raw):
        bound = (max(code) + 1) if code else 0
        value = min(pick, bound)
        code.append(value)
        if value == len(blocks):
            blocks.append([i])
        else:
            blocks[value].append(i)
    return DiagramPartition(n, tuple(tuple(b) for b in blocks))


@st.composite
def diagrams(draw: st.DrawFn, max_n: int = 4, min_n: int = 0) -> DiagramPartition:
    n = draw(st.integers(min_n, max_n))
    raw = draw(st.lists(st.integers(0, 2 * n), min_size=2 * n, max_size=2 * n))
    return _diagram_from_raw(n, raw)


@st.composite
def diagram_pairs(
    draw: st.DrawFn, max_n: int = 4, min_n: int = 0
) -> tuple[DiagramPartition, DiagramPartition]:
    """Two diagrams over the same number of points."""
    n = draw(st.integers(min_n, max_n))
    cells = st.lists(st.integers(0, 2 * n), min_size=2 * n, max_size=2 * n)
    return _diagram_from_raw(n, draw(cells)), _diagram_from_raw(n, draw(cells))


@pytest.fixture(scope="session")
def all_p3() -> list[DiagramPartition]:
    return list(enumerate_elements(MonoidFamily.P, 3))


@pytest.fixture(scope="session")
def all_b3() -> list[DiagramPartition]:
    return list(enumerate_elements(MonoidFamily.B, 3))


@pytest.fixture(scope="session")
def all_pb3() -> list[DiagramPartition]:
    return list(enumerate_elements(MonoidFamily.PB, 3))
