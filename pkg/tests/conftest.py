import pytest
from hypothesis import strategies as st

from app.models.partition_models import Partition, SkewDiagram


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the desk-scale acceptance sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: desk-scale acceptance sweep, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@st.composite
def partitions(draw, max_part=5, max_rows=4):
    rows = draw(st.lists(st.integers(min_value=1, max_value=max_part), max_size=max_rows))
    return Partition(parts=tuple(sorted(rows, reverse=True)))


@st.composite
def skew_diagrams(draw, max_part=5, max_rows=4):
    """Random outer partition, then an inner partition chosen row by row inside it."""
    outer = draw(partitions(max_part=max_part, max_rows=max_rows))
    inner = []
    for i, row_end in enumerate(outer.parts):
        ceiling = row_end if i == 0 else min(row_end, inner[-1])
        inner.append(draw(st.integers(min_value=0, max_value=ceiling)))
    return SkewDiagram(outer=outer, inner=Partition(parts=tuple(inner)))
