import time

import pytest
from hypothesis import strategies as st

from azw import build_graph, builtin_corpus

SESSION_START = time.perf_counter()


def pytest_collection_modifyitems(config, items):
    # acceptance criteria run last so their wall-clock check covers the
    # rest of the session (sort is stable, other order is preserved)
    items.sort(key=lambda item: item.fspath.basename == "test_acceptance.py")


@pytest.fixture(scope="session")
def corpus():
    return dict(builtin_corpus())


@st.composite
def connected_graphs(draw, max_n: int = 7):
    """Random simple connected graph: spanning tree plus a few extra edges."""
    n = draw(st.integers(min_value=2, max_value=max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((u, v))
    extra = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
        max_size=6))
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return build_graph(n, sorted(edges))
