import pytest
from hypothesis import strategies as st

from wellcover import catalog as cat
from wellcover.graph import Graph


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, picks)


@pytest.fixture(scope="session")
def catalog_by_n():
    """All graphs up to 7 vertices, one per isomorphism class, keyed by order."""
    return {n: list(cat.all_graphs(n)) for n in range(8)}


@pytest.fixture(scope="session")
def connected_by_n():
    return {n: list(cat.all_graphs(n, connected=True)) for n in range(8)}
