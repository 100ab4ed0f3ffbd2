from itertools import product
from math import prod

import numpy as np
import pytest
from hypothesis import strategies as st

from hspec.hypercore import validate


def surjective_tuple_sum(e, m, x):
    """Brute force: sum of x_i1...x_im over all m-tuples from e covering e."""
    verts = set(e)
    return float(
        sum(prod(x[v - 1] for v in t) for t in product(e, repeat=m) if set(t) == verts)
    )


@st.composite
def hypergraphs(draw, max_n=6, max_rank=4, min_edges=0, max_edges=12):
    n = draw(st.integers(1, max_n))
    top = min(n, max_rank)
    edge = st.sets(st.integers(1, n), min_size=1, max_size=top).map(sorted)
    edges = draw(
        st.lists(edge, min_size=min_edges, max_size=max_edges, unique_by=tuple)
    )
    return validate(n, edges)


def random_hypergraph(rng, max_n=6, max_rank=4, max_edges=10):
    """Seeded random hypergraph with at least one edge."""
    n = int(rng.integers(2, max_n + 1))
    top = min(n, max_rank)
    edges = set()
    for _ in range(int(rng.integers(1, max_edges + 1))):
        s = int(rng.integers(1, top + 1))
        edges.add(tuple(sorted(rng.choice(np.arange(1, n + 1), size=s, replace=False).tolist())))
    return validate(n, sorted(edges))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def mixed_example():
    return validate(4, [[1, 3], [1, 2, 3], [1, 3, 4]])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
