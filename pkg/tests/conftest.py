from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from homlor.graphs import WeightedGraph

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

G0_ROWS = [[0, 0, 1], [0, 0, 2], [1, 2, 0]]


@pytest.fixture
def g0():
    return WeightedGraph.from_matrix(G0_ROWS)


rationals = st.builds(Fraction, st.integers(0, 16), st.integers(1, 8))


@st.composite
def weighted_graphs(draw, n_min=1, n_max=4, loops=True):
    n = draw(st.integers(n_min, n_max))
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            if i == j and not loops:
                continue
            m[i][j] = m[j][i] = draw(rationals)
    return WeightedGraph.from_matrix(m)


@st.composite
def simple_graphs(draw, n_min=1, n_max=5, loops=False):
    n = draw(st.integers(n_min, n_max))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if draw(st.booleans())]
    looped = [v for v in range(n) if loops and draw(st.booleans())]
    return WeightedGraph.from_edges(n, edges, loops=looped)
