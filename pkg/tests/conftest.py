import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from boxdim.graph import Graph
from boxdim.intervals import IntervalRep, realize


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def cocktail(n):
    """K_n minus the perfect matching {2i, 2i+1}."""
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if u // 2 != v // 2])


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if bits >> i & 1])


def random_intervals(rng, n, span=20):
    lo, hi = [], []
    for _ in range(n):
        a, b = sorted((rng.randint(0, span), rng.randint(0, span)))
        lo.append(a)
        hi.append(b)
    return IntervalRep(tuple(lo), tuple(hi))


def random_connected(rng, n, p=0.5):
    while True:
        G = random_graph(rng, n, p)
        if G.is_connected():
            return G


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def interval_reps(draw, min_n=1, max_n=8, span=30):
    n = draw(st.integers(min_n, max_n))
    ends = [sorted(draw(st.tuples(st.integers(0, span), st.integers(0, span)))) for _ in range(n)]
    return IntervalRep(tuple(a for a, _ in ends), tuple(b for _, b in ends))


@pytest.fixture
def rng():
    return random.Random(20240611)


def interval_graph(R):
    return realize(R)


ACCEPTANCE_LINES: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES, key=lambda k: (len(k), k)):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
