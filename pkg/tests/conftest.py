import random

import pytest
from hypothesis import strategies as st

from bipcontract.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


@st.composite
def graph_and_edge_sets(draw, max_n=8):
    G = draw(graphs(max_n=max_n))
    ids = list(range(G.m))
    F = draw(st.sets(st.sampled_from(ids)) if ids else st.just(set()))
    M = draw(st.sets(st.sampled_from(ids)) if ids else st.just(set()))
    return G, F, M


@pytest.fixture
def rng():
    return random.Random(12345)


# one PASS/FAIL line per acceptance criterion, collected by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
