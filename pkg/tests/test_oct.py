import itertools
import random

from bipcontract.graph import Graph, complete, cycle, is_bipartite
from bipcontract.oct import find_oct, oct_bipartition

from conftest import random_graph


def brute_oct_size(G, budget):
    for size in range(budget + 1):
        for X in itertools.combinations(range(G.n), size):
            H, _ = G.without_vertices(X)
            if is_bipartite(H) is not None:
                return size
    return None


def test_bipartite_needs_nothing():
    for b in range(3):
        assert find_oct(cycle(6), b).X == frozenset()


def test_c5_budget_one():
    res = find_oct(cycle(5), 1)
    assert len(res.X) == 1 and res.verify(cycle(5))
    assert find_oct(cycle(5), 0) is None


def test_two_triangles():
    G = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    res = find_oct(G, 2)
    assert len(res.X & {0, 1, 2}) == 1 and len(res.X & {3, 4, 5}) == 1
    assert brute_oct_size(G, 1) is None
    assert find_oct(G, 1) is None


def test_exact_against_brute_force():
    rng = random.Random(7)
    for _ in range(250):
        G = random_graph(rng, rng.randint(1, 9), rng.choice([0.3, 0.5, 0.7, 0.9]))
        budget = rng.randint(0, 4)
        res = find_oct(G, budget)
        best = brute_oct_size(G, budget)
        assert (res is None) == (best is None)
        if res is not None:
            assert len(res.X) == best
            assert res.verify(G)


def test_bipartition_canonical():
    K4 = complete(4)
    res = find_oct(K4, 2)
    S1, S2 = oct_bipartition(K4, res)
    rest = set(range(4)) - res.X
    assert S1 | S2 == rest and not S1 & S2
    assert min(rest) in S1
