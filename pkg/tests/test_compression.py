import itertools
import random

import networkx as nx
import pytest

from bipcontract.compression import (
    build_prime,
    canonical_bipartition,
    solve_bcc,
    valid_partitions,
)
from bipcontract.derand import solve_deterministic
from bipcontract.graph import Graph, GraphError, bipartite_without, cycle, is_bipartite, is_cut, rank
from bipcontract.oct import find_oct

from conftest import random_graph


def test_single_edge_prime():
    G = Graph(2, [(0, 1)])
    pg = build_prime(G, {1}, {0}, set())
    assert pg.prime.n == 3
    assert pg.prime.edges == ((0, 2),)  # u - v_2, v_2 has id 2
    assert [pg.H.edges[e] for e in pg.M] == [(1, 2)]


def test_c5_prime_is_path():
    G = cycle(5)
    pg = build_prime(G, {0}, {1, 3}, {2, 4})
    x2 = pg.copy2(0)
    assert x2 == 5
    assert pg.prime.m == 5
    assert pg.prime.edges[G.edge_id(0, 1)] == (1, 5)
    assert pg.prime.edges[G.edge_id(0, 4)] == (0, 4)
    assert is_bipartite(pg.prime) is not None
    P = nx.Graph(pg.prime.edges)
    assert nx.is_isomorphic(P, nx.path_graph(6))
    assert {v for v in P if P.degree(v) == 1} == {0, 5}


def test_bipartite_prime_is_identity():
    G = cycle(6)
    pg = build_prime(G, set(), {0, 2, 4}, {1, 3, 5})
    assert pg.prime == G and pg.M == frozenset() and pg.H == G


def test_prime_sides_and_identification():
    rng = random.Random(3)
    for _ in range(60):
        G = random_graph(rng, rng.randint(2, 7), 0.5)
        res = find_oct(G, G.n)
        S1, S2 = canonical_bipartition(G, res.X)
        pg = build_prime(G, res.X, S1, S2)
        assert pg.prime.m == G.m
        assert all(pg.side[u] != pg.side[v] for u, v in pg.prime.edges)
        back = {pg.copy2(x): x for x in pg.X}
        merged = sorted(tuple(sorted(back.get(a, a) for a in e)) for e in pg.prime.edges)
        assert merged == sorted(G.edges)


def test_bad_bipartition_rejected():
    with pytest.raises(GraphError):
        build_prime(cycle(4), set(), {0, 1}, {2, 3})


def test_valid_partitions():
    G = cycle(5)
    assert len(list(valid_partitions(build_prime(cycle(4), set(), {0, 2}, {1, 3})))) == 1
    pg = build_prime(G, {0}, {1, 3}, {2, 4})
    parts = list(valid_partitions(pg))
    assert [(set(p.A), set(p.B)) for p in parts] == [({0}, {5}), ({5}, {0})]
    K = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3), (0, 3)])
    pg = build_prime(K, {0, 1, 2}, {3}, set())
    parts = list(valid_partitions(pg))
    assert len(parts) == 8 and len({(p.A, p.B) for p in parts}) == 8
    for p in parts:
        for x in pg.X:
            assert (pg.copy1(x) in p.A) != (pg.copy2(x) in p.A)


def _cut_under_some_partition(pg, F):
    return any(is_cut(pg.prime, vp.A, vp.B, F) for vp in valid_partitions(pg))


def test_modulator_iff_cut_under_valid_partition():
    rng = random.Random(11)
    done = 0
    while done < 20:
        G = random_graph(rng, rng.randint(2, 6), 0.6)
        if G.m > 11:
            continue
        X = set(rng.sample(range(G.n), rng.randint(0, min(3, G.n))))
        H, keep = G.without_vertices(X)
        if is_bipartite(H) is None:
            continue
        S1, S2 = canonical_bipartition(G, X)
        pg = build_prime(G, X, S1, S2)
        for size in range(G.m + 1):
            for F in itertools.combinations(range(G.m), size):
                assert (bipartite_without(G, F) is not None) == _cut_under_some_partition(pg, F)
        done += 1


def _det(inst, idx):
    return solve_deterministic(inst)


def test_solve_bcc_bipartite():
    out = solve_bcc(cycle(6), 2, set(), _det)
    assert out.modulator == frozenset()


def test_solve_bcc_c5():
    G = cycle(5)
    out = solve_bcc(G, 1, {0}, _det)
    F = out.modulator
    assert len(F) == 1 and bipartite_without(G, F) is not None and rank(G, F) <= 1
    # brute force: every single edge of C5 is a modulator
    assert all(bipartite_without(G, {e}) is not None for e in range(5))


def test_solve_bcc_preconditions():
    with pytest.raises(ValueError):
        solve_bcc(cycle(5), 0, {0}, _det)
    with pytest.raises(GraphError):
        solve_bcc(cycle(5), 1, set(), _det)


def test_solve_bcc_witness_soundness():
    rng = random.Random(5)
    for _ in range(40):
        G = random_graph(rng, rng.randint(3, 7), 0.5)
        k = rng.randint(1, 2)
        res = find_oct(G, 2 * k)
        if res is None:
            continue
        out = solve_bcc(G, k, res.X, _det)
        if out.modulator is not None:
            assert bipartite_without(G, out.modulator) is not None
            assert rank(G, out.modulator) <= k
