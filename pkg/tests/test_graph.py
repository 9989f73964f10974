import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from bipcontract.graph import (
    Graph,
    GraphError,
    bipartite_without,
    complete,
    compact,
    contract,
    contraction_is_bipartite,
    cycle,
    format_graph,
    is_bipartite,
    m_rank,
    m_rank_direct,
    modulator_to_contraction,
    parse_graph,
    path,
    rank,
    subdivide,
)

from conftest import graph_and_edge_sets, graphs


def test_is_bipartite_examples():
    assert is_bipartite(cycle(4)) == [1, 2, 1, 2]
    assert is_bipartite(cycle(5)) is None
    assert is_bipartite(Graph(3)) == [1, 1, 1]


def test_graph_rejects_loops_and_parallels():
    with pytest.raises(GraphError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


def test_rank_examples():
    K3 = complete(3)
    assert rank(K3, []) == 0
    assert rank(K3, range(3)) == 2
    G = Graph(4, [(0, 1), (2, 3)])
    assert rank(G, [0, 1]) == 2


def test_m_rank_examples():
    P = path(3)
    assert m_rank(P, {P.edge_id(0, 1), P.edge_id(1, 2)}, {P.edge_id(0, 1)}) == 1
    K3 = complete(3)
    assert m_rank(K3, range(3), {K3.edge_id(0, 1)}) == 1
    assert m_rank_direct(K3, range(3), {K3.edge_id(0, 1)}) == 1
    assert m_rank(K3, range(3), []) == rank(K3, range(3))


@settings(max_examples=300, deadline=None)
@given(graph_and_edge_sets())
def test_m_rank_identity_matches_direct_contraction(data):
    G, F, M = data
    assert m_rank(G, F, M) == m_rank_direct(G, F, M)


def test_contract_examples():
    Q, _ = contract(complete(4), [0])
    assert (Q.n, Q.m) == (3, 3)
    Q, cmap = contract(cycle(5), [cycle(5).edge_id(0, 1)])
    assert (Q.n, Q.m) == (4, 4) and is_bipartite(Q) is not None
    assert cmap == [0, 0, 1, 2, 3]
    P = path(5)
    Q, _ = contract(P, range(P.m))
    assert (Q.n, Q.m) == (1, 0)


def _to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7), st.data())
def test_contraction_is_order_independent(G, data):
    if not G.m:
        return
    F = data.draw(st.lists(st.sampled_from(range(G.m)), unique=True, max_size=4))
    order = data.draw(st.permutations(F))
    Q_all, _ = contract(G, F)
    # one edge at a time, following the vertex labels through each step
    H, label = G, list(range(G.n))
    for e in order:
        u, v = (label[x] for x in G.edges[e])
        if u == v:
            continue
        H, cmap = contract(H, [H.edge_id(u, v)])
        label = [cmap[x] for x in label]
    assert nx.is_isomorphic(_to_nx(H), _to_nx(Q_all))


def test_subdivide():
    S, z = subdivide(Graph(2, [(0, 1)]))
    assert (S.n, S.m, z) == (3, 2, [2])
    assert S.has_edge(0, 2) and S.has_edge(2, 1)
    S, z = subdivide(complete(3))
    assert S.n == 6 and S.m == 6
    assert all(S.degree(v) == 2 for v in range(6))
    assert nx.is_isomorphic(_to_nx(S), nx.cycle_graph(6))
    E = Graph(3)
    assert subdivide(E) == (E, [])


def test_modulator_to_contraction_examples():
    C5 = cycle(5)
    e01 = C5.edge_id(0, 1)
    assert modulator_to_contraction(C5, {e01}, 1) == {e01}
    assert modulator_to_contraction(cycle(4), set(), 0) == frozenset()
    K4 = complete(4)
    F = {K4.edge_id(0, 1), K4.edge_id(0, 2), K4.edge_id(0, 3), K4.edge_id(1, 2)}
    assert bipartite_without(K4, F) is not None and rank(K4, F) == 3
    out = modulator_to_contraction(K4, F, 3)
    assert len(out) <= 2
    # brute-force check of the contracted graph
    Q, _ = contract(K4, out)
    assert all(
        not (Q.has_edge(a, b) and Q.has_edge(b, c) and Q.has_edge(a, c))
        for a, b, c in itertools.combinations(range(Q.n), 3)
    )
    with pytest.raises(GraphError):
        modulator_to_contraction(cycle(5), set(), 1)
    with pytest.raises(GraphError):
        modulator_to_contraction(K4, F, 2)


def _exists_contraction(G, k):
    return any(
        contraction_is_bipartite(G, F)
        for size in range(min(k, G.m) + 1)
        for F in itertools.combinations(range(G.m), size)
    )


def _exists_modulator(G, k):
    max_edges = (k + 1) * k // 2
    return any(
        rank(G, F) <= k and bipartite_without(G, F) is not None
        for size in range(min(max_edges, G.m) + 1)
        for F in itertools.combinations(range(G.m), size)
    )


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=6), st.integers(0, 2))
def test_contraction_equivalent_to_low_rank_modulator(G, k):
    assert _exists_contraction(G, k) == _exists_modulator(G, k)


def test_parse_roundtrip_and_errors():
    text = "p 4 3\ne 0 1\ne 1 2\ne 2 3\n"
    G = parse_graph(text)
    assert G == path(4)
    assert format_graph(G) == text
    for bad in [
        "",
        "p 3\n",
        "p 3 1\ne 1 0\n",
        "p 3 1\ne 1 1\n",
        "p 3 2\ne 0 1\ne 0 1\n",
        "p 3 2\ne 0 1\n",
        "p 3 1\ne 0 3\n",
        "p 3 1\nx 0 1\n",
        "p 3 1\ne 0 a\n",
    ]:
        with pytest.raises(GraphError):
            parse_graph(bad)


def test_compact_keeps_edge_ids():
    G = Graph(5, [(1, 3), (3, 4)])
    H, keep = compact(G)
    assert keep == [1, 3, 4]
    assert [tuple(keep[x] for x in e) for e in H.edges] == list(G.edges)
