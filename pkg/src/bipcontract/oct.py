"""Exact odd cycle transversal by iterative compression.

Vertices are added one at a time; whenever the running solution grows to
``budget + 1`` it is compressed by guessing, for each solution vertex, whether
it stays deleted or takes colour 1 or 2, and then solving a vertex cut between
the vertices forced to keep their colour and those forced to flip it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .flow import SeparatorNetwork
from .graph import Graph, two_color


@dataclass(frozen=True)
class OctResult:
    X: frozenset[int]
    coloring: tuple[int, ...]  # colour of every vertex of G; 0 on X

    def verify(self, G: Graph) -> bool:
        for u, v in G.edges:
            if u in self.X or v in self.X:
                continue
            if self.coloring[u] not in (1, 2) or self.coloring[u] == self.coloring[v]:
                return False
        return True


def _compress(adj, verts, X, budget):
    """Given an OCT ``X`` of G[verts] with |X| = budget + 1, find one of size
    <= budget or return None."""
    X = sorted(X)
    rest = [v for v in verts if v not in set(X)]
    rest_set = set(rest)
    local_adj = {v: [w for w in adj[v] if w in rest_set] for v in rest}
    index = {v: i for i, v in enumerate(rest)}
    base = two_color(len(rest), [[index[w] for w in local_adj[v]] for v in rest])
    assert base is not None, "compression input is not an OCT"
    color = {v: base[index[v]] for v in rest}

    for roles in product((0, 1, 2), repeat=len(X)):
        deleted = [x for x, r in zip(X, roles) if r == 0]
        if len(deleted) > budget:
            continue
        side = {x: r for x, r in zip(X, roles) if r}
        if any(
            w in side and side[w] == c
            for x, c in side.items()
            for w in adj[x]
        ):
            continue
        stay, flip = set(), set()
        for x, c in side.items():
            for w in adj[x]:
                if w in rest_set:
                    # w must end with colour 3 - c
                    (stay if color[w] == 3 - c else flip).add(w)
        room = budget - len(deleted)
        # separate stay from flip in G[rest]; terminals themselves deletable
        n = len(rest)
        s_local = {index[v] for v in stay}
        t_local = {index[v] for v in flip}
        nbrs = [[index[w] for w in local_adj[v]] for v in rest]
        for i in s_local:
            nbrs[i].append(n)
        for i in t_local:
            nbrs[i].append(n + 1)
        net = SeparatorNetwork(
            n + 2, nbrs + [sorted(s_local), sorted(t_local)], X=[n], Y=[n + 1]
        )
        if net.solve(limit=room) > room:
            continue
        cut = {rest[i] for i in net.closest_cut()}
        return set(deleted) | cut
    return None


def find_oct(G: Graph, budget: int) -> OctResult | None:
    """Smallest vertex set X with G - X bipartite, if one has size <= budget.

    Budgets are tried from 0 upwards so the returned set is a minimum one.
    """
    adj = [[w for w, _ in a] for a in G.adj]
    for b in range(budget + 1):
        X = _oct_with_budget(adj, G.n, b)
        if X is not None:
            return _certify(G, adj, X)
    return None


def _oct_with_budget(adj, n, budget):
    X: set[int] = set()
    verts: list[int] = []
    for v in range(n):
        verts.append(v)
        X.add(v)
        if len(X) > budget:
            X = _compress(adj, verts, X, budget)
            if X is None:
                return None
    return X


def _certify(G, adj, X) -> OctResult:
    keep = [v for v in range(G.n) if v not in X]
    index = {v: i for i, v in enumerate(keep)}
    col = two_color(len(keep), [[index[w] for w in adj[v] if w not in X] for v in keep])
    assert col is not None
    coloring = [0] * G.n
    for v in keep:
        coloring[v] = col[index[v]]
    res = OctResult(frozenset(X), tuple(coloring))
    assert res.verify(G)
    return res


def oct_bipartition(G: Graph, res: OctResult) -> tuple[set[int], set[int]]:
    """Sides S1, S2 of G - X, lowest id of each component on side 1."""
    s1 = {v for v, c in enumerate(res.coloring) if c == 1}
    s2 = {v for v, c in enumerate(res.coloring) if c == 2}
    return s1, s2

