"""Undirected simple graphs with stable edge ids, plus rank and contraction.

Vertices are ``0..n-1``. Edge ``i`` is ``edges[i]``, stored as ``(u, v)`` with
``u < v``. Edge ids never change for the lifetime of a graph, so edge sets are
plain ``frozenset``\\ s of ids and transfer between derived graphs that keep
the same edge order (see :func:`compact` and :func:`subdivide`).
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

EdgeSet = frozenset


class GraphError(ValueError):
    """Raised for malformed graphs or graph files."""


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


class Graph:
    """Immutable undirected simple graph.

    ``adj[v]`` lists ``(neighbour, edge_id)`` pairs in edge-id order.
    """

    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("negative vertex count")
        norm: list[tuple[int, int]] = []
        index: dict[tuple[int, int], int] = {}
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise GraphError(f"parallel edge {key}")
            index[key] = len(norm)
            norm.append(key)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(norm):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self.adj = tuple(tuple(a) for a in adj)
        self._index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adj[v]]

    def spanned(self, F: Iterable[int]) -> set[int]:
        """V(F): endpoints of the edges in ``F``."""
        out: set[int] = set()
        for e in F:
            out.update(self.edges[e])
        return out

    def without_edges(self, F: Iterable[int]) -> "Graph":
        """G minus F, as a fresh graph (edge ids are renumbered)."""
        drop = set(F)
        return Graph(self.n, [e for i, e in enumerate(self.edges) if i not in drop])

    def without_vertices(self, X: Iterable[int]) -> tuple["Graph", list[int]]:
        """G minus X. Returns the graph and the new-to-old vertex list."""
        drop = set(X)
        keep = [v for v in range(self.n) if v not in drop]
        new_id = {v: i for i, v in enumerate(keep)}
        edges = [
            (new_id[u], new_id[v])
            for u, v in self.edges
            if u not in drop and v not in drop
        ]
        return Graph(len(keep), edges), keep

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def compact(G: Graph) -> tuple[Graph, list[int]]:
    """Drop isolated vertices, keeping edge ids. Returns (graph, new-to-old)."""
    keep = [v for v in range(G.n) if G.adj[v]]
    new_id = {v: i for i, v in enumerate(keep)}
    H = Graph(len(keep), [(new_id[u], new_id[v]) for u, v in G.edges])
    return H, keep


# ---------------------------------------------------------------------------
# colourings and connectivity


def two_color(n: int, adj: Sequence[Iterable[int]]) -> list[int] | None:
    """BFS 2-colouring over plain neighbour lists; lowest id of each
    component gets colour 1."""
    color = [0] * n
    for s in range(n):
        if color[s]:
            continue
        color[s] = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not color[w]:
                    color[w] = 3 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(G: Graph) -> list[int] | None:
    """Return a proper colouring with values in {1, 2}, or None."""
    return two_color(G.n, [[w for w, _ in a] for a in G.adj])


def bipartite_without(G: Graph, F: Iterable[int]) -> list[int] | None:
    """Colouring of G minus the edges F, or None if it has an odd cycle."""
    drop = set(F)
    return two_color(G.n, [[w for w, e in a if e not in drop] for a in G.adj])


def is_proper_coloring(G: Graph, coloring: Sequence[int]) -> bool:
    if len(coloring) != G.n or any(c not in (1, 2) for c in coloring):
        return False
    return all(coloring[u] != coloring[v] for u, v in G.edges)


def reachable(
    G: Graph,
    sources: Iterable[int],
    blocked_vertices: Iterable[int] = (),
    blocked_edges: Iterable[int] = (),
) -> set[int]:
    """Vertices reachable from ``sources`` avoiding the blocked items.

    Blocked sources are not started from.
    """
    bv = set(blocked_vertices)
    be = set(blocked_edges)
    seen = {s for s in sources if s not in bv}
    stack = list(seen)
    while stack:
        u = stack.pop()
        for w, e in G.adj[u]:
            if w not in seen and w not in bv and e not in be:
                seen.add(w)
                stack.append(w)
    return seen


def is_cut(G: Graph, X: Iterable[int], Y: Iterable[int], C: Iterable[int]) -> bool:
    """True iff G minus the edges C has no X-Y path."""
    return not (reachable(G, X, blocked_edges=C) & set(Y))


# ---------------------------------------------------------------------------
# rank algebra


def rank(G: Graph, F: Iterable[int]) -> int:
    """Number of edges in a spanning forest of G[F]."""
    uf = UnionFind(G.n)
    return sum(uf.union(*G.edges[e]) for e in set(F))


def m_rank(G: Graph, F: Iterable[int], M: Iterable[int]) -> int:
    """Rank of G[F + M] / M, via r(F + M) - r(M)."""
    F, M = set(F), set(M)
    return rank(G, F | M) - rank(G, M)


def m_rank_direct(G: Graph, F: Iterable[int], M: Iterable[int]) -> int:
    """Same as :func:`m_rank` but by materialising the contracted graph."""
    F, M = set(F), set(M)
    sub = F | M
    verts = sorted(G.spanned(sub))
    local = {v: i for i, v in enumerate(verts)}
    H = Graph(len(verts), [(local[G.edges[e][0]], local[G.edges[e][1]]) for e in sorted(sub)])
    m_local = [i for i, e in enumerate(sorted(sub)) if e in M]
    Q, _ = contract(H, m_local)
    return rank(Q, range(Q.m))


def solspan_holds(G: Graph, C: Iterable[int], M: Iterable[int], k: int) -> bool:
    """Check that C + M spans at most 6k vertices whenever |M| <= 2k and
    the M-rank of C is at most k (vacuously true otherwise)."""
    C, M = set(C), set(M)
    if len(M) > 2 * k or m_rank(G, C, M) > k:
        return True
    return len(G.spanned(C | M)) <= 6 * k


# ---------------------------------------------------------------------------
# contraction and subdivision


def contraction_map(G: Graph, F: Iterable[int]) -> list[int]:
    """Map each vertex to its vertex in G/F.

    Contracted vertices are numbered in order of their smallest member.
    """
    uf = UnionFind(G.n)
    for e in F:
        uf.union(*G.edges[e])
    label: dict[int, int] = {}
    out = []
    for v in range(G.n):
        r = uf.find(v)
        if r not in label:
            label[r] = len(label)
        out.append(label[r])
    return out


def contract(G: Graph, F: Iterable[int]) -> tuple[Graph, list[int]]:
    """G/F as a simple graph (loops dropped, parallels merged)."""
    cmap = contraction_map(G, F)
    n2 = max(cmap) + 1 if cmap else 0
    seen: set[tuple[int, int]] = set()
    edges = []
    for u, v in G.edges:
        a, b = cmap[u], cmap[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        if key not in seen:
            seen.add(key)
            edges.append(key)
    return Graph(n2, edges), cmap


def subdivide(G: Graph) -> tuple[Graph, list[int]]:
    """Replace each edge ``e = uv`` by a path u - z_e - v.

    ``z_e`` gets vertex id ``n + e``. Returns the graph and the list ``z``.
    """
    z = [G.n + e for e in range(G.m)]
    edges = []
    for e, (u, v) in enumerate(G.edges):
        edges.append((u, z[e]))
        edges.append((z[e], v))
    return Graph(G.n + G.m, edges), z


def minimal_modulator(G: Graph, F: Iterable[int]) -> frozenset[int]:
    """Drop edges from a bipartite modulator while G - F stays bipartite."""
    current = set(F)
    if bipartite_without(G, current) is None:
        raise GraphError("edge set is not a bipartite modulator")
    for e in sorted(current):
        if bipartite_without(G, current - {e}) is not None:
            current.discard(e)
    return frozenset(current)


def spanning_forest(G: Graph, F: Iterable[int]) -> frozenset[int]:
    uf = UnionFind(G.n)
    return frozenset(e for e in sorted(set(F)) if uf.union(*G.edges[e]))


def modulator_to_contraction(G: Graph, F: Iterable[int], k: int) -> frozenset[int]:
    """Turn a modulator of rank <= k into at most k edges whose contraction
    leaves a bipartite graph."""
    F = frozenset(F)
    if rank(G, F) > k:
        raise GraphError(f"modulator has rank {rank(G, F)} > {k}")
    Fmin = minimal_modulator(G, F)
    forest = spanning_forest(G, Fmin)
    Q, _ = contract(G, forest)
    if is_bipartite(Q) is None:  # pragma: no cover - would contradict minimality
        raise AssertionError("contraction of a minimal modulator is not bipartite")
    return forest


def contraction_is_bipartite(G: Graph, F: Iterable[int]) -> bool:
    Q, _ = contract(G, F)
    return is_bipartite(Q) is not None


def edge_subsets(m: int, max_size: int):
    for size in range(min(max_size, m) + 1):
        yield from combinations(range(m), size)


# ---------------------------------------------------------------------------
# text format


def parse_graph(text: str) -> Graph:
    """Parse ``p <n> <m>`` followed by m lines ``e <u> <v>`` with u < v."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty graph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "p":
        raise GraphError(f"bad header line: {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError as exc:
        raise GraphError(f"bad header line: {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise GraphError("negative counts in header")
    if len(lines) - 1 != m:
        raise GraphError(f"header says {m} edges, found {len(lines) - 1} lines")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "e":
            raise GraphError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise GraphError(f"bad edge line: {ln!r}") from exc
        if not 0 <= u < v < n:
            raise GraphError(f"edge line needs 0 <= u < v < n: {ln!r}")
        edges.append((u, v))
    return Graph(n, edges)


def format_graph(G: Graph) -> str:
    out = [f"p {G.n} {G.m}"]
    out.extend(f"e {u} {v}" for u, v in G.edges)
    return "\n".join(out) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


# ---------------------------------------------------------------------------
# small constructors, mostly for tests and the generator


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))
