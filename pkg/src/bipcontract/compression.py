"""From an odd cycle transversal X to Rank-Cut instances.

Each x in X is split into ``x_1`` (keeps id x) and ``x_2`` (id ``n + j`` for
the j-th smallest element of X). Edge ids of G carry over unchanged to G' and
H, so the edge bijection between G and G' is the identity on ids; the extra
edges ``x_1 x_2`` of H get ids ``m, m + 1, ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .graph import Graph, GraphError, bipartite_without, is_bipartite, rank
from .rank_cut import RankCutInstance, RankCutOutcome


@dataclass(frozen=True)
class PrimeGraph:
    G: Graph
    X: tuple[int, ...]
    prime: Graph  # G'
    side: tuple[int, ...]  # 1 or 2 for every vertex of G'
    H: Graph  # G' plus the x_1 x_2 edges
    M: frozenset[int]

    def copy1(self, x: int) -> int:
        return x

    def copy2(self, x: int) -> int:
        return self.G.n + self.X.index(x)

    def phi(self, e: int) -> int:
        """Image in G' of edge e of G."""
        return e

    def phi_inverse(self, C: Iterable[int]) -> frozenset[int]:
        return frozenset(e for e in C if e < self.G.m)


@dataclass(frozen=True)
class ValidPartition:
    A: frozenset[int]
    B: frozenset[int]


def build_prime(G: Graph, X: Iterable[int], S1: Iterable[int], S2: Iterable[int]) -> PrimeGraph:
    X = tuple(sorted(set(X)))
    xset = set(X)
    S1, S2 = set(S1), set(S2)
    rest = set(range(G.n)) - xset
    if S1 & S2 or (S1 | S2) != rest:
        raise GraphError("S1, S2 must partition V(G) - X")
    for u, v in G.edges:
        if u in rest and v in rest and ((u in S1) == (v in S1)):
            raise GraphError(f"edge ({u}, {v}) inside one side of the bipartition")
    n = G.n
    copy2 = {x: n + j for j, x in enumerate(X)}

    def side_of(u: int) -> int:
        return 1 if u in S1 else 2

    edges = []
    for u, v in G.edges:
        if u not in xset and v not in xset:
            edges.append((u, v))
        elif u in xset and v in xset:
            # u < v: u_1 v_2
            edges.append((u, copy2[v]))
        else:
            a, x = (u, v) if v in xset else (v, u)
            # a in S_i goes to x_{3-i}
            edges.append((a, x if side_of(a) == 2 else copy2[x]))
    n2 = n + len(X)
    prime = Graph(n2, edges)
    side = [0] * n2
    for v in range(n):
        side[v] = 1 if (v in xset or v in S1) else 2
    for x in X:
        side[copy2[x]] = 2
    H = Graph(n2, list(edges) + [(x, copy2[x]) for x in X])
    M = frozenset(range(G.m, G.m + len(X)))
    return PrimeGraph(G, X, prime, tuple(side), H, M)


def canonical_bipartition(G: Graph, X: Iterable[int]) -> tuple[set[int], set[int]]:
    """Sides of G - X; the lowest id of each component goes to side 1."""
    H, keep = G.without_vertices(X)
    col = is_bipartite(H)
    if col is None:
        raise GraphError("G - X is not bipartite")
    S1 = {keep[i] for i, c in enumerate(col) if c == 1}
    return S1, set(keep) - S1


def valid_partitions(pg: PrimeGraph) -> Iterator[ValidPartition]:
    """All 2^|X| valid partitions; bit j of the counter puts the j-th
    element's second copy on side A."""
    for mask in range(1 << len(pg.X)):
        A, B = set(), set()
        for j, x in enumerate(pg.X):
            one, two = pg.copy1(x), pg.copy2(x)
            if mask >> j & 1:
                A.add(two)
                B.add(one)
            else:
                A.add(one)
                B.add(two)
        yield ValidPartition(frozenset(A), frozenset(B))


def rank_cut_instances(pg: PrimeGraph, k: int) -> Iterator[RankCutInstance]:
    for vp in valid_partitions(pg):
        yield RankCutInstance(pg.H, k, vp.A, vp.B, pg.M)


@dataclass
class BccOutcome:
    modulator: frozenset[int] | None
    partition_index: int | None = None
    partitions_tried: int = 0
    iterations: int = 0
    exhausted: bool = False  # some backend gave up on a budget
    solspan_checks: int = 0


def solve_bcc(
    G: Graph,
    k: int,
    X: Iterable[int],
    backend: Callable[[RankCutInstance, int], RankCutOutcome],
    S1: Iterable[int] | None = None,
    S2: Iterable[int] | None = None,
    workers: int = 1,
) -> BccOutcome:
    """Find a bipartite modulator of rank <= k, given an OCT X.

    ``backend(instance, index)`` solves one Rank-Cut instance; ``index`` is the
    valid-partition number, used to derive independent random streams.
    """
    X = set(X)
    if S1 is None or S2 is None:
        S1, S2 = canonical_bipartition(G, X)
    if len(X) > 2 * k:
        raise ValueError(f"|X| = {len(X)} exceeds 2k = {2 * k}")
    pg = build_prime(G, X, S1, S2)
    instances = list(rank_cut_instances(pg, k))
    out = BccOutcome(None)

    def accept(idx: int, res: RankCutOutcome) -> bool:
        out.partitions_tried += 1
        out.iterations += res.iterations
        out.exhausted |= res.exhausted
        out.solspan_checks += res.stats.get("solspan_checks", 0)
        if res.cut is None:
            return False
        assert pg.M <= res.cut, "cut misses a forced M edge"
        F = pg.phi_inverse(res.cut)
        assert rank(G, F) <= k
        assert bipartite_without(G, F) is not None
        out.modulator = F
        out.partition_index = idx
        return True

    if workers <= 1:
        for idx, inst in enumerate(instances):
            if accept(idx, backend(inst, idx)):
                break
        return out

    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda p: backend(p[1], p[0]), enumerate(instances)))
    for idx, res in enumerate(results):
        if accept(idx, res):
            break
    return out
