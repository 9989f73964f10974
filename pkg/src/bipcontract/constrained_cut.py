"""Rank cuts made of whole blocks of a prescribed vertex partition.

Given connected blocks V_1..V_l with every M edge inside a block, a cut built
from complete blocks has M-rank equal to the sum of per-block weights, and it
is an X-Y cut exactly when the matching block vertices separate X from Y in an
auxiliary graph. So the search is a weighted vertex-separator flow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .flow import INF, FlowNetwork
from .graph import Graph, UnionFind, m_rank


class InvalidPartition(ValueError):
    pass


@dataclass(frozen=True)
class BlockPartition:
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]
    weights: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def block_edges(self, G: Graph, i: int) -> list[int]:
        """E(G[V_i])."""
        bo = self.block_of
        return [
            e
            for v in self.blocks[i]
            for w, e in G.adj[v]
            if v < w and bo[w] == i
        ]


@dataclass(frozen=True)
class ConstrainedSolution:
    Z: tuple[int, ...]
    cut: frozenset[int]
    weight: int


def _m_classes(G: Graph, M: Iterable[int]) -> list[int]:
    uf = UnionFind(G.n)
    for e in M:
        uf.union(*G.edges[e])
    return [uf.find(v) for v in range(G.n)]


def partition_from_edges(G: Graph, E_b: Iterable[int], M: Iterable[int]) -> BlockPartition:
    """Blocks = connected components of (V, E_b + M).

    A block's weight is its number of M-classes minus one: inside a connected
    block that is r(E(G[V_i])) - r(M_i).
    """
    M = list(M)
    uf = UnionFind(G.n)
    for e in E_b:
        uf.union(*G.edges[e])
    for e in M:
        uf.union(*G.edges[e])
    cls = _m_classes(G, M)
    label: dict[int, int] = {}
    members: list[list[int]] = []
    block_of = []
    for v in range(G.n):
        r = uf.find(v)
        if r not in label:
            label[r] = len(members)
            members.append([])
        members[label[r]].append(v)
        block_of.append(label[r])
    weights = tuple(len({cls[v] for v in blk}) - 1 for blk in members)
    return BlockPartition(tuple(map(tuple, members)), tuple(block_of), weights)


def make_partition(G: Graph, blocks: Sequence[Iterable[int]], M: Iterable[int]) -> BlockPartition:
    """Validate explicit blocks and weigh them by direct M-rank."""
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    block_of = [-1] * G.n
    for i, blk in enumerate(blocks):
        for v in blk:
            if not 0 <= v < G.n or block_of[v] != -1:
                raise InvalidPartition(f"vertex {v} misplaced in block partition")
            block_of[v] = i
    if -1 in block_of:
        raise InvalidPartition(f"vertex {block_of.index(-1)} is in no block")
    P = BlockPartition(blocks, tuple(block_of), ())
    M = frozenset(M)
    weights = []
    for i, blk in enumerate(blocks):
        edges = P.block_edges(G, i)
        uf = UnionFind(G.n)
        for e in edges:
            uf.union(*G.edges[e])
        if len({uf.find(v) for v in blk}) != 1:
            raise InvalidPartition(f"block {i} is not connected")
        weights.append(m_rank(G, edges, M & set(edges)))
    for e in M:
        u, v = G.edges[e]
        if block_of[u] != block_of[v]:
            raise InvalidPartition(f"M edge {G.edges[e]} crosses blocks")
    return BlockPartition(blocks, tuple(block_of), tuple(weights))


def auxiliary_graph(G: Graph, P: BlockPartition) -> Graph:
    """The separator graph: vertices of G, then one vertex n + i per block."""
    bo = P.block_of
    edges = [(u, v) for u, v in G.edges if bo[u] != bo[v]]
    for i, blk in enumerate(P.blocks):
        edges.extend((v, G.n + i) for v in blk)
    return Graph(G.n + len(P), edges)


def solve_constrained(
    G: Graph,
    k: int,
    X: Iterable[int],
    Y: Iterable[int],
    M: Iterable[int],
    P: BlockPartition,
) -> ConstrainedSolution | None:
    """Cheapest union of whole blocks that cuts X from Y, if it costs <= k."""
    X, Y = set(X), set(Y)
    if X & Y:
        raise ValueError("X and Y intersect")
    n, nb = G.n, len(P)
    bo = P.block_of
    s, t = n + 2 * nb, n + 2 * nb + 1
    net = FlowNetwork(n + 2 * nb + 2)
    for u, v in G.edges:
        if bo[u] != bo[v]:
            net.add_arc(u, v, INF)
            net.add_arc(v, u, INF)
    for i, blk in enumerate(P.blocks):
        b_in, b_out = n + 2 * i, n + 2 * i + 1
        net.add_arc(b_in, b_out, P.weights[i])
        for v in blk:
            net.add_arc(v, b_in, INF)
            net.add_arc(b_out, v, INF)
    for x in X:
        net.add_arc(s, x, INF)
    for y in Y:
        net.add_arc(y, t, INF)
    value = net.max_flow(s, t, limit=k)
    if value > k:
        return None
    side = net.residual_from(s)
    # edgeless (singleton) blocks sit on the cut for free but change nothing
    Z = tuple(
        i
        for i in range(nb)
        if n + 2 * i in side and n + 2 * i + 1 not in side and len(P.blocks[i]) > 1
    )
    cut = frozenset(e for i in Z for e in P.block_edges(G, i))
    weight = sum(P.weights[i] for i in Z)
    assert weight == value
    return ConstrainedSolution(Z, cut, weight)
