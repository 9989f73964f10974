"""Randomized solver for Rank-Cut.

Rank-Cut asks for an X-Y cut C whose M-rank is at most k. The solver keeps
only *relevant* edges (those hit by small important separators around both
endpoints in the subdivided graph), colours each relevant non-M edge black
with a small probability, and asks the block-constrained solver whether the
components of black + M edges can be assembled into a cheap cut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .constrained_cut import BlockPartition, partition_from_edges, solve_constrained
from .graph import Graph, compact, is_cut, m_rank, solspan_holds, subdivide
from .impsep import important_union

DEFAULT_ITER_CAP = 10**6


@dataclass(frozen=True)
class RankCutInstance:
    G: Graph
    k: int
    X: frozenset[int]
    Y: frozenset[int]
    M: frozenset[int]

    def __init__(self, G: Graph, k: int, X: Iterable[int], Y: Iterable[int], M: Iterable[int] = ()):
        object.__setattr__(self, "G", G)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "X", frozenset(X))
        object.__setattr__(self, "Y", frozenset(Y))
        object.__setattr__(self, "M", frozenset(M))
        if self.X & self.Y:
            raise ValueError("X and Y intersect")
        if len(self.M) > 2 * k:
            raise ValueError(f"|M| = {len(self.M)} exceeds 2k = {2 * k}")


@dataclass(frozen=True)
class RelevantEdges:
    edges: frozenset[int]
    per_vertex: tuple[frozenset[int], ...]
    d_act: int


@dataclass(frozen=True)
class Coloring:
    black: frozenset[int]
    E_b: frozenset[int]
    partition: BlockPartition


@dataclass
class RankCutOutcome:
    cut: frozenset[int] | None
    iterations: int = 0
    exhausted: bool = False  # True when "no" only means the budget ran out
    stats: dict = field(default_factory=dict)


def verify_cut(inst: RankCutInstance, C: Iterable[int]) -> bool:
    C = set(C)
    return is_cut(inst.G, inst.X, inst.Y, C) and m_rank(inst.G, C, inst.M) <= inst.k


def relevant_edges(inst: RankCutInstance) -> RelevantEdges:
    """Edges uv whose subdivision vertex lies in a small important separator
    around u and also in one around v."""
    G, k = inst.G, inst.k
    sub, z = subdivide(G)
    budget = 6 * k
    per_vertex = []
    for u in range(G.n):
        if not G.adj[u]:
            per_vertex.append(frozenset())
            continue
        hit: set[int] = set()
        for A in (inst.X, inst.Y):
            if u not in A:
                hit |= important_union(sub, A, {u}, budget)
        per_vertex.append(frozenset(e for _, e in G.adj[u] if z[e] in hit))
    rel = frozenset(
        e for e, (u, v) in enumerate(G.edges) if e in per_vertex[u] and e in per_vertex[v]
    )
    deg = [0] * G.n
    for e in rel:
        u, v = G.edges[e]
        deg[u] += 1
        deg[v] += 1
    d_act = max(deg, default=0)
    assert d_act <= 12 * k * 4 ** (6 * k)
    return RelevantEdges(rel, tuple(per_vertex), d_act)


def black_probability(k: int, d_act: int) -> float:
    if k == 0 or d_act == 0:
        return 1.0
    return 1.0 / (6 * k * d_act)


def default_iterations(k: int, d_act: int, cap: int = DEFAULT_ITER_CAP) -> int:
    p = black_probability(k, d_act)
    if p >= 1.0:
        return 1
    return int(min(math.ceil(4.0 / p**k), cap))


def random_coloring(
    inst: RankCutInstance,
    rel: RelevantEdges,
    rng: np.random.Generator,
    p: float | None = None,
) -> Coloring:
    """One random colouring of the relevant non-M edges.

    ``p`` defaults to 1 / (6 k d_act).
    """
    if p is None:
        p = black_probability(inst.k, rel.d_act)
    free = sorted(rel.edges - inst.M)
    draws = rng.random(len(free)) < p
    black = frozenset(e for e, b in zip(free, draws) if b)
    E_b = black | inst.M
    return Coloring(black, E_b, partition_from_edges(inst.G, E_b, inst.M))


class _Evaluator:
    """Solve the constrained instance for a given black set, with caching.

    Identical black sets (and identical partitions) always give identical
    answers, so each is solved once.
    """

    def __init__(self, inst: RankCutInstance, free: Sequence[int]):
        self.inst = inst
        self.free = list(free)
        self.by_partition: dict[tuple[int, ...], object] = {}
        self.solves = 0
        self.solspan_checks = 0

    def __call__(self, black: Iterable[int]):
        inst = self.inst
        P = partition_from_edges(inst.G, black, inst.M)
        key = P.block_of
        if key in self.by_partition:
            return self.by_partition[key]
        self.solves += 1
        sol = solve_constrained(inst.G, inst.k, inst.X, inst.Y, inst.M, P)
        if sol is not None:
            self.check(sol.cut)
        self.by_partition[key] = sol
        return sol

    def check(self, C):
        inst = self.inst
        if not verify_cut(inst, C):  # pragma: no cover - guarded invariant
            raise AssertionError("constrained solution is not a valid rank cut")
        if not solspan_holds(inst.G, C, inst.M, inst.k):  # pragma: no cover
            raise AssertionError("solution spans more than 6k vertices")
        self.solspan_checks += 1


def compact_instance(inst: RankCutInstance) -> RankCutInstance:
    """Drop isolated vertices. Edge ids are unchanged, so cuts carry over."""
    H, keep = compact(inst.G)
    if H.n == inst.G.n:
        return inst
    new = {v: i for i, v in enumerate(keep)}
    return RankCutInstance(
        H,
        inst.k,
        [new[x] for x in inst.X if x in new],
        [new[y] for y in inst.Y if y in new],
        inst.M,
    )


def _sample_marks(rng: np.random.Generator, n_iters: int, width: int, p: float):
    """Black marks of ``n_iters`` independent colourings of ``width`` edges.

    Bernoulli(p) trials over the flattened (iteration, edge) grid, drawn by
    geometric gaps. Returns parallel arrays (iteration, edge index).
    """
    total = n_iters * width
    chunks = []
    pos = -1
    while True:
        size = int((total - pos) * p * 1.2) + 64
        gaps = rng.geometric(p, size=size)
        marks = pos + np.cumsum(gaps)
        chunks.append(marks)
        pos = int(marks[-1])
        if pos >= total:
            break
    marks = np.concatenate(chunks)
    marks = marks[marks < total]
    return marks // width, marks % width


def _group_black_sets(it, ed, n_iters):
    """Distinct black sets with their first iteration and multiplicity.

    Returns a list of (first_iteration, count, edge_index_tuple), including
    the empty set when some iteration has no black edge.
    """
    out = []
    if len(it):
        starts = np.flatnonzero(np.r_[True, it[1:] != it[:-1]])
        iters = it[starts]
        bounds = np.r_[starts, len(it)].tolist()
        groups: dict[tuple[int, ...], list[int]] = {}
        ed_list = ed.tolist()
        for j, first in enumerate(iters.tolist()):
            key = tuple(ed_list[bounds[j] : bounds[j + 1]])
            g = groups.get(key)
            if g is None:
                groups[key] = [first, 1]
            else:
                g[1] += 1
        out.extend((f, c, key) for key, (f, c) in groups.items())
        busy = len(iters)
        gap = np.flatnonzero(iters != np.arange(busy))
        first_empty = int(gap[0]) if len(gap) else busy
    else:
        busy, first_empty = 0, 0
    if busy < n_iters:
        out.append((first_empty, n_iters - busy, ()))
    out.sort()
    return out


def _rng(seed: int, stream: int) -> np.random.Generator:
    return np.random.default_rng([seed, stream])


def solve_randomized(
    inst: RankCutInstance,
    seed: int = 0,
    max_iters: int | None = None,
    cap: int = DEFAULT_ITER_CAP,
    stream: int = 0,
) -> RankCutOutcome:
    """Repeat colour-and-solve until a cut is found or the budget runs out.

    A returned cut is always valid; ``None`` with ``exhausted`` set is a
    probabilistic "no". Repeated black sets are solved once and the reported
    iteration count is that of the first successful colouring.
    """
    inst = compact_instance(inst)
    stats: dict = {}
    if inst.k == 0:
        ev = _Evaluator(inst, [])
        sol = ev(())
        stats.update(mode="k0", solspan_checks=ev.solspan_checks)
        return RankCutOutcome(sol.cut if sol else None, 1, False, stats)
    rel = relevant_edges(inst)
    free = sorted(rel.edges - inst.M)
    ev = _Evaluator(inst, free)
    stats.update(d_act=rel.d_act, relevant=len(rel.edges))
    if not free:
        sol = ev(())
        stats.update(mode="no-free-edges", solspan_checks=ev.solspan_checks)
        return RankCutOutcome(sol.cut if sol else None, 1, False, stats)

    p = black_probability(inst.k, rel.d_act)
    n_iters = max_iters if max_iters is not None else default_iterations(inst.k, rel.d_act, cap)
    stats.update(mode="random", p=p, budget=n_iters)
    it, ed = _sample_marks(_rng(seed, stream), n_iters, len(free), p)
    for first, _count, key in _group_black_sets(it, ed, n_iters):
        sol = ev([free[i] for i in key])
        if sol is not None:
            stats.update(solves=ev.solves, solspan_checks=ev.solspan_checks)
            return RankCutOutcome(sol.cut, first + 1, False, stats)
    stats.update(solves=ev.solves, solspan_checks=ev.solspan_checks)
    return RankCutOutcome(None, n_iters, True, stats)


def iteration_success_count(
    inst: RankCutInstance, n_iters: int, seed: int = 0, p: float | None = None
) -> tuple[int, float]:
    """How many of ``n_iters`` independent colourings lead to a solution.

    Returns (successes, p). Needs k >= 1 and at least one relevant free edge.
    """
    inst = compact_instance(inst)
    rel = relevant_edges(inst)
    free = sorted(rel.edges - inst.M)
    if inst.k == 0 or not free:
        raise ValueError("instance has no random choices")
    if p is None:
        p = black_probability(inst.k, rel.d_act)
    ev = _Evaluator(inst, free)
    it, ed = _sample_marks(_rng(seed, 0), n_iters, len(free), p)
    hits = 0
    for _first, count, key in _group_black_sets(it, ed, n_iters):
        if ev([free[i] for i in key]) is not None:
            hits += count
    return hits, p
