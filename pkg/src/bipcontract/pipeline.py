"""End-to-end Bipartite Contraction solver."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable

from .compression import solve_bcc
from .derand import solve_deterministic
from .graph import (
    Graph,
    compact,
    contract,
    is_bipartite,
    is_proper_coloring,
    modulator_to_contraction,
)
from .oct import find_oct, oct_bipartition
from .oracle import brute_bc
from .rank_cut import DEFAULT_ITER_CAP, solve_randomized

ALGOS = ("randomized", "deterministic", "oracle")
ALIASES = {"rand": "randomized", "derand": "deterministic"}


@dataclass
class Witness:
    contract_edges: frozenset[int]
    coloring: list[int]  # indexed by vertex of G/F, in contraction-map order
    cmap: list[int]
    trace: dict = field(default_factory=dict)

    def edge_pairs(self, G: Graph) -> list[list[int]]:
        return [list(G.edges[e]) for e in sorted(self.contract_edges)]


@dataclass
class BcResult:
    answer: bool
    witness: Witness | None
    reason: str | None = None
    stats: dict = field(default_factory=dict)


def verify_witness(G: Graph, k: int, F: Iterable[int], coloring: list[int]) -> bool:
    """|F| <= k and ``coloring`` properly 2-colours G/F."""
    F = set(F)
    if len(F) > k or any(not 0 <= e < G.m for e in F):
        return False
    Q, _ = contract(G, F)
    return is_proper_coloring(Q, coloring)


def _witness(G: Graph, F: frozenset[int], trace: dict) -> Witness:
    Q, cmap = contract(G, F)
    col = is_bipartite(Q)
    assert col is not None, "contraction set does not yield a bipartite graph"
    return Witness(F, col, cmap, trace)


def solve_bc(
    G: Graph,
    k: int,
    algo: str = "deterministic",
    seed: int = 0,
    max_iters: int | None = None,
    iter_cap: int = DEFAULT_ITER_CAP,
    max_pairs: int | None = None,
    workers: int = 1,
) -> BcResult:
    """Decide whether at most k contractions make G bipartite."""
    if k < 0:
        raise ValueError("k must be non-negative")
    algo = ALIASES.get(algo, algo)
    if algo not in ALGOS:
        raise ValueError(f"unknown algorithm {algo!r}")
    start = time.perf_counter()
    stats: dict = {"algo": algo}

    def done(F: frozenset[int] | None, reason: str | None = None, **trace) -> BcResult:
        stats["wall_ms"] = round((time.perf_counter() - start) * 1000, 3)
        if F is None:
            return BcResult(False, None, reason, stats)
        w = _witness(G, F, {"algo": algo, **trace})
        assert verify_witness(G, k, w.contract_edges, w.coloring)
        return BcResult(True, w, None, stats)

    if k == 0 or algo == "oracle":
        if algo == "oracle":
            F = brute_bc(G, k)
        else:
            F = frozenset() if is_bipartite(G) is not None else None
        return done(F, None if F is not None else "no-solution")

    # isolated vertices play no part; edge ids survive compaction
    Gc, _ = compact(G)
    oct_res = find_oct(Gc, 2 * k)
    if oct_res is None:
        return done(None, "oct-exceeds-2k")
    S1, S2 = oct_bipartition(Gc, oct_res)
    stats["oct_size"] = len(oct_res.X)

    if algo == "randomized":
        def backend(inst, idx):
            return solve_randomized(inst, seed=seed, max_iters=max_iters, cap=iter_cap, stream=idx)
    else:
        def backend(inst, idx):
            return solve_deterministic(inst, max_pairs=max_pairs)

    out = solve_bcc(Gc, k, oct_res.X, backend, S1, S2, workers=workers)
    stats.update(
        partitions_tried=out.partitions_tried,
        partitions_total=1 << len(oct_res.X),
        iterations=out.iterations,
        solspan_checks=out.solspan_checks,
    )
    if out.modulator is None:
        return done(None, "budget-exhausted" if out.exhausted else "no-solution")
    F = modulator_to_contraction(Gc, out.modulator, k)
    return done(F, partition=out.partition_index, modulator=sorted(out.modulator))
