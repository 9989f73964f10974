"""Exhaustive reference solvers.

These are straight transcriptions of the definitions with no cleverness, so
that they can serve as ground truth for the real solvers at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Graph, contraction_is_bipartite, is_cut, m_rank, reachable
from .impsep import SeparatorRecord, is_separator, reach_of


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 16
    max_k: int = 8
    max_subsets: int = 2_000_000

    def check(self, n: int, k: int, subsets: int) -> None:
        if n > self.max_n:
            raise BudgetExceeded(f"n={n} exceeds oracle limit {self.max_n}")
        if k > self.max_k:
            raise BudgetExceeded(f"k={k} exceeds oracle limit {self.max_k}")
        if subsets > self.max_subsets:
            raise BudgetExceeded(f"{subsets} subsets exceed oracle limit {self.max_subsets}")


DEFAULT_BUDGET = OracleBudget()


def _count_upto(m: int, k: int) -> int:
    return sum(comb(m, i) for i in range(min(k, m) + 1))


def brute_bc(G: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> frozenset[int] | None:
    """Some F with |F| <= k and G/F bipartite, smallest first; None if none."""
    budget.check(G.n, k, _count_upto(G.m, k))
    for size in range(min(k, G.m) + 1):
        for F in combinations(range(G.m), size):
            if contraction_is_bipartite(G, F):
                return frozenset(F)
    return None


def cut_sides(G: Graph, X, Y):
    """Yield every U with X <= U <= V - Y."""
    X, Y = set(X), set(Y)
    free = [v for v in range(G.n) if v not in X and v not in Y]
    for mask in range(1 << len(free)):
        yield X | {free[i] for i in range(len(free)) if mask >> i & 1}


def boundary(G: Graph, U) -> frozenset[int]:
    return frozenset(e for e, (u, v) in enumerate(G.edges) if (u in U) != (v in U))


def brute_rank_cut(G: Graph, k: int, X, Y, M, budget: OracleBudget = DEFAULT_BUDGET):
    """An X-Y cut of M-rank <= k, or None.

    Every cut contains the boundary of the set reachable from X, and M-rank
    only grows with supersets, so boundaries of sides are enough.
    """
    X, Y = set(X), set(Y)
    if X & Y:
        raise ValueError("X and Y intersect")
    free = G.n - len(X | Y)
    budget.check(G.n, k, 1 << free)
    for U in cut_sides(G, X, Y):
        C = boundary(G, U)
        if m_rank(G, C, M) <= k:
            return C
    return None


def minimal_rank_cuts(G: Graph, k: int, X, Y, M, budget: OracleBudget = DEFAULT_BUDGET):
    """All inclusion-minimal X-Y cuts of M-rank <= k."""
    X, Y = set(X), set(Y)
    budget.check(G.n, k, 1 << (G.n - len(X | Y)))
    out = set()
    for U in cut_sides(G, X, Y):
        C = boundary(G, U)
        if C in out or m_rank(G, C, M) > k:
            continue
        if all(not is_cut(G, X, Y, C - {e}) for e in C):
            out.add(C)
    return sorted(out, key=lambda c: (len(c), sorted(c)))


def brute_important(G: Graph, X, Y, k: int, budget: OracleBudget = DEFAULT_BUDGET):
    """Important X-Y separators of size <= k, by the definition."""
    X, Y = set(X), set(Y)
    if X & Y:
        raise ValueError("X and Y intersect")
    pool = [v for v in range(G.n) if v not in X and v not in Y]
    budget.check(G.n, k, _count_upto(len(pool), k))
    seps = []
    for size in range(min(k, len(pool)) + 1):
        for S in combinations(pool, size):
            if is_separator(G, X, Y, S):
                seps.append((frozenset(S), reach_of(G, X, S)))
    sep_sets = {S for S, _ in seps}
    out = []
    for S, R in seps:
        if any(S - {v} in sep_sets for v in S):
            continue
        if any(len(S2) <= len(S) and R < R2 for S2, R2 in seps):
            continue
        out.append(SeparatorRecord(S, R))
    out.sort(key=lambda r: (len(r.S), r.key()))
    return out
