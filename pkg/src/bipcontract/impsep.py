"""Important X-Y vertex separators.

A separator S is *important* when it is inclusion-wise minimal and no other
separator of size at most |S| reaches a strict superset of what S reaches
from X. There are at most 4^k of size <= k; they are enumerated here by the
usual two-way branching on a vertex of the furthest minimum separator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .flow import SeparatorNetwork
from .graph import Graph, reachable


@dataclass(frozen=True)
class SeparatorRecord:
    S: frozenset[int]
    reach: frozenset[int]

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.S))


def _adjacency(G: Graph) -> list[list[int]]:
    return [[w for w, _ in a] for a in G.adj]


def _check_disjoint(X: set[int], Y: set[int]) -> None:
    if X & Y:
        raise ValueError(f"X and Y intersect: {sorted(X & Y)}")


def reach_of(G: Graph, X: Iterable[int], S: Iterable[int]) -> frozenset[int]:
    """Reach(X, S): vertices reachable from X once S is deleted."""
    return frozenset(reachable(G, X, blocked_vertices=S))


def min_separator(
    G: Graph, X: Iterable[int], Y: Iterable[int]
) -> tuple[int, SeparatorRecord] | None:
    """Minimum X-Y separator with the smallest reach, or None if X and Y
    are adjacent (no separator exists)."""
    X, Y = set(X), set(Y)
    _check_disjoint(X, Y)
    net = SeparatorNetwork(G.n, _adjacency(G), X, Y)
    value = net.solve(limit=G.n)
    if value > G.n:
        return None
    S = frozenset(net.closest_cut())
    return value, SeparatorRecord(S, reach_of(G, X, S))


def is_separator(G: Graph, X: Iterable[int], Y: Iterable[int], S: Iterable[int]) -> bool:
    S = set(S)
    if S & (set(X) | set(Y)):
        return False
    return not (reachable(G, X, blocked_vertices=S) & set(Y))


def is_minimal_separator(G: Graph, X, Y, S) -> bool:
    S = set(S)
    if not is_separator(G, X, Y, S):
        return False
    return all(not is_separator(G, X, Y, S - {v}) for v in S)


def is_important(G: Graph, X: Iterable[int], Y: Iterable[int], S: Iterable[int]) -> bool:
    """Flow-based importance test.

    Every separator reaching at least R = Reach(X, S) is an R-Y separator,
    and one reaching exactly R contains N(R) = S. So S is important iff it is
    minimal, is a minimum R-Y separator, and is the furthest such.
    """
    X, Y, S = set(X), set(Y), frozenset(S)
    if not is_minimal_separator(G, X, Y, S):
        return False
    R = reachable(G, X, blocked_vertices=S)
    net = SeparatorNetwork(G.n, _adjacency(G), R, Y)
    if net.solve(limit=len(S)) != len(S):
        return False
    return net.furthest_cut() == S


def _candidates(G, adj, X, Y, removed, budget, prefix, out):
    net = SeparatorNetwork(G.n, adj, X, Y, removed=removed)
    lam = net.solve(limit=budget)
    if lam > budget:
        return
    if lam == 0:
        out.add(prefix)
        return
    far = net.furthest_cut()
    v = min(far)
    # either v is in the separator ...
    _candidates(G, adj, X, Y, removed | {v}, budget - 1, prefix | {v}, out)
    # ... or it is pushed to the X side, beyond the furthest min separator
    far_reach = reachable(G, X, blocked_vertices=far | removed)
    _candidates(G, adj, far_reach | {v}, Y, removed, budget, prefix, out)


def enumerate_important(
    G: Graph, X: Iterable[int], Y: Iterable[int], k: int
) -> list[SeparatorRecord]:
    """All important X-Y separators of size at most k, sorted by (size, ids)."""
    X, Y = set(X), set(Y)
    _check_disjoint(X, Y)
    adj = _adjacency(G)
    found: set[frozenset[int]] = set()
    _candidates(G, adj, frozenset(X), frozenset(Y), frozenset(), k, frozenset(), found)
    records = [
        SeparatorRecord(S, reach_of(G, X, S))
        for S in found
        if is_important(G, X, Y, S)
    ]
    records.sort(key=lambda r: (len(r.S), r.key()))
    assert len(records) <= 4**k, "important separator count exceeds 4^k"
    return records


def important_union(G: Graph, X: Iterable[int], Y: Iterable[int], k: int) -> set[int]:
    """Union of all important X-Y separators of size at most k."""
    out: set[int] = set()
    for rec in enumerate_important(G, X, Y, k):
        out |= rec.S
    return out
