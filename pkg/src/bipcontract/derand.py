"""Deterministic Rank-Cut via splitter families.

A splitter here is the family ``e -> e mod q`` over enough primes q: for any
s-set, each pair of its elements differs by some d < n', which has at most
omega(d) prime divisors, so among ``C(s, 2) * max omega + 1`` primes one
divides no difference and is injective on the set. Any prime q >= n' is
injective on everything, so the list stops there.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .rank_cut import (
    RankCutInstance,
    RankCutOutcome,
    _Evaluator,
    compact_instance,
    relevant_edges,
)


@dataclass(frozen=True)
class SplitterFamily:
    n: int
    s: int
    moduli: tuple[int, ...]

    @property
    def t(self) -> int:
        return max(self.moduli)

    def __len__(self) -> int:
        return len(self.moduli)

    def __iter__(self) -> Iterator[int]:
        return iter(self.moduli)

    @staticmethod
    def apply(q: int, x: int) -> int:
        return x % q

    def splits(self, S) -> bool:
        """True if some member is injective on S."""
        S = list(S)
        return any(len({x % q for x in S}) == len(S) for q in self.moduli)


def _primes() -> Iterator[int]:
    found: list[int] = []
    c = 2
    while True:
        if all(c % p for p in found if p * p <= c):
            found.append(c)
            yield c
        c += 1


def _max_omega(limit: int) -> int:
    """Largest number of distinct prime factors of any 1 <= d < limit."""
    best, prod = 0, 1
    for p in _primes():
        if prod * p >= limit:
            return best
        prod *= p
        best += 1


def build_splitter(n: int, s: int) -> SplitterFamily:
    """A family of maps [n] -> [t] with a member injective on every s-set."""
    if s < 1 or s > n:
        raise ValueError(f"need 1 <= s <= n, got s={s}, n={n}")
    if s == 1 or s == n:
        return SplitterFamily(n, s, (n,))
    needed = (s * (s - 1) // 2) * _max_omega(n) + 1
    moduli = []
    for q in _primes():
        moduli.append(q)
        if q >= n or len(moduli) == needed:
            break
    return SplitterFamily(n, s, tuple(moduli))


def colorings(family: SplitterFamily, width: int, k: int) -> Iterator[tuple[int, frozenset[int]]]:
    """Black index sets ``{i : f(i) in U}`` for every f and |U| <= k.

    Elements of U outside the image of f add nothing, so U is drawn from the
    image only. Yields (pair_number, black_set); repeats are not filtered.
    """
    count = 0
    for q in family:
        fibres: dict[int, list[int]] = {}
        for i in range(width):
            fibres.setdefault(i % q, []).append(i)
        values = sorted(fibres)
        for size in range(min(k, len(values)) + 1):
            for U in combinations(values, size):
                count += 1
                yield count, frozenset(i for u in U for i in fibres[u])


def solve_deterministic(inst: RankCutInstance, max_pairs: int | None = None) -> RankCutOutcome:
    """Exact Rank-Cut by trying every splitter-derived colouring.

    With ``max_pairs`` set, the search stops after that many (f, U) pairs and
    a "no" is reported as ``exhausted`` rather than exact.
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

    s = min(inst.k + 6 * inst.k * rel.d_act, len(free))
    family = build_splitter(len(free), s)
    stats.update(mode="splitter", s=s, family=len(family), t=family.t)
    seen: set[frozenset[int]] = set()
    pairs = 0
    for pairs, black in colorings(family, len(free), inst.k):
        if max_pairs is not None and pairs > max_pairs:
            stats.update(pairs=pairs - 1, solves=ev.solves, solspan_checks=ev.solspan_checks)
            return RankCutOutcome(None, pairs - 1, True, stats)
        if black in seen:
            continue
        seen.add(black)
        sol = ev([free[i] for i in black])
        if sol is not None:
            stats.update(pairs=pairs, solves=ev.solves, solspan_checks=ev.solspan_checks)
            return RankCutOutcome(sol.cut, pairs, False, stats)
    stats.update(pairs=pairs, solves=ev.solves, solspan_checks=ev.solspan_checks)
    return RankCutOutcome(None, pairs, False, stats)
