"""Augmenting-path max-flow with vertex capacities.

Budgets in this package are tiny, so the flow is only ever pushed up to a
limit: :meth:`FlowNetwork.max_flow` stops once the value exceeds ``limit``.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping, Sequence

INF = 1 << 40


class FlowNetwork:
    """Directed network with paired residual arcs (arc ``a`` and ``a ^ 1``)."""

    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n_nodes)]

    def add_arc(self, u: int, v: int, cap: int) -> int:
        a = len(self.head)
        self.head += (v, u)
        self.cap += (cap, 0)
        self.out[u].append(a)
        self.out[v].append(a + 1)
        return a

    def max_flow(self, s: int, t: int, limit: int = INF) -> int:
        """Push flow from s to t until none is left or the value exceeds
        ``limit``. Returns the value pushed (at most ``limit + 1`` when
        capped, give or take the last bottleneck)."""
        flow = 0
        head, cap, out = self.head, self.cap, self.out
        while flow <= limit:
            pred = [-1] * self.n
            pred[s] = -2
            queue = deque([s])
            found = False
            while queue and not found:
                u = queue.popleft()
                for a in out[u]:
                    if cap[a] > 0:
                        w = head[a]
                        if pred[w] == -1:
                            pred[w] = a
                            if w == t:
                                found = True
                                break
                            queue.append(w)
            if not found:
                break
            bottleneck = INF
            w = t
            while w != s:
                a = pred[w]
                if cap[a] < bottleneck:
                    bottleneck = cap[a]
                w = head[a ^ 1]
            w = t
            while w != s:
                a = pred[w]
                cap[a] -= bottleneck
                cap[a ^ 1] += bottleneck
                w = head[a ^ 1]
            flow += bottleneck
        return flow

    def residual_from(self, s: int) -> set[int]:
        """Nodes reachable from s in the residual network."""
        seen = {s}
        stack = [s]
        head, cap = self.head, self.cap
        while stack:
            u = stack.pop()
            for a in self.out[u]:
                if cap[a] > 0 and head[a] not in seen:
                    seen.add(head[a])
                    stack.append(head[a])
        return seen

    def residual_to(self, t: int) -> set[int]:
        """Nodes that can reach t in the residual network."""
        seen = {t}
        stack = [t]
        head, cap = self.head, self.cap
        while stack:
            u = stack.pop()
            for a in self.out[u]:
                # a is u -> w; the residual arc w -> u is a ^ 1
                w = head[a]
                if cap[a ^ 1] > 0 and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen


class SeparatorNetwork:
    """Vertex-split network for X-Y vertex separators.

    Vertex v becomes ``in = 2v`` and ``out = 2v + 1`` joined by an arc of the
    vertex's capacity. ``capacity`` maps vertex -> capacity; unlisted vertices
    default to ``default_cap``; X and Y are always uncuttable. Vertices in
    ``removed`` are left out entirely.
    """

    def __init__(
        self,
        n: int,
        adj: Sequence[Iterable[int]],
        X: Iterable[int],
        Y: Iterable[int],
        removed: Iterable[int] = (),
        capacity: Mapping[int, int] | None = None,
        default_cap: int = 1,
    ):
        self.n = n
        self.X = set(X)
        self.Y = set(Y)
        self.removed = set(removed)
        self.source = 2 * n
        self.sink = 2 * n + 1
        net = FlowNetwork(2 * n + 2)
        capacity = capacity or {}
        for v in range(n):
            if v in self.removed:
                continue
            if v in self.X or v in self.Y:
                c = INF
            else:
                c = capacity.get(v, default_cap)
            net.add_arc(2 * v, 2 * v + 1, c)
            for w in adj[v]:
                if w not in self.removed:
                    net.add_arc(2 * v + 1, 2 * w, INF)
        for x in self.X - self.removed:
            net.add_arc(self.source, 2 * x, INF)
        for y in self.Y - self.removed:
            net.add_arc(2 * y + 1, self.sink, INF)
        self.net = net
        self.value: int | None = None

    def solve(self, limit: int = INF) -> int:
        self.value = self.net.max_flow(self.source, self.sink, limit)
        return self.value

    def closest_cut(self) -> set[int]:
        """Minimum separator with the smallest X side."""
        side = self.net.residual_from(self.source)
        return {
            v
            for v in range(self.n)
            if v not in self.removed and 2 * v in side and 2 * v + 1 not in side
        }

    def furthest_cut(self) -> set[int]:
        """Minimum separator with the largest X side."""
        side = self.net.residual_to(self.sink)
        return {
            v
            for v in range(self.n)
            if v not in self.removed and 2 * v not in side and 2 * v + 1 in side
        }
