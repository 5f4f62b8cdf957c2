"""Successive-shortest-path min-cost flow with node potentials."""

from __future__ import annotations

import heapq

INF = float("inf")


class FlowNetwork:
    """Residual graph stored as parallel edge arrays; edge ``e ^ 1`` is the reverse of ``e``."""

    def __init__(self, num_nodes: int):
        self.num_nodes = num_nodes
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []

    def add_arc(self, u: int, v: int, cap: int, cost: int) -> int:
        e = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0]
        self.cost += [cost, -cost]
        self.adj[u].append(e)
        self.adj[v].append(e + 1)
        return e

    def _bellman_ford(self, s: int) -> list[float]:
        dist = [INF] * self.num_nodes
        dist[s] = 0
        for _ in range(self.num_nodes - 1):
            changed = False
            for u in range(self.num_nodes):
                du = dist[u]
                if du == INF:
                    continue
                for e in self.adj[u]:
                    if self.cap[e] > 0 and du + self.cost[e] < dist[self.to[e]]:
                        dist[self.to[e]] = du + self.cost[e]
                        changed = True
            if not changed:
                break
        return dist

    def augmentations(self, s: int, t: int):
        """Yield the cost of each successive unit augmentation from ``s`` to ``t``.

        All capacities are expected to be unit-sized per path; every
        augmentation pushes the bottleneck along a shortest residual path.
        Stops when ``t`` becomes unreachable.
        """
        pot = self._bellman_ford(s)
        pot = [0 if p == INF else p for p in pot]
        to, cap, cost, adj = self.to, self.cap, self.cost, self.adj
        while True:
            dist = [INF] * self.num_nodes
            prev = [-1] * self.num_nodes
            dist[s] = 0
            heap = [(0, s)]
            while heap:
                d, u = heapq.heappop(heap)
                if d > dist[u]:
                    continue
                pu = pot[u]
                for e in adj[u]:
                    if cap[e] <= 0:
                        continue
                    v = to[e]
                    nd = d + cost[e] + pu - pot[v]
                    if nd < dist[v]:
                        dist[v] = nd
                        prev[v] = e
                        heapq.heappush(heap, (nd, v))
            if dist[t] == INF:
                return
            for v in range(self.num_nodes):
                if dist[v] < INF:
                    pot[v] += dist[v]
            push = INF
            v = t
            while v != s:
                e = prev[v]
                push = min(push, cap[e])
                v = to[e ^ 1]
            path_cost = 0
            v = t
            while v != s:
                e = prev[v]
                cap[e] -= push
                cap[e ^ 1] += push
                path_cost += cost[e]
                v = to[e ^ 1]
            for _ in range(push):
                yield path_cost
