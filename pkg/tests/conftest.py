"""Shared test helpers: independent oracles and small instance factories.

The oracles here deliberately use different algorithms from the package
(Floyd-Warshall instead of truncated BFS, full double loops instead of
ball scans) so that agreement is meaningful.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from tonelab.graph import Graph

INF = float("inf")


def floyd_warshall(g: Graph) -> list[list[float]]:
    n = g.n
    dist = [[INF] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for u, v in g.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def naive_verify(g: Graph, labels: list[tuple[int, ...]]) -> bool:
    """Double loop over all pairs with untruncated distances."""
    dist = floyd_warshall(g)
    n = g.n
    for u in range(n):
        su = set(labels[u])
        for v in range(u + 1, n):
            d = dist[u][v]
            if d == INF:
                continue
            if len(su & set(labels[v])) >= d:
                return False
    return True


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_labeling(n: int, t: int, k: int, rng: random.Random) -> list[tuple[int, ...]]:
    pool = list(combinations(range(1, k + 1), t))
    return [pool[rng.randrange(len(pool))] for _ in range(n)]


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
