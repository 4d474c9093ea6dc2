"""Seeded instance generators.

All generators are pure functions of their arguments plus an integer seed,
driven by `random.Random` (the stdlib Mersenne Twister, stable across
platforms and releases), so experiment outputs are reproducible
bit-for-bit. Callers parallelize across seeds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from random import Random

from .graph import Graph, MultiGraph


class OddDegreeSum(ValueError):
    pass


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]

    def __post_init__(self):
        if any(d < 0 for d in self.degrees):
            raise ValueError("degrees must be non-negative")
        if sum(self.degrees) % 2 != 0:
            raise OddDegreeSum(f"degree sum {sum(self.degrees)} is odd")

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2


@dataclass(frozen=True)
class HalfEdgePairing:
    """A perfect matching on half-edge points, blocked by vertex.

    Vertex i owns the contiguous point range [block_start[i],
    block_start[i+1]); pairing lists point-index pairs covering every
    point exactly once.
    """

    block_start: tuple[int, ...]
    pairing: tuple[tuple[int, int], ...]

    def vertex_of_point(self, point: int) -> int:
        # binary search over block starts
        lo, hi = 0, len(self.block_start) - 2
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.block_start[mid] <= point:
                lo = mid
            else:
                hi = mid - 1
        return lo

    def to_multigraph(self) -> MultiGraph:
        n = len(self.block_start) - 1
        edges = [
            (self.vertex_of_point(a), self.vertex_of_point(b)) for a, b in self.pairing
        ]
        return MultiGraph(n, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): each pair appears independently with probability p.

    Geometric gap-skipping over the C(n,2) pair sequence runs in expected
    O(n^2 p) time, which is what makes sparse instances at n = 1e5 cheap.
    p = 0 and p = 1 are exact.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    if p == 0.0 or n == 1:
        return Graph(n, [])
    if p == 1.0:
        return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    rng = Random(seed)
    log_q = math.log1p(-p)
    edges = []
    u, v = 0, 0  # current pair cursor (v == u means row start sentinel)
    total = n * (n - 1) // 2
    idx = -1
    while True:
        # jump ahead a geometric number of pairs
        idx += 1 + int(math.log(1.0 - rng.random()) / log_q)
        if idx >= total:
            break
        # decode linear index -> (u, v) walking forward from the cursor
        while True:
            row_len = n - 1 - u
            base = u * (2 * n - u - 1) // 2
            if idx < base + row_len:
                v = u + 1 + (idx - base)
                break
            u += 1
        edges.append((u, v))
    return Graph(n, edges)


def _decode_pruefer(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree encoded by a length n-2 sequence over [0, n)."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0  # smallest index that might still be an unused leaf
    leaf = -1
    for x in seq:
        if leaf == -1:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            leaf = -1
            ptr += 1
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree (Pruefer decoding of a uniform sequence)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph(n, _decode_pruefer(seq, n))


def random_forest(n: int, seed: int, deletions: int | None = None) -> Graph:
    """Random forest: a uniform tree with a few random edges removed."""
    if n < 1:
        raise ValueError("n must be >= 1")
    g = random_tree(n, seed)
    rng = Random(seed ^ 0x5EED)
    if deletions is None:
        deletions = rng.randint(0, 3)
    edges = g.edges()
    rng.shuffle(edges)
    return Graph(n, edges[: max(0, len(edges) - deletions)])


def random_tree_with_max_degree(n: int, delta: int, seed: int) -> Graph:
    """Random tree whose maximum degree is exactly delta.

    Vertex 0 starts as a hub with delta neighbors; remaining vertices
    attach uniformly at random to vertices with residual capacity.
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    if n < delta + 1:
        raise ValueError(f"need n >= delta+1 = {delta + 1} to realize max degree {delta}")
    if delta == 1 and n > 2:
        raise ValueError("max degree 1 forces n <= 2")
    rng = Random(seed)
    edges = [(0, i) for i in range(1, delta + 1)]
    degree = [delta] + [1] * delta
    open_slots = [v for v in range(1, delta + 1)]  # vertices with degree < delta
    for v in range(delta + 1, n):
        i = rng.randrange(len(open_slots))
        host = open_slots[i]
        edges.append((host, v))
        degree[host] += 1
        if degree[host] >= delta:
            open_slots[i] = open_slots[-1]
            open_slots.pop()
        degree.append(1)
        open_slots.append(v)
    return Graph(n, edges)


def configuration_model(d: DegreeSequence, seed: int) -> tuple[MultiGraph, bool]:
    """Random multigraph with the exact degree sequence (loops count twice).

    A uniform perfect matching on the half-edge points is drawn by the
    swap-based sequential pairing; the flag reports whether the collapsed
    multigraph is simple.
    """
    rng = Random(seed)
    total = sum(d.degrees)
    points = list(range(total))
    pairs = []
    for i in range(0, total, 2):
        j = rng.randrange(i + 1, total) if i + 1 < total else i + 1
        points[i + 1], points[j] = points[j], points[i + 1]
        pairs.append((points[i], points[i + 1]))
    block_start = [0]
    for deg in d.degrees:
        block_start.append(block_start[-1] + deg)
    pairing = HalfEdgePairing(tuple(block_start), tuple(pairs))
    mg = pairing.to_multigraph()
    return mg, mg.is_simple()


def is_typical(d: DegreeSequence, c: float, n: int) -> tuple[bool, tuple[bool, bool, bool]]:
    """Three-inequality regularity predicate on a degree sequence.

    1. half the degree sum is at least c*n/3;
    2. the max degree lies in [ln^(3/4) n, ln n];
    3. at most n * ln(n) * exp(-ln^(1/4) n) entries reach the high-degree
       threshold ln^(1/4) n.
    Returns (all three hold, per-property verdicts) since at moderate n
    the lower bound in property 2 is the usual failure and callers need
    to see which clause fired.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    ln_n = math.log(n)
    b0 = ln_n ** 0.25
    max_d = max(d.degrees) if d.degrees else 0
    p1 = 0.5 * sum(d.degrees) >= c * n / 3.0
    p2 = ln_n ** 0.75 <= max_d <= ln_n
    p3 = sum(1 for x in d.degrees if x >= b0) <= n * ln_n * math.exp(-b0)
    return p1 and p2 and p3, (p1, p2, p3)


def planted_hubs(
    hubs: int = 3, hub_degree: int = 12, separation: int = 9
) -> Graph:
    """Deterministic tree with a few high-degree hubs on a long backbone.

    Consecutive hubs sit at the ends of disjoint paths with `separation`
    edges, so hubs are pairwise at distance >= separation; every hub is
    padded with leaves up to hub_degree and every other vertex has degree
    at most 2.
    """
    if hubs < 1 or hub_degree < 1 or separation < 1:
        raise ValueError("hubs, hub_degree, separation must all be >= 1")
    edges: list[tuple[int, int]] = []
    hub_ids = list(range(hubs))
    nxt = hubs
    for i in range(hubs - 1):
        prev = hub_ids[i]
        for _ in range(separation - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, hub_ids[i + 1]))
    for i, h in enumerate(hub_ids):
        used = (0 if i == 0 else 1) + (0 if i == hubs - 1 else 1)
        for _ in range(hub_degree - used):
            edges.append((h, nxt))
            nxt += 1
    return Graph(nxt, edges)
