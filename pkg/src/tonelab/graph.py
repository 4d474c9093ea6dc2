"""Undirected simple graphs: adjacency-list substrate and distance queries.

Vertices are dense 0-based integers. Graphs are immutable after
construction; every operation returns a new object. Distance queries are
truncated at a caller-chosen radius because tone constraints never bind
beyond distance t.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Malformed graph input (loops, duplicates, out-of-range ids)."""


class Graph:
    """Undirected simple graph on vertices 0..n-1 with sorted adjacency lists."""

    __slots__ = ("n", "adjacency", "m", "_adj_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            m += 1
        for lst in adj:
            lst.sort()
        self.n = n
        self.adjacency = adj
        self.m = m
        self._adj_sets: list[set[int]] | None = None

    @property
    def adj_sets(self) -> list[set[int]]:
        """Per-vertex neighbor sets, built lazily for O(1) membership tests."""
        if self._adj_sets is None:
            self._adj_sets = [set(nbrs) for nbrs in self.adjacency]
        return self._adj_sets

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v."""
        out = []
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    out.append((u, v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adjacency == other.adjacency
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass
class MultiGraph:
    """Multigraph as a plain edge multiset; loops permitted.

    Kept distinct from Graph so that pairing-model output must be
    explicitly simplified or validated before simple-graph algorithms
    see it.
    """

    n: int
    edges: list[tuple[int, int]]

    def degree(self, v: int) -> int:
        """Non-loop incidences plus two per loop."""
        d = 0
        for a, b in self.edges:
            if a == v and b == v:
                d += 2
            elif a == v or b == v:
                d += 1
        return d

    def degrees(self) -> list[int]:
        out = [0] * self.n
        for a, b in self.edges:
            out[a] += 1
            out[b] += 1
        return out

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self.edges:
            if a == b:
                return False
            key = (a, b) if a < b else (b, a)
            if key in seen:
                return False
            seen.add(key)
        return True

    def to_graph(self, strict: bool = True) -> Graph:
        """Collapse to a simple Graph.

        strict=True raises GraphError on loops or parallel edges;
        strict=False drops loops and deduplicates.
        """
        if strict:
            if not self.is_simple():
                raise GraphError("multigraph is not simple")
            return Graph(self.n, self.edges)
        simple = {(a, b) if a < b else (b, a) for a, b in self.edges if a != b}
        return Graph(self.n, sorted(simple))


@dataclass
class DistanceOracle:
    """Exact distances for every vertex pair at distance in [1, radius].

    Pairs absent from the table are farther than radius (or disconnected).
    Keys are (min(u,v), max(u,v)).
    """

    graph: Graph
    radius: int
    table: dict[tuple[int, int], int]

    def distance(self, u: int, v: int) -> int | None:
        if u == v:
            return 0
        key = (u, v) if u < v else (v, u)
        return self.table.get(key)


def max_degree(g: Graph) -> int:
    """Largest vertex degree; 0 for an edgeless graph."""
    if g.n == 0:
        return 0
    return max(len(nbrs) for nbrs in g.adjacency)


def bfs_ball(g: Graph, source: int, radius: int) -> dict[int, int]:
    """Distances from source to every vertex within the given radius.

    Returns {vertex: distance}, including the source at distance 0.
    """
    dist = {source: 0}
    frontier = deque([source])
    adj = g.adjacency
    while frontier:
        u = frontier.popleft()
        du = dist[u]
        if du == radius:
            continue
        for w in adj[u]:
            if w not in dist:
                dist[w] = du + 1
                frontier.append(w)
    return dist


def truncated_distances(g: Graph, radius: int) -> DistanceOracle:
    """Per-vertex BFS cut off at the radius; exact within it."""
    if radius < 1:
        raise ValueError(f"radius must be >= 1, got {radius}")
    table: dict[tuple[int, int], int] = {}
    for u in range(g.n):
        for w, d in bfs_ball(g, u, radius).items():
            if u < w:
                table[(u, w)] = d
    return DistanceOracle(g, radius, table)


def multi_source_distances(g: Graph, sources: Iterable[int], radius: int | None = None) -> dict[int, int]:
    """Distance from each vertex to the nearest source, out to radius (or everywhere)."""
    dist: dict[int, int] = {}
    frontier = deque()
    for s in sources:
        if s not in dist:
            dist[s] = 0
            frontier.append(s)
    adj = g.adjacency
    while frontier:
        u = frontier.popleft()
        du = dist[u]
        if radius is not None and du == radius:
            continue
        for w in adj[u]:
            if w not in dist:
                dist[w] = du + 1
                frontier.append(w)
    return dist


def power_graph(g: Graph, i: int) -> Graph:
    """Graph with an edge for every pair at distance in [1, i] of g."""
    if i < 1:
        raise ValueError(f"power must be >= 1, got {i}")
    if i == 1:
        return Graph(g.n, g.edges())
    edges = []
    for u in range(g.n):
        for w, d in bfs_ball(g, u, i).items():
            if u < w and d >= 1:
                edges.append((u, w))
    return Graph(g.n, edges)


def neighborhood_shell(g: Graph, Z: Iterable[int], i: int) -> set[int]:
    """Vertices outside Z whose distance to Z is exactly i (multi-source BFS)."""
    if i < 1:
        raise ValueError(f"shell index must be >= 1, got {i}")
    dist = multi_source_distances(g, Z, radius=i)
    return {v for v, d in dist.items() if d == i}


def components(g: Graph) -> list[set[int]]:
    """Connected components as vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    adj = g.adjacency
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def is_forest(g: Graph) -> bool:
    """True iff m = n - (number of connected components)."""
    return g.m == g.n - len(components(g))


def find_cycle(g: Graph) -> list[int] | None:
    """Some simple cycle as a vertex list, or None if g is a forest.

    DFS forest with parents assigned at push time; the first non-tree edge
    closes a cycle through the lowest common ancestor of its endpoints.
    """
    parent = [-2] * g.n  # -2 unvisited, -1 root
    adj = g.adjacency
    for s in range(g.n):
        if parent[s] != -2:
            continue
        parent[s] = -1
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if parent[w] == -2:
                    parent[w] = u
                    stack.append(w)
                elif w != parent[u]:
                    # non-tree edge (u, w): splice the two root paths at the LCA
                    depth_of = {}
                    x = u
                    chain = []
                    while x != -1:
                        depth_of[x] = len(chain)
                        chain.append(x)
                        x = parent[x]
                    y = w
                    side = []
                    while y not in depth_of:
                        side.append(y)
                        y = parent[y]
                    cycle = chain[: depth_of[y] + 1]  # u .. lca
                    cycle.extend(reversed(side))  # lca's child .. w
                    return cycle
    return None


def induced_subgraph(g: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on S with vertices relabeled 0..|S|-1.

    Returns (subgraph, old_to_new). Relabeling is by ascending old id, so
    new_to_old is recovered by sorting S.
    """
    keep = sorted(set(S))
    old_to_new = {v: i for i, v in enumerate(keep)}
    edges = []
    for v in keep:
        nv = old_to_new[v]
        for w in g.adjacency[v]:
            nw = old_to_new.get(w)
            if nw is not None and nv < nw:
                edges.append((nv, nw))
    return Graph(len(keep), edges), old_to_new


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Star with a center (vertex 0) and the given number of leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [])


def diameter_at_most(g: Graph, bound: int) -> bool:
    """True iff g is connected and every pair is within the bound."""
    if g.n <= 1:
        return True
    for u in range(g.n):
        if len(bfs_ball(g, u, bound)) < g.n:
            return False
    return True
