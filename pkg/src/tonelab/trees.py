"""Constructive colorings on forests.

The 2-tone colorer achieves the exact optimum palette kappa(max degree) on
every forest: processing vertices in BFS order, a vertex only has to avoid
its parent's colors and differ from its grandparent's and earlier siblings'
labels, and the palette is sized so that enough disjoint labels remain.
For t >= 3 a generic BFS greedy plus unit-step palette escalation gives an
upper bound within a constant factor of sqrt(max degree).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .coloring import DomainError, Label, ToneColoring, kappa, tone_lower_bound
from .graph import Graph, bfs_ball, is_forest, max_degree


class NotAForest(ValueError):
    pass


@dataclass(frozen=True)
class Stuck:
    """Greedy ran out of labels at this vertex with the given palette."""

    vertex: int
    k: int

    def __bool__(self) -> bool:
        return False


@dataclass
class RootedForest:
    """BFS rooting of a forest: parent pointers plus a level order.

    Roots are the smallest vertex id of each component; every non-root
    appears after its parent in bfs_order.
    """

    graph: Graph
    parent: list[int | None]
    bfs_order: list[int]


def root_forest(f: Graph) -> RootedForest:
    if not is_forest(f):
        raise NotAForest("input graph contains a cycle")
    parent: list[int | None] = [None] * f.n
    seen = [False] * f.n
    order: list[int] = []
    adj = f.adjacency
    for root in range(f.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    queue.append(w)
    return RootedForest(f, parent, order)


def color_forest_2tone(f: Graph) -> ToneColoring:
    """Optimal 2-tone coloring of a forest with palette kappa(max degree).

    Each vertex takes the lexicographically-least pair that is disjoint
    from its parent's label and distinct from its grandparent's and
    already-colored siblings' labels. Counting guarantees a choice exists:
    at least (k-2)(k-3)/2 >= max degree pairs avoid the parent, while at
    most (max degree - 1) labels are banned outright.
    """
    delta = max_degree(f)
    if delta < 1:
        raise DomainError("2-tone forest coloring needs at least one edge")
    rooted = root_forest(f)
    k = kappa(delta)
    colors = list(range(1, k + 1))
    labels: list[Label | None] = [None] * f.n
    parent = rooted.parent
    for v in rooted.bfs_order:
        p = parent[v]
        if p is None:
            labels[v] = (1, 2)
            continue
        banned: set[Label] = set()
        gp = parent[p]
        if gp is not None:
            banned.add(labels[gp])
        for sib in f.adjacency[p]:
            if sib != v and labels[sib] is not None and parent[sib] == p:
                banned.add(labels[sib])
        pl = labels[p]
        avail = [c for c in colors if c not in pl]
        choice = None
        for i in range(len(avail)):
            for j in range(i + 1, len(avail)):
                cand = (avail[i], avail[j])
                if cand not in banned:
                    choice = cand
                    break
            if choice:
                break
        if choice is None:  # contradicts the counting argument
            raise AssertionError(f"no label available at vertex {v} with k={k}")
        labels[v] = choice
    return ToneColoring(2, k, labels)


def greedy_t_tone_forest(f: Graph, t: int, k: int) -> ToneColoring | Stuck:
    """BFS-order greedy t-tone coloring of a forest with a fixed palette.

    Each vertex takes the least label whose overlap with every
    already-colored vertex at distance d <= t is below d; returns Stuck at
    the first vertex with no feasible label.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    if k < t:
        raise ValueError(f"palette k={k} smaller than tone t={t}")
    rooted = root_forest(f)
    pool = [(combo, frozenset(combo)) for combo in combinations(range(1, k + 1), t)]
    labels: list[Label | None] = [None] * f.n
    label_sets: list[frozenset[int] | None] = [None] * f.n
    for v in rooted.bfs_order:
        nearby = [
            (label_sets[w], d)
            for w, d in bfs_ball(f, v, t).items()
            if w != v and label_sets[w] is not None
        ]
        choice = None
        for combo, cset in pool:
            if all(len(cset & ws) < d for ws, d in nearby):
                choice = combo
                break
        if choice is None:
            return Stuck(v, k)
        labels[v] = choice
        label_sets[v] = frozenset(choice)
    return ToneColoring(t, k, labels)


def forest_independence_number(f: Graph) -> int:
    """Exact independence number of a forest by leaf-to-root dynamic programming."""
    if not is_forest(f):
        raise NotAForest("input graph contains a cycle")
    rooted = root_forest(f)
    take = [1] * f.n  # best size with v included
    skip = [0] * f.n  # best size with v excluded
    parent = rooted.parent
    for v in reversed(rooted.bfs_order):
        p = parent[v]
        if p is not None:
            take[p] += skip[v]
            skip[p] += max(take[v], skip[v])
    return sum(
        max(take[v], skip[v]) for v in rooted.bfs_order if parent[v] is None
    )


def min_greedy_palette(f: Graph, t: int) -> int:
    """Least palette size at which the BFS greedy succeeds on the forest.

    Escalates one color at a time from the counting lower bound (greedy
    success is not assumed monotone in the palette). The result upper
    bounds the true t-tone chromatic number.
    """
    alpha = forest_independence_number(f)
    start = tone_lower_bound(f.n, t, alpha) if f.n else t
    if f.m >= 1:
        start = max(start, 2 * t)  # adjacent labels must be disjoint
    start = max(start, t)
    k = start
    while True:
        result = greedy_t_tone_forest(f, t, k)
        if isinstance(result, ToneColoring):
            return k
        k += 1
        assert k <= t * max(f.n, 1), "escalation must terminate by k = t*n"
