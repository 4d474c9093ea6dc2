"""Exact small-instance oracles: independence number, chromatic number,
tone colorability, and the tone chromatic number.

All solvers are plain branch-and-bound over bitmask state. They are meant
for desk-scale instances (documented caps in each function) and exist to
anchor tests; none of the constructive colorers depend on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .coloring import ToneColoring, tone_lower_bound, verify
from .graph import Graph, truncated_distances


@dataclass(frozen=True)
class SearchBudget:
    """Node cap for a solve call.

    deterministic=True uses the canonical static vertex order (descending
    degree, ties by id); False lets the solvers pick the most constrained
    vertex dynamically, which is usually faster but yields a different
    (still reproducible) search tree.
    """

    max_nodes: int = 10**18
    deterministic: bool = True

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be >= 1")


UNBOUNDED = SearchBudget()


class BudgetExhausted(Exception):
    """Search hit the node cap; .best carries the incumbent, .bracket bounds."""

    def __init__(self, message: str, best=None, bracket=None):
        super().__init__(message)
        self.best = best
        self.bracket = bracket


@dataclass(frozen=True)
class Infeasible:
    """Proof-by-exhaustion: no coloring exists for the given palette."""

    t: int
    k: int

    def __bool__(self) -> bool:
        return False


def _neighbor_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, nbrs in enumerate(g.adjacency):
        m = 0
        for v in nbrs:
            m |= 1 << v
        masks[u] = m
    return masks


def max_independent_set(g: Graph, budget: SearchBudget = UNBOUNDED) -> set[int]:
    """A maximum independent set (exact for n up to ~60).

    Branch and bound on the candidate bitmask: pick the highest-degree
    candidate, branch on including vs excluding it, prune when even taking
    every remaining candidate cannot beat the incumbent.
    """
    n = g.n
    if n == 0:
        return set()
    nbr = _neighbor_masks(g)
    degree_order = sorted(range(n), key=lambda v: (-len(g.adjacency[v]), v))
    rank = [0] * n
    for r, v in enumerate(degree_order):
        rank[v] = r

    best_mask = 0
    best_size = 0
    nodes = 0
    limit = budget.max_nodes
    full = (1 << n) - 1

    def pick(candidates: int) -> int:
        # highest-degree candidate (canonical rank order)
        best_v = -1
        best_r = n
        c = candidates
        while c:
            low = c & -c
            v = low.bit_length() - 1
            if rank[v] < best_r:
                best_r = rank[v]
                best_v = v
            c ^= low
        return best_v

    stack = [(full, 0, 0)]  # (candidates, chosen_mask, chosen_size)
    while stack:
        candidates, chosen, size = stack.pop()
        nodes += 1
        if nodes > limit:
            raise BudgetExhausted(
                "independent-set search exceeded node budget",
                best={v for v in range(n) if best_mask >> v & 1},
            )
        if size + candidates.bit_count() <= best_size:
            continue
        if candidates == 0:
            if size > best_size:
                best_size = size
                best_mask = chosen
            continue
        v = pick(candidates)
        bit = 1 << v
        # exclude v first so the include branch is explored first (LIFO)
        stack.append((candidates & ~bit, chosen, size))
        stack.append((candidates & ~(bit | nbr[v]), chosen | bit, size + 1))
        if size + 1 > best_size:  # keep the incumbent fresh for pruning
            best_size = size + 1
            best_mask = chosen | bit
    return {v for v in range(n) if best_mask >> v & 1}


def independence_number(g: Graph, budget: SearchBudget = UNBOUNDED) -> int:
    return len(max_independent_set(g, budget))


def clique_number(g: Graph, budget: SearchBudget = UNBOUNDED) -> int:
    """Exact clique number via the independence number of the complement."""
    comp_edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return independence_number(Graph(g.n, comp_edges), budget)


def _vertex_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-len(g.adjacency[v]), v))


def _k_colorable(g: Graph, k: int, budget: SearchBudget, state: dict) -> Optional[list[int]]:
    """Backtracking k-colorability; returns a coloring or None.

    Symmetry is broken by allowing at most one fresh color per step.
    """
    n = g.n
    if n == 0:
        return []
    order = _vertex_order(g)
    adj = g.adjacency
    color = [-1] * n
    max_used = 0
    limit = budget.max_nodes
    dynamic = not budget.deterministic

    def choose(pos: int) -> int:
        if not dynamic:
            return order[pos]
        # most saturated uncolored vertex, ties by degree then id
        best_v, best_key = -1, None
        for v in range(n):
            if color[v] != -1:
                continue
            sat = len({color[w] for w in adj[v] if color[w] != -1})
            key = (-sat, -len(adj[v]), v)
            if best_key is None or key < best_key:
                best_key, best_v = key, v
        return best_v

    def solve(pos: int, max_used: int) -> bool:
        state["nodes"] += 1
        if state["nodes"] > limit:
            raise BudgetExhausted("coloring search exceeded node budget")
        if pos == n:
            return True
        v = choose(pos)
        banned = 0
        for w in adj[v]:
            if color[w] != -1:
                banned |= 1 << color[w]
        top = min(k, max_used + 1)
        for c in range(top):
            if banned >> c & 1:
                continue
            color[v] = c
            if solve(pos + 1, max(max_used, c + 1)):
                return True
            color[v] = -1
        return False

    if solve(0, 0):
        return color[:]
    return None


def exact_chromatic(g: Graph, budget: SearchBudget = UNBOUNDED) -> int:
    """Exact chromatic number by scanning k upward from the clique number."""
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    lo = clique_number(g, budget)
    state = {"nodes": 0}
    for k in range(lo, g.n + 1):
        try:
            if _k_colorable(g, k, budget, state) is not None:
                return k
        except BudgetExhausted as exc:
            exc.bracket = (k, g.n)
            raise
    return g.n  # unreachable: n colors always suffice


def _labels_lex(k: int, t: int) -> list[tuple[tuple[int, ...], int]]:
    """All t-subsets of [1, k] in lexicographic order, with bitmasks."""
    out = []
    for combo in combinations(range(1, k + 1), t):
        mask = 0
        for c in combo:
            mask |= 1 << c
        out.append((combo, mask))
    return out


def t_tone_colorable(
    g: Graph, t: int, k: int, budget: SearchBudget = UNBOUNDED
) -> ToneColoring | Infeasible:
    """Find a valid t-tone k-coloring or prove none exists.

    Backtracking over vertices in descending-degree order, pruning with a
    distance oracle truncated at t. Symmetry breaking: colors must be
    introduced in canonical order (the fresh colors in any label are the
    next unused integers), which pins the first vertex to {1..t}.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if k < t:
        raise ValueError(f"palette k={k} smaller than tone t={t}")
    n = g.n
    if n == 0:
        return ToneColoring(t, k, [])

    oracle = truncated_distances(g, t)
    order = _vertex_order(g)
    pos_of = {v: i for i, v in enumerate(order)}
    # constraints[i]: list of (earlier position j, required strict bound d)
    constraints: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (u, w), d in oracle.table.items():
        iu, iw = pos_of[u], pos_of[w]
        if iu > iw:
            iu, iw = iw, iu
        constraints[iw].append((iu, d))
    for lst in constraints:
        lst.sort()

    labels = _labels_lex(k, t)
    assigned_masks = [0] * n
    assigned_labels: list[tuple[int, ...] | None] = [None] * n
    state = {"nodes": 0}
    limit = budget.max_nodes

    def solve(pos: int, used_mask: int, max_used: int) -> bool:
        if pos == n:
            return True
        cons = constraints[pos]
        for combo, mask in labels:
            state["nodes"] += 1
            if state["nodes"] > limit:
                raise BudgetExhausted(
                    "tone-coloring search exceeded node budget", bracket=(t, k)
                )
            fresh = mask & ~used_mask
            if fresh:
                # fresh colors must be exactly the next consecutive unused ids;
                # used colors are always {1..max_used} by induction
                run = ((1 << (max_used + 1 + fresh.bit_count())) - 1) ^ (
                    (1 << (max_used + 1)) - 1
                )
                if fresh != run:
                    continue
            ok = True
            for j, d in cons:
                if (mask & assigned_masks[j]).bit_count() >= d:
                    ok = False
                    break
            if not ok:
                continue
            assigned_masks[pos] = mask
            assigned_labels[pos] = combo
            new_max = max(max_used, combo[-1]) if fresh else max_used
            if solve(pos + 1, used_mask | mask, new_max):
                return True
            assigned_masks[pos] = 0
            assigned_labels[pos] = None
        return False

    if solve(0, 0, 0):
        out: list[tuple[int, ...] | None] = [None] * n
        for i, v in enumerate(order):
            out[v] = assigned_labels[i]
        coloring = ToneColoring(t, k, out)
        assert bool(verify(g, coloring)), "solver produced an invalid coloring"
        return coloring
    return Infeasible(t, k)


def exact_tau(g: Graph, t: int, budget: SearchBudget = UNBOUNDED) -> int:
    """Least k admitting a t-tone k-coloring (exact; n <= ~25 for t=2).

    Scans k upward from the best cheap lower bound: the counting bound
    ceil(t*n/alpha) and t times the clique number (a clique needs pairwise
    disjoint labels).
    """
    if g.n == 0:
        return 0
    alpha = independence_number(g, budget)
    lo = max(t, tone_lower_bound(g.n, t, alpha), t * clique_number(g, budget))
    for k in range(lo, t * g.n + 1):
        result = t_tone_colorable(g, t, k, budget)
        if isinstance(result, ToneColoring):
            return k
    return t * g.n  # unreachable: t*n fresh colors always work


def brute_force_tau(g: Graph, t: int, k_max: int | None = None) -> int:
    """Independent oracle for tiny graphs: enumerate every labeling.

    Exponential in n; used by tests to cross-check the backtracking solver.
    """
    from itertools import product

    n = g.n
    if n == 0:
        return 0
    k_max = t * n if k_max is None else k_max
    for k in range(t, k_max + 1):
        label_pool = list(combinations(range(1, k + 1), t))
        for assignment in product(label_pool, repeat=n):
            coloring = ToneColoring(t, k, list(assignment))
            if bool(verify(g, coloring)):
                return k
    raise RuntimeError(f"no valid coloring found up to k={k_max}")
