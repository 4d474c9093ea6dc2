"""Dense-regime t-tone coloring via mutually respecting partitions.

One pass per tone: repeatedly pull out independent sets that respect all
previously built partitions, then finish the leftover vertices with a
degeneracy-ordered greedy coloring of an auxiliary conflict graph. Each
pass gets a fresh contiguous color block, and the assembled labels are
valid because any two vertices share at most one color and a shared color
certifies non-adjacency.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from random import Random
from typing import Iterable, Sequence

from .coloring import (
    Partition,
    ToneColoring,
    partitions_to_coloring,
    respects,
    set_respects,
)
from .graph import Graph, diameter_at_most


class DiameterWarning(UserWarning):
    """Emitted when the input has diameter above 2.

    The assembled coloring still satisfies every pairwise constraint (two
    vertices never share more than one color), but the optimality story
    behind the pass structure assumes diameter 2.
    """


def _ceil_snapped(x: float, eps: float = 1e-9) -> int:
    """Ceiling that forgives float noise just above an integer.

    The schedule formulas below evaluate expressions that are exactly
    integral for round inputs (e.g. 3*log2(1024)); snapping keeps them
    stable across platforms.
    """
    r = round(x)
    if abs(x - r) < eps:
        return int(r)
    return math.ceil(x)


@dataclass
class DenseParams:
    """Schedule constants for the partition colorer, all overridable.

    The formulas give degenerate (even negative) values at small n; every
    field is clamped below at 1 and the pipeline's correctness never
    depends on the clamps, only the color count does.
    """

    b: float
    k_ceiling: int
    s: int
    s0: int
    remainder_threshold: int
    restart_budget: int = 20

    def __post_init__(self):
        if self.b <= 1.0:
            raise ValueError(f"b must exceed 1, got {self.b}")
        if not (1 <= self.s0 <= self.s <= self.k_ceiling):
            raise ValueError(
                f"need 1 <= s0 <= s <= k_ceiling, got s0={self.s0} s={self.s} k={self.k_ceiling}"
            )
        if not (1 <= self.remainder_threshold):
            raise ValueError("remainder_threshold must be >= 1")
        if self.restart_budget < 1:
            raise ValueError("restart_budget must be >= 1")


def dense_params(n: int, p: float, restart_budget: int = 20) -> DenseParams:
    """Evaluate the schedule formulas for an n-vertex instance at density p.

    b = 1/(1-p); k_ceiling = ceil(3 ln n / ln b); the extraction size
    target s0 and cap s are the two logarithmic expressions clamped into
    [1, k_ceiling]; the greedy handoff fires at ceil(n / ln^2 n) vertices.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must be in (0, 1), got {p}")
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    b = 1.0 / (1.0 - p)
    ln_b = -math.log1p(-p)
    ln_n = math.log(n)
    log_b_n = ln_n / ln_b
    k_ceiling = max(1, _ceil_snapped(3.0 * log_b_n))
    s_raw = _ceil_snapped(2.0 * log_b_n - 2.0 * math.log(log_b_n) / ln_b - math.log(ln_n) / ln_b)
    s0_raw = _ceil_snapped(2.0 * log_b_n - 2.0 * math.log(log_b_n) / ln_b - 5.0 * math.log(ln_n) / ln_b)
    s0 = max(1, s0_raw)
    s = min(max(s0, s_raw, 1), k_ceiling)
    s0 = min(s0, s)
    remainder = max(1, min(n, _ceil_snapped(n / ln_n**2)))
    return DenseParams(
        b=b,
        k_ceiling=k_ceiling,
        s=s,
        s0=s0,
        remainder_threshold=remainder,
        restart_budget=restart_budget,
    )


@dataclass
class PassReport:
    """What one pass of the pipeline did."""

    index: int
    set_sizes: list[int]
    remainder_size: int
    greedy_colors: int

    @property
    def colors(self) -> int:
        return len(self.set_sizes) + self.greedy_colors


def find_respecting_independent_set(
    g: Graph,
    constraints: Sequence[Partition],
    target: int,
    budget: int,
    *,
    rng: Random | None = None,
    within: Iterable[int] | None = None,
    max_size: int | None = None,
) -> set[int]:
    """Randomized-greedy independent set meeting every constraint partition
    in at most one vertex.

    Runs up to `budget` restarts with fresh random vertex orders, returning
    the largest set found; stops early once a set reaches `target`. There
    is no size guarantee, but any nonempty candidate pool yields at least
    one vertex. `within` restricts the search to a vertex subset and
    `max_size` caps the greedy growth.
    """
    rng = rng if rng is not None else Random(0)
    pool = sorted(within) if within is not None else list(range(g.n))
    if not pool:
        return set()
    adj = g.adj_sets
    part_of = [c.part_of for c in constraints]
    best: set[int] = set()
    for _ in range(budget):
        order = pool[:]
        rng.shuffle(order)
        chosen: set[int] = set()
        used_parts: list[set[int]] = [set() for _ in constraints]
        for v in order:
            if adj[v] & chosen:
                continue
            pids = [pm[v] for pm in part_of]
            if any(pid in used for pid, used in zip(pids, used_parts)):
                continue
            chosen.add(v)
            for pid, used in zip(pids, used_parts):
                used.add(pid)
            if max_size is not None and len(chosen) >= max_size:
                break
        if len(chosen) > len(best) or (
            len(chosen) == len(best) and sorted(chosen) < sorted(best)
        ):
            best = chosen
        if len(best) >= target:
            break
    return best


def _smallest_last_order(n: int, adj: list[set[int]]) -> list[int]:
    """Degeneracy order: repeatedly remove a minimum-degree vertex (ties by
    id); returned in removal-reversed order for greedy coloring."""
    degree = [len(a) for a in adj]
    removed = [False] * n
    buckets: dict[int, set[int]] = {}
    for v, d in enumerate(degree):
        buckets.setdefault(d, set()).add(v)
    order = []
    for _ in range(n):
        d = min(b for b in buckets if buckets[b])
        v = min(buckets[d])
        buckets[d].remove(v)
        removed[v] = True
        order.append(v)
        for w in adj[v]:
            if not removed[w]:
                buckets[degree[w]].remove(w)
                degree[w] -= 1
                buckets.setdefault(degree[w], set()).add(w)
    order.reverse()
    return order


def coloring_number_complete(
    g: Graph, constraints: Sequence[Partition], remainder: Iterable[int]
) -> Partition:
    """Partition the remainder into sets independent in g that respect all
    constraints, greedily along a smallest-last (degeneracy) order.

    The auxiliary conflict graph adds a clique inside each constraint part,
    so an ordinary proper coloring of it is exactly what is needed; the
    class count is at most one plus its degeneracy.
    """
    rem = sorted(set(remainder))
    if not rem:
        return Partition([], [])
    index = {v: i for i, v in enumerate(rem)}
    n = len(rem)
    aux: list[set[int]] = [set() for _ in range(n)]
    for v in rem:
        iv = index[v]
        for w in g.adj_sets[v]:
            iw = index.get(w)
            if iw is not None:
                aux[iv].add(iw)
    for c in constraints:
        groups: dict[int, list[int]] = {}
        for v in rem:
            groups.setdefault(c.part_of[v], []).append(v)
        for members in groups.values():
            for i, v in enumerate(members):
                for w in members[i + 1 :]:
                    aux[index[v]].add(index[w])
                    aux[index[w]].add(index[v])
    order = _smallest_last_order(n, aux)
    color = [-1] * n
    classes: list[list[int]] = []
    for iv in order:
        taken = {color[iw] for iw in aux[iv] if color[iw] != -1}
        c = 0
        while c in taken:
            c += 1
        color[iv] = c
        if c == len(classes):
            classes.append([])
        classes[c].append(rem[iv])
    return Partition(classes, rem)


def t_tone_color_dense(
    g: Graph, t: int, params: DenseParams, seed: int
) -> tuple[ToneColoring, list[PassReport]]:
    """Build t mutually respecting independent-set partitions and assemble
    them into a t-tone coloring with one fresh color block per pass.

    With t = 1 this degenerates to a plain proper coloring. Emits
    DiameterWarning on inputs of diameter above 2 (output validity is
    unaffected; see DiameterWarning).
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    rng = Random(seed)
    if not diameter_at_most(g, 2):
        warnings.warn(
            "input diameter exceeds 2; pass structure tuned for diameter-2 graphs",
            DiameterWarning,
            stacklevel=2,
        )
    partitions: list[Partition] = []
    reports: list[PassReport] = []
    all_vertices = list(range(g.n))
    for i in range(1, t + 1):
        working = set(all_vertices)
        parts: list[set[int]] = []
        sizes: list[int] = []
        while len(working) > params.remainder_threshold:
            found = find_respecting_independent_set(
                g,
                partitions,
                target=params.s0,
                budget=params.restart_budget,
                rng=rng,
                within=working,
                max_size=params.s,
            )
            if not found:  # cannot happen on a nonempty pool; guard anyway
                break
            parts.append(found)
            sizes.append(len(found))
            working -= found
        completion = coloring_number_complete(g, partitions, working)
        report = PassReport(
            index=i,
            set_sizes=sizes,
            remainder_size=len(working),
            greedy_colors=len(completion.parts),
        )
        all_parts = [sorted(p) for p in parts] + [sorted(p) for p in completion.parts]
        partition = Partition(all_parts, all_vertices)
        partitions.append(partition)
        reports.append(report)
    coloring = partitions_to_coloring(partitions, g)
    return coloring, reports


def edge_density_diagnostic(g: Graph, H: Iterable[int], params: DenseParams) -> bool:
    """True iff the subgraph induced on H has at most
    n*|H| / (k_ceiling * ln n) edges; a reporting predicate for sampled
    subsets of the greedy-handoff size."""
    hs = set(H)
    if len(hs) <= 1:
        return True
    edges = 0
    for v in hs:
        for w in g.adjacency[v]:
            if w > v and w in hs:
                edges += 1
    bound = g.n * len(hs) / (params.k_ceiling * math.log(g.n))
    return edges <= bound
