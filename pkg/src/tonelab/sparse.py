"""Sparse-regime pipeline: color a high-degree core region as a forest,
keep only the inner shells, and extend greedily to the whole graph.

The core V0 collects vertices of degree >= b0; shells are the BFS layers
around it. The induced graph H on the core plus 2t-2 shells is colored as
a forest with palette kappa(max degree), the outermost t-1 shell labels
are erased, and the remaining low-degree vertices are labeled greedily.
Erasing the outer shells is what makes the kept labels safe: any two kept
vertices within distance t of each other in the full graph realize that
distance inside H, so the forest coloring already separated them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .coloring import DomainError, Label, ToneColoring, kappa, verify_partial
from .graph import (
    Graph,
    bfs_ball,
    components,
    find_cycle,
    induced_subgraph,
    is_forest,
    max_degree,
    multi_source_distances,
)
from .trees import Stuck, color_forest_2tone, greedy_t_tone_forest


@dataclass
class SparseParams:
    """Knobs for the core/shell pipeline.

    b0 defaults to ln^(1/4) n of the input graph when None. b0 = 0 is
    allowed and puts every vertex in the core (useful on forests, where
    the pipeline then reduces to the optimal forest coloring).
    """

    b0: float | None = None
    t: int = 2
    palette_escalation: bool = True

    def __post_init__(self):
        if self.b0 is not None and self.b0 < 0:
            raise ValueError("b0 must be >= 0")
        if self.t < 2:
            raise ValueError("t must be >= 2")

    def resolve_b0(self, n: int) -> float:
        if self.b0 is not None:
            return self.b0
        return math.log(n) ** 0.25 if n >= 2 else 1.0


@dataclass
class CoreDecomposition:
    """Core, BFS shells, and which vertices keep their labels."""

    V0: set[int]
    shells: list[set[int]]  # shells[i-1] = vertices at distance exactly i from V0
    H_vertices: set[int]
    keep_set: set[int]


@dataclass
class PipelineReport:
    v0_size: int
    shell_sizes: list[int]
    h_is_forest: bool
    h_max_component: int
    escalations: int
    extended_count: int
    max_forbidden: int
    palette: int
    used_fallback: bool = False


@dataclass
class StructuralDiagnostics:
    """Observables mirroring the two structural properties the pipeline
    relies on at scale: core vertices should not clump in the distance
    power graph, and core-region components should stay small."""

    p1_max_component: int
    p1_threshold: float
    p1_ok: bool
    p2_max_component: int
    p2_threshold: float
    p2_ok: bool


@dataclass(frozen=True)
class StructuralFailure:
    """Pipeline could not finish without escalation.

    reason "not-a-forest" carries one offending cycle of the core region;
    "extension-stuck" means the greedy extension ran dry at the base
    palette with escalation disabled.
    """

    cycle: tuple[int, ...]
    reason: str = "not-a-forest"

    def __bool__(self) -> bool:
        return False


@dataclass
class ExtendStats:
    extended_count: int
    max_forbidden: int


def core_decomposition(g: Graph, params: SparseParams) -> CoreDecomposition:
    """Degree-threshold core plus its first 2t-2 BFS shells."""
    b0 = params.resolve_b0(g.n)
    t = params.t
    V0 = {v for v in range(g.n) if len(g.adjacency[v]) >= b0}
    depth = 2 * t - 2
    dist = multi_source_distances(g, V0, radius=depth) if V0 else {}
    shells = [set() for _ in range(depth)]
    for v, d in dist.items():
        if d >= 1:
            shells[d - 1].add(v)
    H_vertices = set(V0)
    for sh in shells:
        H_vertices |= sh
    keep = set(V0)
    for sh in shells[: t - 1]:
        keep |= sh
    return CoreDecomposition(V0=V0, shells=shells, H_vertices=H_vertices, keep_set=keep)


def _violation_weights(t: int, palette: int) -> list[int]:
    """weights[d] = number of t-subsets of the palette sharing at least d
    colors with one fixed t-set (the per-witness forbidden-label count)."""
    weights = [0] * (t + 1)
    for d in range(1, t + 1):
        weights[d] = sum(
            math.comb(t, j) * math.comb(palette - t, t - j) for j in range(d, t + 1)
        )
    return weights


def greedy_extend(
    g: Graph, partial: ToneColoring, t: int, palette: int
) -> tuple[ToneColoring, ExtendStats] | Stuck:
    """Label the uncolored vertices in ascending id order.

    Each vertex takes the least t-subset of [1, palette] whose overlap with
    every colored vertex at distance d <= t stays below d. The returned
    stats include the largest forbidden-label count seen, where each
    colored witness at distance d contributes the number of labels it
    rules out on its own (the additive accounting the palette budget is
    sized against).
    """
    if palette < t:
        raise ValueError(f"palette {palette} smaller than tone {t}")
    out = partial.copy()
    out.k = palette
    label_sets: list[frozenset[int] | None] = [
        frozenset(lab) if lab is not None else None for lab in out.labels
    ]
    pool = [(combo, frozenset(combo)) for combo in combinations(range(1, palette + 1), t)]
    weights = _violation_weights(t, palette)
    max_forbidden = 0
    extended = 0
    for v in range(g.n):
        if out.labels[v] is not None:
            continue
        witnesses = [
            (label_sets[w], d)
            for w, d in bfs_ball(g, v, t).items()
            if w != v and label_sets[w] is not None
        ]
        forbidden = sum(weights[d] for _, d in witnesses)
        if forbidden > max_forbidden:
            max_forbidden = forbidden
        choice = None
        for combo, cset in pool:
            if all(len(cset & ws) < d for ws, d in witnesses):
                choice = combo
                break
        if choice is None:
            return Stuck(v, palette)
        out.labels[v] = choice
        label_sets[v] = frozenset(choice)
        extended += 1
    return out, ExtendStats(extended_count=extended, max_forbidden=max_forbidden)


def _color_core_forest(H: Graph, t: int, palette: int) -> tuple[list[Label | None], int]:
    """Forest coloring of the core region, escalating one color at a time
    for t >= 3 (where the fixed-palette greedy may get stuck).
    Returns (labels, palette actually needed)."""
    if H.m == 0:
        # isolated core vertices never realize a distance <= t inside the
        # kept region, so a shared constant label is safe
        base = tuple(range(1, t + 1))
        return [base] * H.n, palette
    if t == 2:
        col = color_forest_2tone(H)
        assert col.k <= palette, "core palette below the forest optimum"
        return list(col.labels), palette
    k = max(palette, 2 * t)
    while True:
        result = greedy_t_tone_forest(H, t, k)
        if isinstance(result, ToneColoring):
            return list(result.labels), k
        k += 1
        assert k <= t * max(H.n, 1) + palette, "core escalation must terminate"


def sparse_color(
    g: Graph, params: SparseParams
) -> tuple[ToneColoring, PipelineReport] | StructuralFailure:
    """Run the full core/shell pipeline.

    Succeeds with palette kappa(max degree) whenever the core region is a
    forest and the greedy extension never runs dry; otherwise escalates by
    one color at a time (when enabled) or reports StructuralFailure with an
    offending cycle. The fallback for a cyclic core region is a plain
    greedy coloring of the whole graph, flagged in the report.
    """
    t = params.t
    b0 = params.resolve_b0(g.n)
    delta = max_degree(g)
    if delta == 0:
        labels: list[Label | None] = [tuple(range(1, t + 1))] * g.n
        coloring = ToneColoring(t, t, labels)
        report = PipelineReport(
            v0_size=0,
            shell_sizes=[0] * (2 * t - 2),
            h_is_forest=True,
            h_max_component=0,
            escalations=0,
            extended_count=0,
            max_forbidden=0,
            palette=t,
            used_fallback=False,
        )
        return coloring, report
    base_palette = kappa(delta)
    decomp = core_decomposition(g, params)
    H, old_to_new = induced_subgraph(g, decomp.H_vertices)
    new_to_old = sorted(decomp.H_vertices)
    h_forest = is_forest(H)
    h_max_comp = max((len(c) for c in components(H)), default=0) if H.n else 0

    if not h_forest:
        cycle = find_cycle(H) or []
        g_cycle = tuple(new_to_old[v] for v in cycle)
        if not params.palette_escalation:
            return StructuralFailure(cycle=g_cycle, reason="not-a-forest")
        # fallback: greedy over the whole graph, one extra color at a time
        k = max(base_palette, 2 * t)
        while True:
            result = greedy_extend(g, ToneColoring(t, k, [None] * g.n), t, k)
            if not isinstance(result, Stuck):
                coloring, stats = result
                report = PipelineReport(
                    v0_size=len(decomp.V0),
                    shell_sizes=[len(s) for s in decomp.shells],
                    h_is_forest=False,
                    h_max_component=h_max_comp,
                    escalations=k - base_palette,
                    extended_count=stats.extended_count,
                    max_forbidden=stats.max_forbidden,
                    palette=k,
                    used_fallback=True,
                )
                return coloring, report
            k += 1
            assert k <= t * g.n + base_palette, "fallback escalation must terminate"

    h_labels, palette = _color_core_forest(H, t, base_palette)

    while True:
        partial_labels: list[Label | None] = [None] * g.n
        for v in decomp.keep_set:
            partial_labels[v] = h_labels[old_to_new[v]]
        partial = ToneColoring(t, palette, partial_labels)
        # stage contract: erasing the outer shells must leave the kept
        # labels pairwise compatible inside the full graph
        assert bool(verify_partial(g, partial)), "kept core labels conflict in g"
        for v in range(g.n):
            if partial_labels[v] is None:
                assert len(g.adjacency[v]) < b0, (
                    f"uncolored vertex {v} has core-level degree"
                )
        result = greedy_extend(g, partial, t, palette)
        if not isinstance(result, Stuck):
            break
        if not params.palette_escalation:
            return StructuralFailure(cycle=(), reason="extension-stuck")
        palette += 1
        assert palette <= t * g.n + base_palette, "extension escalation must terminate"

    escalations = palette - base_palette

    coloring, stats = result
    if t == 2 and b0 > 0:
        bound = 2 * b0 * palette + b0 * b0
        assert stats.max_forbidden <= bound, (
            f"forbidden-label count {stats.max_forbidden} exceeds 2*b0*k+b0^2={bound}"
        )
    report = PipelineReport(
        v0_size=len(decomp.V0),
        shell_sizes=[len(s) for s in decomp.shells],
        h_is_forest=True,
        h_max_component=h_max_comp,
        escalations=escalations,
        extended_count=stats.extended_count,
        max_forbidden=stats.max_forbidden,
        palette=palette,
        used_fallback=False,
    )
    return coloring, report


def structural_diagnostics(
    g: Graph, decomp: CoreDecomposition, t: int
) -> StructuralDiagnostics:
    """Clumping observables for the core region, with the polylog thresholds
    they are compared against at scale (reported, never asserted)."""
    radius = 4 * t - 3
    ln_n = math.log(g.n) if g.n >= 2 else 0.0
    p1_threshold = ln_n ** (7 / 8)
    p2_threshold = ln_n ** ((4 * t + 9) / 8)

    # components of the distance-(4t-3) power graph restricted to the core
    core = sorted(decomp.V0)
    parent = {v: v for v in core}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for v in core:
        for w, d in bfs_ball(g, v, radius).items():
            if w != v and w in parent:
                ru, rw = find(v), find(w)
                if ru != rw:
                    parent[rw] = ru
    sizes: dict[int, int] = {}
    for v in core:
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    p1_max = max(sizes.values(), default=0)

    if decomp.H_vertices:
        H, _ = induced_subgraph(g, decomp.H_vertices)
        p2_max = max((len(c) for c in components(H)), default=0)
    else:
        p2_max = 0
    return StructuralDiagnostics(
        p1_max_component=p1_max,
        p1_threshold=p1_threshold,
        p1_ok=p1_max <= p1_threshold,
        p2_max_component=p2_max,
        p2_threshold=p2_threshold,
        p2_ok=p2_max <= p2_threshold,
    )
