"""Labels, tone colorings, the defining verifier, and partition assembly.

A t-tone coloring assigns each vertex a t-set of colors from [1, k]; it is
valid when any two distinct vertices u, v share fewer than d(u, v) colors.
Pairs farther apart than t are unconstrained because an intersection of
two t-sets never exceeds t.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, bfs_ball


class DomainError(ValueError):
    """Argument outside the range where the quantity is defined."""


class PartialColoring(ValueError):
    """A total coloring was required but some vertex is unlabeled."""


class PaletteMismatch(ValueError):
    """A label uses a color outside [1, k]."""


class GroundSetMismatch(ValueError):
    """Two partitions over different ground sets were compared."""


class PreconditionViolated(ValueError):
    """Structural precondition failed; the offending object is in args."""


Label = tuple[int, ...]  # sorted t-set of 1-based color ids


def make_label(colors: Iterable[int], t: int, k: int) -> Label:
    """Validated sorted t-set within the palette [1, k]."""
    label = tuple(sorted(colors))
    if len(label) != t or len(set(label)) != t:
        raise ValueError(f"label {label} is not a {t}-set")
    if label[0] < 1 or label[-1] > k:
        raise PaletteMismatch(f"label {label} outside palette [1, {k}]")
    return label


@dataclass
class ToneColoring:
    """Per-vertex t-sets over palette [1, k]; None marks an uncolored vertex."""

    t: int
    k: int
    labels: list[Label | None]

    def is_total(self) -> bool:
        return all(label is not None for label in self.labels)

    def colored_vertices(self) -> list[int]:
        return [v for v, label in enumerate(self.labels) if label is not None]

    def colors_used(self) -> set[int]:
        used: set[int] = set()
        for label in self.labels:
            if label is not None:
                used.update(label)
        return used

    def copy(self) -> "ToneColoring":
        return ToneColoring(self.t, self.k, list(self.labels))


@dataclass(frozen=True)
class Valid:
    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    distance: int
    overlap: int

    def __bool__(self) -> bool:
        return False


VALID = Valid()


def _check_labels(g: Graph, coloring: ToneColoring, require_total: bool) -> None:
    if len(coloring.labels) != g.n:
        raise PartialColoring(
            f"coloring covers {len(coloring.labels)} vertices, graph has {g.n}"
        )
    t, k = coloring.t, coloring.k
    for v, label in enumerate(coloring.labels):
        if label is None:
            if require_total:
                raise PartialColoring(f"vertex {v} is unlabeled")
            continue
        if len(label) != t or len(set(label)) != t:
            raise PaletteMismatch(f"vertex {v}: label {label} is not a {t}-set")
        if label[0] < 1 or label[-1] > k:
            raise PaletteMismatch(f"vertex {v}: label {label} outside [1, {k}]")


def verify(g: Graph, coloring: ToneColoring) -> Valid | Violation:
    """Check every pair at distance d <= t for |label(u) & label(v)| < d.

    Returns VALID or the lexicographically-first Violation by (u, v).
    Raises PartialColoring / PaletteMismatch on malformed input.
    """
    _check_labels(g, coloring, require_total=True)
    return _verify_pairs(g, coloring, coloring.colored_vertices())


def verify_partial(g: Graph, coloring: ToneColoring) -> Valid | Violation:
    """verify() restricted to labeled vertices; unlabeled ones are ignored."""
    _check_labels(g, coloring, require_total=False)
    return _verify_pairs(g, coloring, coloring.colored_vertices())


def _verify_pairs(g: Graph, coloring: ToneColoring, vertices: list[int]) -> Valid | Violation:
    t = coloring.t
    labels = coloring.labels
    label_sets = {v: frozenset(labels[v]) for v in vertices}
    # vertices ascending: the first u with a violation, paired with its
    # smallest violating w, is the lexicographically-first violation.
    for u in vertices:
        lu = label_sets[u]
        hit: Violation | None = None
        for w, d in bfs_ball(g, u, t).items():
            if w <= u or w not in label_sets:
                continue
            if hit is not None and w >= hit.v:
                continue
            overlap = len(lu & label_sets[w])
            if overlap >= d:
                hit = Violation(u, w, d, overlap)
        if hit is not None:
            return hit
    return VALID


def kappa(delta: int) -> int:
    """Least k with (k-2)(k-3) >= 2*delta, i.e. ceil((sqrt(8*delta+1)+5)/2).

    This is the exact optimal 2-tone palette size for a tree of maximum
    degree delta >= 1; pure integer arithmetic avoids float-ceiling hazards
    when 8*delta+1 is a perfect square.
    """
    if delta <= 0:
        raise DomainError(f"kappa is defined for maximum degree >= 1, got {delta}")
    # isqrt floor gives a candidate within 1 of the answer; fix up exactly.
    from math import isqrt

    k = (5 + isqrt(8 * delta + 1)) // 2
    while (k - 2) * (k - 3) < 2 * delta:
        k += 1
    while k > 4 and (k - 3) * (k - 4) >= 2 * delta:
        k -= 1
    return k


def tone_lower_bound(n: int, t: int, alpha: int) -> int:
    """ceil(t*n / alpha): every color class is independent, so k classes
    of size at most alpha must cover each vertex t times."""
    if n < 1 or t < 1 or not 1 <= alpha <= n:
        raise ValueError(f"need n >= 1, t >= 1, 1 <= alpha <= n; got {(n, t, alpha)}")
    return -(-t * n // alpha)


class Partition:
    """Disjoint vertex sets covering a stated ground set."""

    def __init__(self, parts: Sequence[Iterable[int]], ground_set: Iterable[int]):
        self.parts: list[frozenset[int]] = [frozenset(p) for p in parts]
        self.ground_set: frozenset[int] = frozenset(ground_set)
        self.part_of: dict[int, int] = {}
        for i, part in enumerate(self.parts):
            for v in part:
                if v in self.part_of:
                    raise ValueError(f"vertex {v} appears in two parts")
                self.part_of[v] = i
        covered = frozenset(self.part_of)
        if covered != self.ground_set:
            missing = sorted(self.ground_set - covered)[:5]
            extra = sorted(covered - self.ground_set)[:5]
            raise ValueError(f"parts do not cover ground set (missing={missing}, extra={extra})")

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return f"Partition({len(self.parts)} parts over {len(self.ground_set)} vertices)"

    @staticmethod
    def singletons(ground_set: Iterable[int]) -> "Partition":
        vs = sorted(ground_set)
        return Partition([[v] for v in vs], vs)


def respects(a: Partition, b: Partition) -> bool:
    """True iff every part of a meets every part of b in at most one vertex."""
    if a.ground_set != b.ground_set:
        raise GroundSetMismatch("partitions cover different ground sets")
    counts: dict[tuple[int, int], int] = {}
    for v in a.ground_set:
        key = (a.part_of[v], b.part_of[v])
        c = counts.get(key, 0) + 1
        if c > 1:
            return False
        counts[key] = c
    return True


def set_respects(S: Iterable[int], p: Partition) -> bool:
    """True iff S meets every part of p in at most one vertex."""
    seen: set[int] = set()
    for v in S:
        i = p.part_of[v]
        if i in seen:
            return False
        seen.add(i)
    return True


def partitions_to_coloring(partitions: Sequence[Partition], g: Graph) -> ToneColoring:
    """Assemble pairwise-respecting independent-set partitions into a coloring.

    Partition i's parts get a dedicated contiguous color block; vertex v's
    label collects, for each i, the color of the part containing v. Because
    blocks are disjoint and the partitions pairwise respect each other, any
    two vertices share at most one color, and a shared color certifies
    non-adjacency (every part is independent).
    """
    t = len(partitions)
    if t < 1:
        raise PreconditionViolated("need at least one partition")
    vertices = frozenset(range(g.n))
    adj_sets = g.adj_sets
    for i, p in enumerate(partitions):
        if p.ground_set != vertices:
            raise PreconditionViolated(f"partition {i} does not cover the vertex set")
        for j, part in enumerate(p.parts):
            for v in part:
                if adj_sets[v] & part:
                    raise PreconditionViolated(
                        f"part {j} of partition {i} is not independent (edge inside)"
                    )
    for i in range(t):
        for j in range(i + 1, t):
            if not respects(partitions[i], partitions[j]):
                raise PreconditionViolated(f"partitions {i} and {j} do not respect each other")

    offsets = []
    total = 0
    for p in partitions:
        offsets.append(total)
        total += len(p.parts)
    labels: list[Label | None] = [None] * g.n
    for v in range(g.n):
        label = tuple(
            sorted(offsets[i] + partitions[i].part_of[v] + 1 for i in range(t))
        )
        labels[v] = label
    return ToneColoring(t=t, k=total, labels=labels)


def alpha_of_coloring(coloring: ToneColoring, color: int) -> set[int]:
    """Vertices whose label contains the color; sizes over all colors sum to t*n."""
    if not coloring.is_total():
        raise PartialColoring("alpha_of_coloring requires a total coloring")
    return {v for v, label in enumerate(coloring.labels) if color in label}
