"""Text formats: edge lists, coloring files, degree files.

Edge list: first line `n m`, then m lines `u v` (0-based, whitespace
separated). Coloring file: header `t k n`, then one line per vertex
`v: c1 c2 ... ct` with strictly increasing 1-based colors. Lines starting
with `#` are comments. All writers emit LF endings and sorted content so
identical inputs produce identical bytes.
"""

from __future__ import annotations

import os
from typing import Iterable, TextIO

from .graph import Graph, GraphError
from .coloring import ToneColoring


class FormatError(ValueError):
    """Malformed input file; CLI maps this to exit code 2."""


def _data_lines(fh: TextIO) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(fh, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        lines = _data_lines(fh)
        try:
            lineno, header = next(lines)
        except StopIteration:
            raise FormatError("empty edge-list file") from None
        parts = header.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected header `n m`, got {header!r}")
        try:
            n, m = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer header {header!r}") from None
        edges = []
        for lineno, line in lines:
            parts = line.split()
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: expected `u v`, got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer edge {line!r}") from None
            edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header declares m={m} but file has {len(edges)} edges")
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def write_edge_list(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{g.n} {g.m}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def read_coloring(path: str | os.PathLike) -> ToneColoring:
    with open(path, "r", encoding="utf-8") as fh:
        lines = _data_lines(fh)
        try:
            lineno, header = next(lines)
        except StopIteration:
            raise FormatError("empty coloring file") from None
        parts = header.split()
        if len(parts) != 3:
            raise FormatError(f"line {lineno}: expected header `t k n`, got {header!r}")
        try:
            t, k, n = (int(x) for x in parts)
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer header {header!r}") from None
        if t < 1 or k < t or n < 0:
            raise FormatError(f"line {lineno}: invalid header values t={t} k={k} n={n}")
        labels: list[tuple[int, ...] | None] = [None] * n
        for lineno, line in lines:
            head, sep, rest = line.partition(":")
            if not sep:
                raise FormatError(f"line {lineno}: expected `v: c1 ... ct`, got {line!r}")
            try:
                v = int(head.strip())
                colors = tuple(int(x) for x in rest.split())
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer entry {line!r}") from None
            if not 0 <= v < n:
                raise FormatError(f"line {lineno}: vertex {v} out of range for n={n}")
            if labels[v] is not None:
                raise FormatError(f"line {lineno}: vertex {v} labeled twice")
            if len(colors) != t:
                raise FormatError(f"line {lineno}: expected {t} colors, got {len(colors)}")
            if any(colors[i] >= colors[i + 1] for i in range(t - 1)):
                raise FormatError(f"line {lineno}: colors must be strictly increasing")
            if colors[0] < 1 or colors[-1] > k:
                raise FormatError(f"line {lineno}: colors outside palette [1, {k}]")
            labels[v] = colors
    return ToneColoring(t=t, k=k, labels=labels)


def write_coloring(coloring: ToneColoring, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{coloring.t} {coloring.k} {len(coloring.labels)}\n")
        for v, label in enumerate(coloring.labels):
            if label is not None:
                fh.write(f"{v}: {' '.join(str(c) for c in label)}\n")


def read_degree_file(path: str | os.PathLike) -> list[int]:
    """Degree sequence file: one non-negative integer per line."""
    degrees = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in _data_lines(fh):
            try:
                d = int(line)
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer degree {line!r}") from None
            if d < 0:
                raise FormatError(f"line {lineno}: negative degree {d}")
            degrees.append(d)
    return degrees
