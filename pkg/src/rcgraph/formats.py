"""Plain-text interchange formats used by the CLI.

Graph: first line ``n m``, then m lines ``u v`` with u < v, sorted
lexicographically. Coloring: first line ``c``, then one line per edge
``u v color`` in the graph's canonical edge order. Path packing: first
line ``u v count``, then one path per line as a space-separated vertex
sequence. All three round-trip bit-exactly through their writers.
"""

from __future__ import annotations

import numpy as np

from .graphs import Graph
from .rainbow import EdgeColoring, PathPacking


def _int_fields(line: str, expected: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != expected:
        raise ValueError(f"{what}: expected {expected} fields, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"{what}: non-integer field in {line!r}") from None


def graph_to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty graph file")
    n, m = _int_fields(lines[0], 2, "graph header")
    if len(lines) - 1 != m:
        raise ValueError(f"graph header promises {m} edges, file has {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        u, v = _int_fields(line, 2, "graph edge")
        if u >= v:
            raise ValueError(f"graph edge {u} {v}: expected u < v")
        edges.append((u, v))
    g = Graph.from_edges(n, edges)
    if g.m != m:
        raise ValueError("graph file contains duplicate edges")
    return g


def coloring_to_text(col: EdgeColoring) -> str:
    lines = [str(col.c)]
    lines.extend(
        f"{u} {v} {color}"
        for (u, v), color in zip(col.graph.edges, col.assignment)
    )
    return "\n".join(lines) + "\n"


def coloring_from_text(text: str, graph: Graph) -> EdgeColoring:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty coloring file")
    (c,) = _int_fields(lines[0], 1, "coloring header")
    if len(lines) - 1 != graph.m:
        raise ValueError(
            f"coloring lists {len(lines) - 1} edges, graph has {graph.m}"
        )
    colors = np.empty(graph.m, dtype=np.int32)
    for i, line in enumerate(lines[1:]):
        u, v, color = _int_fields(line, 3, "coloring entry")
        if (u, v) != graph.edges[i]:
            raise ValueError(
                f"coloring entry {i} names edge ({u}, {v}), expected "
                f"{graph.edges[i]} from the canonical edge order"
            )
        colors[i] = color
    return EdgeColoring(graph, c, colors)


def packing_to_text(packing: PathPacking) -> str:
    lines = [f"{packing.u} {packing.v} {len(packing.paths)}"]
    lines.extend(" ".join(str(x) for x in path) for path in packing.paths)
    return "\n".join(lines) + "\n"


def packing_from_text(text: str) -> PathPacking:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty packing file")
    u, v, count = _int_fields(lines[0], 3, "packing header")
    if len(lines) - 1 != count:
        raise ValueError(f"packing header promises {count} paths, file has {len(lines) - 1}")
    paths = []
    for line in lines[1:]:
        parts = line.split()
        try:
            paths.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ValueError(f"packing path: non-integer field in {line!r}") from None
    return PathPacking(u, v, tuple(paths))
