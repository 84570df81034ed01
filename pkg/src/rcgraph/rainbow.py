"""Edge colorings, rainbow paths, and exact rainbow-k-connectivity checks.

A path is *rainbow* if its edges carry pairwise distinct colors, which
caps its length at the number of colors. An edge-colored graph is
rainbow-k-connected when every vertex pair is joined by at least k
internally vertex-disjoint rainbow paths. This module decides that
exactly, and provides a brute-force oracle for the minimum color count
on small graphs.

Verification runs per pair on small graphs; on large graphs it switches
to boolean matrix algebra over per-color adjacency planes, falling back
to the exact per-pair search only for pairs the length-2 packing bound
cannot settle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, total_ordering
from itertools import combinations
from typing import Iterable, NamedTuple, Union

import numpy as np

from .graphs import INFINITE, Graph, diameter, vertex_connectivity_at_least

# Above this vertex count is_rainbow_k_connected uses the matrix route,
# provided the color count keeps the subset DP affordable.
_MATRIX_CUTOFF = 32
_MATRIX_MAX_COLORS = 6


class BudgetExceeded(RuntimeError):
    """An exact search was refused because it would exceed its budget."""


@total_ordering
class _Exceeds:
    """Sentinel sorting above every finite color count and below INFINITE."""

    __slots__ = ()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Exceeds)

    def __lt__(self, other: object):
        if isinstance(other, _Exceeds):
            return False
        if isinstance(other, (int, float)):
            return math.isinf(other) and other > 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash("rc-exceeds")

    def __repr__(self) -> str:
        return "EXCEEDS"


#: rc_k is finite but larger than the max_colors cap of the search.
EXCEEDS = _Exceeds()

RcValue = Union[int, float, _Exceeds]


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """Total assignment of a color in 1..c to every edge of a graph.

    ``color_array`` is an ``(m,)`` int32 array aligned with the graph's
    canonical edge order.
    """

    graph: Graph
    c: int
    color_array: np.ndarray

    def __post_init__(self) -> None:
        if not isinstance(self.c, (int, np.integer)) or isinstance(self.c, bool):
            raise TypeError("color count c must be an integer")
        if self.c < 1:
            raise ValueError(f"color count must be positive, got {self.c}")
        arr = np.asarray(self.color_array, dtype=np.int32)
        if arr.shape != (self.graph.m,):
            raise ValueError(
                f"coloring has {arr.shape[0] if arr.ndim == 1 else '?'} entries "
                f"for a graph with {self.graph.m} edges"
            )
        object.__setattr__(self, "c", int(self.c))
        object.__setattr__(self, "color_array", arr)
        if arr.size and not ((arr >= 1) & (arr <= self.c)).all():
            raise ValueError(f"edge colors must lie in 1..{self.c}")

    @classmethod
    def from_assignment(cls, graph: Graph, c: int, assignment: Iterable[int]) -> "EdgeColoring":
        return cls(graph, c, np.fromiter(assignment, dtype=np.int32, count=graph.m))

    @classmethod
    def monochrome(cls, graph: Graph) -> "EdgeColoring":
        """The unique 1-coloring: every edge gets color 1."""
        return cls(graph, 1, np.ones(graph.m, dtype=np.int32))

    @cached_property
    def assignment(self) -> tuple[int, ...]:
        return tuple(self.color_array.tolist())

    def color_of(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return int(self.color_array[self.graph.edge_index[key]])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (
            self.c == other.c
            and self.graph == other.graph
            and np.array_equal(self.color_array, other.color_array)
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.c, self.color_array.tobytes()))

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.graph.n}, m={self.graph.m}, c={self.c})"


@dataclass(frozen=True)
class PathPacking:
    """A set of u-v paths whose internal vertex sets are pairwise disjoint."""

    u: int
    v: int
    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)


class VerifyResult(NamedTuple):
    ok: bool
    witness: tuple[int, int] | None  # lexicographically first failing pair


def validate_path_packing(
    g: Graph,
    packing: PathPacking,
    required_length: int | None = None,
    coloring: EdgeColoring | None = None,
) -> None:
    """Re-verify a packing from scratch; raises ValueError on any violation."""
    u, v = packing.u, packing.v
    if u == v or not (0 <= u < g.n) or not (0 <= v < g.n):
        raise ValueError(f"bad endpoints ({u}, {v})")
    seen_internal: set[int] = set()
    for path in packing.paths:
        if len(path) < 2 or path[0] != u or path[-1] != v:
            raise ValueError(f"path {path} does not run from {u} to {v}")
        if len(set(path)) != len(path):
            raise ValueError(f"path {path} repeats a vertex")
        if required_length is not None and len(path) - 1 != required_length:
            raise ValueError(f"path {path} has length {len(path) - 1}, expected {required_length}")
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                raise ValueError(f"path {path} uses missing edge ({a}, {b})")
        if coloring is not None:
            cols = [coloring.color_of(a, b) for a, b in zip(path, path[1:])]
            if len(set(cols)) != len(cols):
                raise ValueError(f"path {path} repeats a color")
        internal = set(path[1:-1])
        if internal & seen_internal:
            raise ValueError(f"path {path} shares internal vertices with another path")
        seen_internal |= internal


def _check_pair(g: Graph, u: int, v: int) -> None:
    if not (0 <= u < g.n) or not (0 <= v < g.n):
        raise ValueError(f"vertices ({u}, {v}) out of range for n={g.n}")
    if u == v:
        raise ValueError(f"endpoints must differ, got u = v = {u}")


def _check_coloring_for(g: Graph, col: EdgeColoring) -> None:
    if col.graph is not g and col.graph != g:
        raise ValueError("coloring belongs to a structurally different graph")


def enumerate_rainbow_paths(
    g: Graph, col: EdgeColoring, u: int, v: int, max_len: int
) -> list[tuple[int, ...]]:
    """All simple u-v paths of length <= min(max_len, c) with pairwise
    distinct edge colors, ordered by (length, vertex sequence)."""
    _check_pair(g, u, v)
    _check_coloring_for(g, col)
    if max_len < 1:
        raise ValueError(f"max_len must be positive, got {max_len}")
    cap = min(max_len, col.c)
    colors = col.assignment
    inc = g.incidence
    found: list[tuple[int, ...]] = []
    path = [u]
    visited = [False] * g.n
    visited[u] = True

    def dfs(x: int, used: int, depth: int) -> None:
        for w, ei in inc[x]:
            bit = 1 << colors[ei]
            if used & bit:
                continue
            if w == v:
                found.append(tuple(path) + (v,))
                continue
            if visited[w] or depth + 1 >= cap:
                continue
            visited[w] = True
            path.append(w)
            dfs(w, used | bit, depth + 1)
            path.pop()
            visited[w] = False

    dfs(u, 0, 0)
    found.sort(key=lambda q: (len(q), q))
    return found


def _has_rainbow_path(g: Graph, col: EdgeColoring, u: int, v: int) -> bool:
    """Existence-only variant of the enumeration, with early exit."""
    cap = col.c
    colors = col.assignment
    inc = g.incidence
    visited = [False] * g.n
    visited[u] = True

    def dfs(x: int, used: int, depth: int) -> bool:
        for w, ei in inc[x]:
            bit = 1 << colors[ei]
            if used & bit:
                continue
            if w == v:
                return True
            if visited[w] or depth + 1 >= cap:
                continue
            visited[w] = True
            if dfs(w, used | bit, depth + 1):
                return True
            visited[w] = False
        return False

    return dfs(u, 0, 0)


def _max_disjoint_packing(paths: list[tuple[int, ...]], cap: int | None = None) -> int:
    """Exact maximum set packing over the paths' internal vertex sets.

    Branch and bound over paths in the given order (shortest first): greedy
    first fit as the lower bound, remaining-path count as the upper bound,
    early exit once ``cap`` disjoint paths are found.
    """
    if not paths:
        return 0
    masks: list[int] = []
    for q in paths:
        mk = 0
        for w in q[1:-1]:
            mk |= 1 << w
        masks.append(mk)

    best = 0
    used = 0
    for mk in masks:
        if not mk & used:
            used |= mk
            best += 1
    if cap is not None and best >= cap:
        return cap

    total = len(masks)
    found = best

    def descend(start: int, used: int, count: int) -> bool:
        nonlocal found
        if count > found:
            found = count
            if cap is not None and found >= cap:
                return True
        for j in range(start, total):
            if count + (total - j) <= found:
                break
            if masks[j] & used:
                continue
            if descend(j + 1, used | masks[j], count + 1):
                return True
        return False

    descend(0, 0, 0)
    return found if cap is None else min(found, cap)


def max_disjoint_rainbow_paths(
    g: Graph, col: EdgeColoring, u: int, v: int, k_target: int
) -> int:
    """min(k_target, M) where M is the true maximum number of internally
    vertex-disjoint rainbow u-v paths."""
    _check_pair(g, u, v)
    _check_coloring_for(g, col)
    if k_target < 1:
        raise ValueError(f"k_target must be positive, got {k_target}")
    paths = enumerate_rainbow_paths(g, col, u, v, col.c)
    return _max_disjoint_packing(paths, cap=k_target)


def _color_planes(g: Graph, col: EdgeColoring) -> np.ndarray:
    """(c, n, n) float32 stack of per-color symmetric adjacency matrices."""
    planes = np.zeros((col.c, g.n, g.n), dtype=np.float32)
    if g.m:
        u, v = g.edge_array[:, 0], g.edge_array[:, 1]
        idx = col.color_array - 1
        planes[idx, u, v] = 1.0
        planes[idx, v, u] = 1.0
    return planes


def _rainbow_reach(planes: np.ndarray) -> np.ndarray:
    """Boolean matrix of pairs joined by some rainbow path.

    Computed as rainbow-walk reachability over color subsets; dropping
    any closed detour from a rainbow walk leaves a shorter rainbow walk,
    so walk reachability and simple-path reachability coincide.
    """
    c, n, _ = planes.shape
    eye = np.eye(n, dtype=bool)
    if c == 1:
        return eye | (planes[0] > 0)
    if c == 2:
        mixed = planes[0] @ planes[1] > 0
        return eye | (planes[0] > 0) | (planes[1] > 0) | mixed | mixed.T
    prev: dict[int, np.ndarray] = {0: eye}
    for size in range(1, c + 1):
        level: dict[int, np.ndarray] = {}
        for subset in combinations(range(c), size):
            mask = 0
            for i in subset:
                mask |= 1 << i
            acc = eye.copy()
            for i in subset:
                acc |= (prev[mask & ~(1 << i)].astype(np.float32) @ planes[i]) > 0
            level[mask] = acc
        prev = level
    return prev[(1 << c) - 1]


def _first_failing_pair(ok: np.ndarray) -> VerifyResult:
    bad = ~ok
    bad[np.tril_indices(ok.shape[0])] = False
    hits = np.argwhere(bad)
    if hits.size == 0:
        return VerifyResult(True, None)
    u, v = hits[0]
    return VerifyResult(False, (int(u), int(v)))


def _verify_matrix(g: Graph, col: EdgeColoring, k: int) -> VerifyResult:
    planes = _color_planes(g, col)
    if k == 1:
        return _first_failing_pair(_rainbow_reach(planes))
    # Exact count of internally disjoint rainbow paths of length <= 2:
    # the direct edge plus one path per common neighbor joined by two
    # distinct colors. Counts stay far below 2**24, so float32 is exact.
    adjacency = planes.sum(axis=0)
    mixed = adjacency @ adjacency
    for plane in planes:
        mixed -= plane @ plane
    counts = adjacency + mixed
    enough = counts >= k
    if col.c <= 2:
        # No rainbow path can exceed c edges, so the length-2 packing is
        # the whole truth and unsettled pairs are genuine failures.
        return _first_failing_pair(enough)
    pending = ~enough
    pending[np.tril_indices(g.n)] = False
    for u, v in np.argwhere(pending):
        if max_disjoint_rainbow_paths(g, col, int(u), int(v), k) < k:
            return VerifyResult(False, (int(u), int(v)))
    return VerifyResult(True, None)


def _verify_pairs(g: Graph, col: EdgeColoring, k: int) -> VerifyResult:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if k == 1:
                ok = _has_rainbow_path(g, col, u, v)
            else:
                ok = max_disjoint_rainbow_paths(g, col, u, v, k) >= k
            if not ok:
                return VerifyResult(False, (u, v))
    return VerifyResult(True, None)


def is_rainbow_k_connected(g: Graph, col: EdgeColoring, k: int) -> VerifyResult:
    """Exact decision of rainbow-k-connectivity.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is
    the lexicographically first pair with fewer than k internally
    vertex-disjoint rainbow paths.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    _check_coloring_for(g, col)
    if g.n > _MATRIX_CUTOFF and col.c <= _MATRIX_MAX_COLORS:
        return _verify_matrix(g, col, k)
    return _verify_pairs(g, col, k)


@dataclass(frozen=True)
class RcResult:
    """Outcome of the exact rc_k search.

    ``value`` is the minimum color count, or EXCEEDS when it is finite but
    above the searched range, or INFINITE when the graph is not
    k-vertex-connected. ``coloring`` is an accepting certificate when the
    value is finite.
    """

    value: RcValue
    coloring: EdgeColoring | None

    @property
    def is_finite(self) -> bool:
        return isinstance(self.value, int)


def _canonical_colorings(m: int, c: int):
    """All colorings of m ordered edges using exactly colors 1..c, with each
    color first appearing in increasing order (one representative per
    color-permutation class)."""
    if c > m:
        return
    assign = [0] * m

    def rec(i: int, introduced: int):
        if i == m:
            if introduced == c:
                yield tuple(assign)
            return
        if c - introduced > m - i:
            return  # not enough edges left to introduce the remaining colors
        top = min(introduced + 1, c)
        for color in range(1, top + 1):
            assign[i] = color
            yield from rec(i + 1, introduced + (1 if color == introduced + 1 else 0))

    yield from rec(0, 0)


def rc_k_exact(
    g: Graph, k: int, max_colors: int | None = None, edge_budget: int = 12
) -> RcResult:
    """Exact minimum number of colors making g rainbow-k-connected.

    Intended for small instances: refuses graphs with more than
    ``edge_budget`` edges rather than run unboundedly. Searches color
    counts from the diameter lower bound up to ``max_colors`` (default:
    the edge count, which always suffices for k-connected graphs),
    enumerating one canonical representative per color-permutation class.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if g.m > edge_budget:
        raise BudgetExceeded(
            f"graph has {g.m} edges, above the exact-search budget of {edge_budget}; "
            "raise edge_budget explicitly to force the search"
        )
    if not vertex_connectivity_at_least(g, k):
        return RcResult(INFINITE, None)
    if max_colors is None:
        max_colors = g.m
    lower = max(int(diameter(g)), 1)  # finite: the graph is connected here
    for c in range(lower, max_colors + 1):
        for assignment in _canonical_colorings(g.m, c):
            col = EdgeColoring(g, c, np.array(assignment, dtype=np.int32))
            if is_rainbow_k_connected(g, col, k).ok:
                return RcResult(c, col)
    return RcResult(EXCEEDS, None)
