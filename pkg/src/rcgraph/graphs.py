"""Simple undirected graphs with seeded G(n, p) generation.

Vertices are ``0..n-1``. Edges are stored canonically as an ``(m, 2)``
int32 array of pairs ``(u, v)`` with ``u < v``, sorted lexicographically.
Python-level views (edge tuples, adjacency lists, edge index) are built
lazily so that array-based hot paths never pay for them. Graph values are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

import numpy as np

from .seeds import check_seed

#: Returned by :func:`diameter` for disconnected graphs. Compares greater
#: than every finite distance; never a numeric overflow of some int type.
INFINITE = math.inf

# All-pairs BFS is faster than matrix squaring below this size.
_BFS_CUTOFF = 64


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``edge_array`` must be canonical: shape ``(m, 2)``, dtype int32,
    ``u < v`` per row, rows sorted lexicographically, no duplicates.
    Use :meth:`from_edges` to build one from arbitrary pair iterables.
    """

    n: int
    edge_array: np.ndarray

    def __post_init__(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise TypeError("vertex count n must be an integer")
        if self.n < 2:
            raise ValueError(f"graphs must have at least 2 vertices, got n={self.n}")
        arr = np.asarray(self.edge_array, dtype=np.int32)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("edge_array must have shape (m, 2)")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edge_array", arr)
        if arr.shape[0] == 0:
            return
        u, v = arr[:, 0], arr[:, 1]
        if not ((0 <= u) & (u < v) & (v < self.n)).all():
            raise ValueError("edges must satisfy 0 <= u < v < n (no self-loops)")
        # lexicographic strictly increasing <=> sorted and duplicate-free
        keys = u.astype(np.int64) * self.n + v.astype(np.int64)
        if not (np.diff(keys) > 0).all():
            raise ValueError("edge_array must be lexicographically sorted without duplicates")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered vertex pairs; normalizes and dedupes."""
        pairs = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            pairs.add((u, v) if u < v else (v, u))
        if pairs:
            arr = np.array(sorted(pairs), dtype=np.int32)
        else:
            arr = np.empty((0, 2), dtype=np.int32)
        return cls(n, arr)

    @property
    def m(self) -> int:
        """Number of edges."""
        return int(self.edge_array.shape[0])

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Canonical edge tuple: (u, v) with u < v, lexicographically sorted."""
        return tuple(map(tuple, self.edge_array.tolist()))

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor tuples."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(b)) for b in nbrs)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map from canonical pair (u, v), u < v, to its edge_array row."""
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuples of (neighbor, edge index), neighbors sorted."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return tuple(tuple(sorted(b)) for b in inc)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    @property
    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edge_array, other.edge_array)

    def __hash__(self) -> int:
        return hash((self.n, self.edge_array.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@lru_cache(maxsize=8)
def _pair_indices(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row/column indices of all unordered pairs in lexicographic order."""
    iu, ju = np.triu_indices(n, k=1)
    return iu.astype(np.int32), ju.astype(np.int32)


def gnp_generate(n: int, p: float, seed: int) -> Graph:
    """Sample an Erdos-Renyi G(n, p) graph, deterministically per (n, p, seed).

    One uniform draw is made per vertex pair, in lexicographic pair order.
    Because the draws depend only on (n, seed), thresholding the same draws
    at p1 <= p2 yields nested edge sets (monotone coupling), which the
    sweep harness exploits for exact monotonicity checks.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError("n must be an integer")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    check_seed(seed)
    iu, ju = _pair_indices(int(n))
    draws = np.random.default_rng(int(seed)).random(iu.shape[0])
    mask = draws < p
    edge_array = np.column_stack((iu[mask], ju[mask]))
    return Graph(int(n), edge_array)


def _bfs_distances(adj: tuple[tuple[int, ...], ...], source: int, n: int) -> list[int]:
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def _diameter_bfs(g: Graph) -> int | float:
    adj = g.adj
    best = 0
    for source in range(g.n):
        dist = _bfs_distances(adj, source, g.n)
        far = max(dist)
        if min(dist) < 0:
            return INFINITE
        best = max(best, far)
    return best


def _adjacency_bool(g: Graph, include_identity: bool = False) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=bool)
    if g.m:
        u, v = g.edge_array[:, 0], g.edge_array[:, 1]
        a[u, v] = True
        a[v, u] = True
    if include_identity:
        np.fill_diagonal(a, True)
    return a


def _bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0


def _reach_within(powers: list[np.ndarray], t: int) -> np.ndarray:
    """Reachability within t steps from saved power-of-two reach matrices."""
    acc: np.ndarray | None = None
    bit = 0
    while t:
        if t & 1:
            acc = powers[bit] if acc is None else _bool_matmul(acc, powers[bit])
        t >>= 1
        bit += 1
    assert acc is not None
    return acc


def _diameter_matrix(g: Graph) -> int | float:
    # powers[i] holds reachability within 2**i steps (identity included).
    powers = [_adjacency_bool(g, include_identity=True)]
    while not powers[-1].all():
        nxt = _bool_matmul(powers[-1], powers[-1])
        if np.array_equal(nxt, powers[-1]):
            return INFINITE
        powers.append(nxt)
    if len(powers) == 1:
        return 1  # reach within one step is total: complete graph
    lo = 1 << (len(powers) - 2)  # reach at lo known not total
    hi = 1 << (len(powers) - 1)  # reach at hi known total
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _reach_within(powers, mid).all():
            hi = mid
        else:
            lo = mid
    return hi


def diameter(g: Graph) -> int | float:
    """Largest shortest-path distance over all vertex pairs.

    Returns :data:`INFINITE` iff the graph is disconnected. Uses all-pairs
    BFS on small graphs and boolean matrix squaring on large ones.
    """
    if g.n <= _BFS_CUTOFF:
        return _diameter_bfs(g)
    return _diameter_matrix(g)


def _is_connected(g: Graph) -> bool:
    dist = _bfs_distances(g.adj, 0, g.n)
    return min(dist) >= 0


def _has_articulation_point(g: Graph) -> bool:
    """Iterative lowpoint DFS; assumes g is connected and n >= 3."""
    adj = g.adj
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    timer = 0
    root_children = 0
    stack: list[tuple[int, int]] = [(0, 0)]  # (vertex, next neighbor offset)
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        u, off = stack[-1]
        if off < len(adj[u]):
            stack[-1] = (u, off + 1)
            w = adj[u][off]
            if disc[w] < 0:
                parent[w] = u
                if u == 0:
                    root_children += 1
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, 0))
            elif w != parent[u]:
                low[u] = min(low[u], disc[w])
        else:
            stack.pop()
            if stack:
                pu = stack[-1][0]
                low[pu] = min(low[pu], low[u])
                if pu != 0 and low[u] >= disc[pu]:
                    return True
    return root_children > 1


def _disjoint_paths_at_least(g: Graph, s: int, t: int, k: int) -> bool:
    """True iff there are >= k internally vertex-disjoint s-t paths.

    Unit-capacity max flow on the split network (in/out node per vertex),
    BFS augmentation, stopping after k augmenting paths.
    """
    n = g.n
    # node ids: in(v) = 2v, out(v) = 2v + 1; source = out(s), sink = in(t)
    cap: dict[int, dict[int, int]] = {}

    def add_arc(a: int, b: int) -> None:
        cap.setdefault(a, {})[b] = cap.get(a, {}).get(b, 0) + 1
        cap.setdefault(b, {}).setdefault(a, 0)

    for v in range(n):
        if v != s and v != t:
            add_arc(2 * v, 2 * v + 1)
    for u, v in g.edges:
        add_arc(2 * u + 1, 2 * v)
        add_arc(2 * v + 1, 2 * u)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < k:
        pred = {source: -1}
        queue = deque([source])
        while queue and sink not in pred:
            a = queue.popleft()
            for b, c in cap.get(a, {}).items():
                if c > 0 and b not in pred:
                    pred[b] = a
                    queue.append(b)
        if sink not in pred:
            return False
        b = sink
        while b != source:
            a = pred[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    return True


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """Exact decision: does every vertex pair have >= k internally
    vertex-disjoint connecting paths (equivalently, is g k-vertex-connected)?

    k = 1 reduces to connectivity, k = 2 to biconnectivity; for k >= 3 a
    vertex-capacitated max flow is run per non-adjacent pair.
    """
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    n = g.n
    if k > n - 1:
        return False
    if not _is_connected(g):
        return False
    if k == 1:
        return True
    if min(len(b) for b in g.adj) < k:
        return False
    if k == 2:
        return not _has_articulation_point(g)
    if g.is_complete:
        return True  # complete graphs have connectivity n - 1 >= k here
    adjacency = g.edge_set
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) in adjacency:
                continue
            if not _disjoint_paths_at_least(g, u, v, k):
                return False
    return True
