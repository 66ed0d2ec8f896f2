"""Simple undirected graphs on dense vertex indices, plus metric helpers.

Vertices are ``0..n-1``. A :class:`Graph` is immutable; every builder that
adds vertices appends new indices after the existing ones, so witnesses stay
reproducible.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence

from .errors import GraphDisconnected, ParameterOutOfRange

INF = math.inf
"""Distance sentinel for unreachable pairs (serialized as ``"inf"``)."""


class Graph:
    """Immutable simple graph stored as one neighbor bitmask per vertex."""

    __slots__ = ("_n", "_masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ParameterOutOfRange(f"graph order must be >= 1, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ParameterOutOfRange(f"self-loop at {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._n = n
        self._masks = tuple(masks)
        self._edges: tuple[tuple[int, int], ...] | None = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        if len(masks) < 1:
            raise ParameterOutOfRange("graph order must be >= 1")
        g._n = len(masks)
        g._masks = tuple(masks)
        g._edges = None
        return g

    @property
    def order(self) -> int:
        return self._n

    n = order

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def neighbors(self, v: int) -> list[int]:
        return bits(self._masks[v])

    def degree(self, v: int) -> int:
        return self._masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._masks]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Sorted ``(u, v)`` pairs with ``u < v``."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self._n) for v in bits(self._masks[u]) if u < v
            )
        return self._edges

    @property
    def size(self) -> int:
        return sum(m.bit_count() for m in self._masks) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        return f"Graph({self._n}, {list(self.edges())})"


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Hop distance from ``source`` to every vertex; ``INF`` when unreachable."""
    if not 0 <= source < g.order:
        raise ParameterOutOfRange(f"source {source} not in graph of order {g.order}")
    dist: list[float] = [INF] * g.order
    dist[source] = 0
    queue = deque([source])
    masks = g.masks
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in bits(masks[u]):
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs(g: Graph) -> list[list[float]]:
    """Distance table, one BFS per vertex."""
    return [bfs_distances(g, v) for v in range(g.order)]


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    masks = g.masks
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.order) - 1


def components(g: Graph) -> list[list[int]]:
    left = (1 << g.order) - 1
    out = []
    while left:
        start = left & -left
        seen = frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.masks[v]
            frontier = nxt & ~seen
            seen |= nxt
        out.append(bits(seen))
        left &= ~seen
    return out


def shortest_path(g: Graph, source: int, target: int) -> list[int]:
    """Lexicographically least shortest path (BFS scanning neighbors in index order)."""
    parent = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            break
        for w in bits(g.masks[u]):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if target not in parent:
        raise GraphDisconnected(f"no path between {source} and {target}")
    path = [target]
    while path[-1] != source:
        path.append(parent[path[-1]])
    return path[::-1]


def diameter(g: Graph) -> float:
    return max(max(row) for row in all_pairs(g))


def diametrical_path(g: Graph) -> list[int]:
    """A shortest path whose length equals the diameter.

    The endpoints are the lexicographically least pair ``x < y`` at maximum
    distance, and the path starts at ``x``.
    """
    if not is_connected(g):
        raise GraphDisconnected("diametrical path needs a connected graph")
    table = all_pairs(g)
    best = (0, 0, 0)
    for x in range(g.order):
        for y in range(x + 1, g.order):
            if table[x][y] > best[0]:
                best = (table[x][y], x, y)
    _, x, y = best
    return shortest_path(g, x, y)


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Two-coloring ``(X, Y)`` or ``None`` when an odd cycle exists.

    Each component is colored from its least vertex, so for connected graphs
    ``X`` is the side containing vertex 0.
    """
    color = [-1] * g.order
    for comp in components(g):
        root = comp[0]
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in bits(g.masks[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    xs = [v for v in range(g.order) if color[v] == 0]
    ys = [v for v in range(g.order) if color[v] == 1]
    return xs, ys


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def leaves(g: Graph) -> list[int]:
    return [v for v in range(g.order) if g.masks[v].bit_count() == 1]


def support_vertices(g: Graph) -> list[int]:
    leaf_mask = sum(1 << v for v in leaves(g))
    return [v for v in range(g.order) if g.masks[v] & leaf_mask]


def is_tree(g: Graph) -> bool:
    return g.size == g.order - 1 and is_connected(g)


def attach_path(g: Graph, v: int, k: int) -> Graph:
    """Append a ``k``-vertex path whose first vertex is joined to ``v``."""
    if not 0 <= v < g.order:
        raise ParameterOutOfRange(f"vertex {v} not in graph of order {g.order}")
    if k < 1:
        raise ParameterOutOfRange(f"path length must be >= 1, got {k}")
    n = g.order
    edges = list(g.edges()) + [(v, n)] + [(n + i, n + i + 1) for i in range(k - 1)]
    return Graph(n + k, edges)


def add_leaves(g: Graph, counts: Sequence[int]) -> Graph:
    """Attach ``counts[v]`` new pendant vertices to each vertex ``v`` in turn."""
    edges = list(g.edges())
    n = g.order
    for v, c in enumerate(counts):
        for _ in range(c):
            edges.append((v, n))
            n += 1
    return Graph(n, edges)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``keep``; returns it with the old index of each new vertex."""
    old = sorted(set(keep))
    index = {v: i for i, v in enumerate(old)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph(len(old), edges), old


def remove_vertices(g: Graph, drop: Iterable[int]) -> Graph:
    dropped = set(drop)
    return induced_subgraph(g, (v for v in range(g.order) if v not in dropped))[0]


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``g``."""
    pos = {v: i for i, v in enumerate(order)}
    return Graph(g.order, [(pos[u], pos[v]) for u, v in g.edges()])
