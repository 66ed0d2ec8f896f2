"""Isomorph-free enumeration of trees and connected bipartite graphs.

Free trees come from the Wright-Richmond-Odlyzko-McKay level-sequence
successor rule (constant amortized time per tree). Connected bipartite graphs
are grown one vertex at a time: every connected graph has a non-cut vertex,
so each one arises from a smaller connected bipartite graph by adding a
vertex joined to a nonempty subset of one color class. Duplicates are merged
on the canonical code.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator

from .canon import canonical_graph, canonical_tree
from .errors import OrderTooLarge, ParameterOutOfRange
from .graph import Graph, bipartition, diameter, leaves

TREE_ORDER_CAP = 18
BIPARTITE_ORDER_CAP = 9


# --- free trees ------------------------------------------------------------


def _split(layout: list[int]) -> tuple[list[int], list[int]]:
    """Cut a level sequence into the first root subtree and the remainder."""
    m = len(layout)
    seen_one = False
    for i, h in enumerate(layout):
        if h == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    left = [h - 1 for h in layout[1:m]]
    rest = [0] + layout[m:]
    return left, rest


def _next_rooted(pred: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(pred) - 1
        while pred[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while pred[q] != pred[p] - 1:
        q -= 1
    out = list(pred)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _next_free(cand: list[int]) -> list[int] | None:
    left, rest = _split(cand)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return cand
    p = len(left)
    nxt = _next_rooted(cand, p)
    if nxt is not None and cand[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail) :] = tail
    return nxt


def _layout_graph(layout: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for i, h in enumerate(layout):
        while len(stack) > h:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph(len(layout), edges)


def _level_sequences(n: int) -> Iterator[list[int]]:
    if n <= 2:
        yield list(range(n))
        return
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free(layout)
        if layout is not None:
            yield layout
            layout = _next_rooted(layout)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[tuple[str, Graph], ...]:
    out = [canonical_tree(_layout_graph(seq)) for seq in _level_sequences(n)]
    out.sort(key=lambda cg: cg[0])
    return tuple(out)


def all_trees(n: int) -> Iterator[tuple[str, Graph]]:
    """Every unlabeled tree on ``n`` vertices once, as ``(code, tree)`` in code order."""
    if n < 1:
        raise ParameterOutOfRange(f"tree order must be >= 1, got {n}")
    if n > TREE_ORDER_CAP:
        raise OrderTooLarge(f"tree order {n} exceeds cap {TREE_ORDER_CAP}")
    return iter(_trees(n))


# --- bipartite graphs ------------------------------------------------------


@lru_cache(maxsize=None)
def _connected_bipartite(n: int) -> tuple[tuple[str, Graph], ...]:
    if n == 1:
        return (canonical_graph(Graph(1)),)
    found: dict[str, Graph] = {}
    for _, g in _connected_bipartite(n - 1):
        sides = bipartition(g)
        assert sides is not None
        for side in sides:
            for k in range(1, len(side) + 1):
                for nbrs in combinations(side, k):
                    h = Graph(n, list(g.edges()) + [(v, n - 1) for v in nbrs])
                    code, canon = canonical_graph(h)
                    found.setdefault(code, canon)
    return tuple((c, found[c]) for c in sorted(found))


def all_connected_bipartite(n: int) -> Iterator[tuple[str, Graph]]:
    """Every unlabeled connected bipartite graph on ``n`` vertices once, in code order."""
    if n < 1:
        raise ParameterOutOfRange(f"order must be >= 1, got {n}")
    if n > BIPARTITE_ORDER_CAP:
        raise OrderTooLarge(f"bipartite order {n} exceeds cap {BIPARTITE_ORDER_CAP}")
    return iter(_connected_bipartite(n))


def _partitions(n: int, largest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def all_bipartite(n: int) -> Iterator[tuple[str, Graph]]:
    """Every unlabeled bipartite graph on ``n`` vertices, connected or not."""
    if n > BIPARTITE_ORDER_CAP:
        raise OrderTooLarge(f"bipartite order {n} exceeds cap {BIPARTITE_ORDER_CAP}")
    found: dict[str, Graph] = {}

    def glue(parts: list[Graph]) -> Graph:
        edges, off = [], 0
        for p in parts:
            edges.extend((u + off, v + off) for u, v in p.edges())
            off += p.order
        return Graph(off, edges)

    def choose(sizes: list[int], chosen: list[tuple[int, int]]):
        # components of equal size are taken in nondecreasing index order
        if not sizes:
            parts = [_connected_bipartite(s)[i][1] for s, i in chosen]
            code, canon = canonical_graph(glue(parts), max_order=None)
            found.setdefault(code, canon)
            return
        s = sizes[0]
        lo = chosen[-1][1] if chosen and chosen[-1][0] == s else 0
        for i in range(lo, len(_connected_bipartite(s))):
            choose(sizes[1:], chosen + [(s, i)])

    for sizes in _partitions(n, n):
        choose(sizes, [])
    return iter((c, found[c]) for c in sorted(found))


# --- spaces and shards -----------------------------------------------------


@dataclass(frozen=True)
class EnumerationSpace:
    kind: str  # "trees" or "bipartite"
    order: int
    leaves: int | None = None
    diameter: tuple[int, int] | None = None

    def __post_init__(self):
        if self.kind not in ("trees", "bipartite"):
            raise ParameterOutOfRange(f"unknown enumeration kind {self.kind!r}")
        if self.order < 1:
            raise ParameterOutOfRange("order must be >= 1")

    def accepts(self, g: Graph) -> bool:
        if self.leaves is not None and len(leaves(g)) != self.leaves:
            return False
        if self.diameter is not None:
            lo, hi = self.diameter
            if not lo <= diameter(g) <= hi:
                return False
        return True


def stream(space: EnumerationSpace) -> Iterator[tuple[str, Graph]]:
    source = all_trees if space.kind == "trees" else all_connected_bipartite
    for code, g in source(space.order):
        if space.accepts(g):
            yield code, g


def shard_of(code: str, shards: int) -> int:
    return zlib.crc32(code.encode()) % shards


def shard(space: EnumerationSpace, shards: int) -> list[Iterator[tuple[str, Graph]]]:
    """Disjoint sub-streams; membership is fixed by a CRC of the canonical code."""
    if shards < 1:
        raise ParameterOutOfRange(f"shards must be >= 1, got {shards}")

    def part(i: int) -> Iterator[tuple[str, Graph]]:
        return (cg for cg in stream(space) if shard_of(cg[0], shards) == i)

    return [part(i) for i in range(shards)]


def trees_upto(n_max: int, n_min: int = 1) -> Iterator[tuple[str, Graph]]:
    for n in range(max(1, n_min), n_max + 1):
        yield from all_trees(n)


def bipartite_upto(n_max: int, n_min: int = 1) -> Iterator[tuple[str, Graph]]:
    for n in range(max(1, n_min), n_max + 1):
        yield from all_connected_bipartite(n)


SOURCES: dict[str, Callable[[int], Iterator[tuple[str, Graph]]]] = {
    "trees": all_trees,
    "bipartite": all_connected_bipartite,
}
