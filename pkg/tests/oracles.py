"""Slow, independent reference implementations used only by the tests.

None of these share code paths with the library beyond the Graph container.
"""

from __future__ import annotations

import heapq
from itertools import combinations, permutations, product

import networkx as nx

from distdom.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    u, v = heapq.heappop(heap), heapq.heappop(heap)
    edges.append((u, v))
    return edges


def _dedup_nx(graphs: list[nx.Graph]) -> list[nx.Graph]:
    buckets: dict[str, list[nx.Graph]] = {}
    for h in graphs:
        key = nx.weisfeiler_lehman_graph_hash(h, iterations=4)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(h, other) for other in bucket):
            bucket.append(h)
    return [h for bucket in buckets.values() for h in bucket]


def prufer_tree_classes(n: int) -> list[nx.Graph]:
    """Unlabeled trees on n vertices, from Prüfer sequences deduped by networkx isomorphism.

    The non-leaves of a labeled tree are exactly the labels occurring in its
    Prüfer sequence, and any tree can be labeled so that its k non-leaves
    carry the top k labels; only those sequences are decoded.
    """
    if n == 1:
        h = nx.Graph()
        h.add_node(0)
        return [h]
    if n == 2:
        return [nx.path_graph(2)]
    graphs = []
    for k in range(1, n - 1):
        top = list(range(n - k, n))
        for seq in product(top, repeat=n - 2):
            if len(set(seq)) != k:
                continue
            h = nx.Graph()
            h.add_nodes_from(range(n))
            h.add_edges_from(prufer_decode(seq, n))
            graphs.append(h)
    return _dedup_nx(graphs)


def bipartite_classes_bruteforce(n: int) -> list[nx.Graph]:
    """Unlabeled connected bipartite graphs: every edge subset of K_n, filtered, deduped."""
    pairs = list(combinations(range(n), 2))
    found = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(edges)
        if nx.is_connected(h) and nx.is_bipartite(h):
            found.append(h)
    return _dedup_nx(found)


def permutation_code(g: Graph) -> tuple[int, ...]:
    """Least upper-triangle adjacency string over all vertex permutations."""
    n = g.order
    best = None
    for perm in permutations(range(n)):
        code = tuple(
            int(g.has_edge(perm[i], perm[j])) for j in range(n) for i in range(j)
        )
        if best is None or code < best:
            best = code
    return best


def pendant_paths_bruteforce(t: Graph) -> dict[int, list[int]]:
    """For each v, lengths k of chains u_1..u_k (u_1 a leaf, inner degrees 2, u_k ~ v)."""
    nxt = to_nx(t)
    out: dict[int, list[int]] = {v: [] for v in range(t.order)}
    for leaf in range(t.order):
        if t.degree(leaf) != 1:
            continue
        for v in range(t.order):
            if v == leaf:
                continue
            route = nx.shortest_path(nxt, leaf, v)
            chain = route[:-1]
            if all(t.degree(u) == 2 for u in chain[1:]):
                out[v].append(len(chain))
    return {v: sorted(ls) for v, ls in out.items()}


def corona_anchor_sets(g: Graph, d: int) -> list[tuple[int, ...]]:
    """All anchor sets A with g = H o P_d on A, by trying every subset of the right size."""
    n = g.order
    if n % (d + 1):
        return []
    m = n // (d + 1)
    nbrs = [set(g.neighbors(v)) for v in range(n)]
    found = []
    for anchors in combinations(range(n), m):
        aset = set(anchors)
        rest = set(range(n)) - aset
        seen: set[int] = set()
        used: set[int] = set()
        ok = True
        for start in sorted(rest):
            if start in seen:
                continue
            comp, stack = {start}, [start]
            while stack:
                v = stack.pop()
                for w in nbrs[v] & rest:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            inner_deg = {v: len(nbrs[v] & comp) for v in comp}
            edges = sum(inner_deg.values()) // 2
            is_path = len(comp) == d and edges == d - 1 and max(inner_deg.values()) <= 2
            links = [(u, a) for u in comp for a in nbrs[u] & aset]
            if not is_path or len(links) != 1:
                ok = False
                break
            u, a = links[0]
            if (d > 1 and inner_deg[u] != 1) or a in used:
                ok = False
                break
            used.add(a)
        if ok and len(used) == m:
            found.append(anchors)
    return found


def has_odd_cycle(g: Graph) -> bool:
    """An odd closed walk exists (search on the parity double cover), hence an odd cycle."""
    n = g.order
    for s in range(n):
        seen = {(s, 0)}
        stack = [(s, 0)]
        while stack:
            v, par = stack.pop()
            for w in g.neighbors(v):
                state = (w, par ^ 1)
                if state not in seen:
                    seen.add(state)
                    stack.append(state)
        if (s, 1) in seen:
            return True
    return False
