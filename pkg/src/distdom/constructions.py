"""Builders for the named graphs and extremal families.

Single builders return a :class:`Graph` with a documented vertex order.
Family streams yield ``(code, graph)`` pairs sorted by canonical code, each
isomorphism class once; the graph is the canonical relabeling.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .canon import canonical_graph, canonical_tree, tree_canonical_form
from .errors import ParameterOutOfRange
from .graph import Graph, add_leaves, attach_path, is_tree, leaves, support_vertices


class FamilyTag(str, enum.Enum):
    B = "B_d"
    T = "T_d"
    ZETA1 = "zeta1"
    F = "F_d"
    FPRIME = "F'_d"
    COUNTEREXAMPLE = "counterexample"
    PRIMITIVE = "primitive"


@dataclass(frozen=True)
class CoronaDecomposition:
    """Anchors (the copy of H) and, per anchor, its pendant path listed outer end first."""

    anchors: tuple[int, ...]
    path_of: dict

    def to_dict(self) -> dict:
        return {
            "anchors": list(self.anchors),
            "paths": {str(a): list(self.path_of[a]) for a in self.anchors},
        }


# --- primitives ------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterOutOfRange(f"path order must be >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterOutOfRange(f"cycle order must be >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(t: int) -> Graph:
    """K_{1,t} with center 0."""
    if t < 0:
        raise ParameterOutOfRange(f"star needs t >= 0, got {t}")
    return Graph(t + 1, [(0, i) for i in range(1, t + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterOutOfRange(f"complete graph order must be >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(r: int, s: int) -> Graph:
    """K_{r,s}; vertices 0..r-1 form the first side."""
    if r < 1 or s < 1:
        raise ParameterOutOfRange(f"K_{{r,s}} needs r, s >= 1, got {r}, {s}")
    return Graph(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def double_star(r: int, s: int) -> Graph:
    """D_{r,s}: centers 0 and 1, then r leaves on 0, then s leaves on 1."""
    if r < 1 or s < 1:
        raise ParameterOutOfRange(f"double star needs r, s >= 1, got {r}, {s}")
    edges = [(0, 1)] + [(0, 2 + i) for i in range(r)] + [(1, 2 + r + i) for i in range(s)]
    return Graph(r + s + 2, edges)


# --- operations ------------------------------------------------------------


def corona(h: Graph, d: int) -> tuple[Graph, CoronaDecomposition]:
    """H o P_d. Anchors keep H's indices; anchor a's path is appended after H.

    Vertex ``h.order + a*d`` is adjacent to ``a`` and the path runs outward.
    """
    if d < 1:
        raise ParameterOutOfRange(f"corona needs d >= 1, got {d}")
    m = h.order
    edges = list(h.edges())
    path_of = {}
    for a in range(m):
        first = m + a * d
        chain = list(range(first, first + d))
        edges.append((a, first))
        edges.extend(zip(chain, chain[1:]))
        path_of[a] = tuple(reversed(chain))
    return Graph(m * (d + 1), edges), CoronaDecomposition(tuple(range(m)), path_of)


def d_subdivision(t: Graph, d: int) -> Graph:
    """Replace every edge (in sorted order) by a path with d new internal vertices."""
    if d < 0:
        raise ParameterOutOfRange(f"subdivision count must be >= 0, got {d}")
    n = t.order
    edges = []
    for u, v in t.edges():
        chain = [u] + list(range(n, n + d)) + [v]
        edges.extend(zip(chain, chain[1:]))
        n += d
    return Graph(n, edges)


def counterexample_gnkd(n: int, k: int, d: int) -> Graph:
    """K_n with k copies of P_d attached to every vertex (vertex by vertex, copy by copy)."""
    if d < 1 or n < d + 2 or k < 2:
        raise ParameterOutOfRange(f"G_(n,k,d) needs d >= 1, n >= d+2, k >= 2; got {n}, {k}, {d}")
    g = complete(n)
    for v in range(n):
        for _ in range(k):
            g = attach_path(g, v, d)
    return g


def subdivided_star(t: int, d: int) -> Graph:
    """(d-1)-subdivision of K_{1,t}: center 0 with t legs of d vertices."""
    return d_subdivision(star(t), d - 1)


def joined_subdivided_stars(t1: int, t2: int, d: int) -> Graph:
    """(d-1)-subdivided stars K_{1,t1} and K_{1,t2} with centers 0 and 1 joined."""
    if t1 < 2 or t2 < 2 or d < 2:
        raise ParameterOutOfRange(f"need t1, t2 >= 2 and d >= 2; got {t1}, {t2}, {d}")
    edges = [(0, 1)]
    n = 2
    for center, t in ((0, t1), (1, t2)):
        for _ in range(t):
            chain = [center] + list(range(n, n + d))
            edges.extend(zip(chain, chain[1:]))
            n += d
    return Graph(n, edges)


def leafy_corona(t_star: Graph, r: int) -> Graph:
    """T* o P_1 with r extra leaves on every vertex (the gamma_1^1 > n - l family)."""
    base, _ = corona(t_star, 1)
    return add_leaves(base, [r] * base.order)


# --- family streams --------------------------------------------------------


def _sorted_unique(pairs) -> list[tuple[str, Graph]]:
    seen: dict[str, Graph] = {}
    for code, g in pairs:
        seen.setdefault(code, g)
    return [(c, seen[c]) for c in sorted(seen)]


def zeta1_members(max_order: int) -> Iterator[tuple[str, Graph]]:
    """Closure of the zeta_1 recursion from K_2 up to ``max_order`` vertices."""
    if max_order < 2:
        return iter(())
    found: dict[str, Graph] = {}
    frontier = [canonical_tree(path(2))]
    found[frontier[0][0]] = frontier[0][1]
    while frontier:
        nxt = []
        for _, tp in frontier:
            for v in support_vertices(tp):
                t = 1
                while tp.order + 2 * t <= max_order:
                    # new star center u, its t leaves, then t-1 leaves at v
                    u = tp.order
                    edges = list(tp.edges()) + [(v, u)]
                    edges += [(u, u + 1 + i) for i in range(t)]
                    nv = u + 1 + t
                    edges += [(v, nv + i) for i in range(t - 1)]
                    code, canon = canonical_tree(Graph(tp.order + 2 * t, edges))
                    if code not in found:
                        found[code] = canon
                        nxt.append((code, canon))
                    t += 1
        frontier = nxt
    return iter(_sorted_unique(found.items()))


def family_T_d(max_order: int, d: int) -> Iterator[tuple[str, Graph]]:
    """Coronas T* o P_d of non-trivial trees T*, as trees."""
    from .enumeration import all_trees

    out = []
    for m in range(2, max_order // (d + 1) + 1):
        for _, h in all_trees(m):
            out.append(canonical_tree(corona(h, d)[0]))
    return iter(_sorted_unique(out))


def family_B_d(max_order: int, d: int, connected: bool = True) -> Iterator[tuple[str, Graph]]:
    """Coronas H o P_d of bipartite H (connected H unless ``connected=False``)."""
    from .enumeration import all_bipartite, all_connected_bipartite

    source = all_connected_bipartite if connected else all_bipartite
    out = []
    for m in range(1, max_order // (d + 1) + 1):
        for _, h in source(m):
            out.append(canonical_graph(corona(h, d)[0], max_order=None))
    return iter(_sorted_unique(out))


def _pendant_extensions(core: Graph, budget: int) -> Iterator[Graph]:
    """Trees from ``core`` by >= 1 pendant per leaf of core, >= 0 elsewhere, at most ``budget`` added."""
    lv = set(leaves(core))
    if core.order == 1:
        lv = set()
    mins = [1 if v in lv else 0 for v in range(core.order)]
    if sum(mins) > budget:
        return
    spare = budget - sum(mins)

    def counts(i: int, left: int):
        if i == core.order:
            yield []
            return
        for c in range(left + 1):
            for tail in counts(i + 1, left - c):
                yield [c] + tail

    for extra in counts(0, spare):
        yield add_leaves(core, [m + e for m, e in zip(mins, extra)])


def _F_bases(max_order: int, d: int, prime: bool):
    from .enumeration import all_trees

    base_max = max_order - 2
    if d == 2:
        if prime:
            yield canonical_tree(path(2))
            yield from family_T_d(base_max, 1)
        else:
            yield from zeta1_members(base_max)
        return
    if d <= base_max:
        yield from all_trees(d)
    yield from family_T_d(base_max, d - 1)


def _family_star(max_order: int, d: int, prime: bool) -> Iterator[tuple[str, Graph]]:
    if d < 2:
        raise ParameterOutOfRange(f"F_d is defined for d >= 2, got {d}")
    out = []
    for _, core in _F_bases(max_order, d, prime):
        for t in _pendant_extensions(core, max_order - core.order):
            out.append(canonical_tree(t))
    return iter(_sorted_unique(out))


def family_F_d(max_order: int, d: int) -> Iterator[tuple[str, Graph]]:
    """Trees whose non-leaf core is in zeta_1 (d = 2) or has order d / lies in T_{d-1}."""
    return _family_star(max_order, d, prime=False)


def family_Fprime_d(max_order: int, d: int) -> Iterator[tuple[str, Graph]]:
    """As :func:`family_F_d`, except for d = 2 the core ranges over {K_2} and T_1."""
    return _family_star(max_order, d, prime=d == 2)


def build(spec: str) -> Graph:
    """Parse a short graph spec such as ``path:5``, ``complete_bipartite:3,3`` or ``gnkd:4,2,2``."""
    name, _, arg = spec.partition(":")
    try:
        args = [int(x) for x in arg.split(",")] if arg else []
    except ValueError:
        raise ParameterOutOfRange(f"bad parameters in graph spec {spec!r}") from None
    builders = {
        "path": path,
        "cycle": cycle,
        "star": star,
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "double_star": double_star,
        "gnkd": counterexample_gnkd,
        "joined_stars": joined_subdivided_stars,
        "subdivided_star": subdivided_star,
    }
    name = name.replace("-", "_")
    if name not in builders:
        raise ParameterOutOfRange(f"unknown graph spec {name!r}; known: {', '.join(sorted(builders))}")
    try:
        return builders[name](*args)
    except TypeError:
        raise ParameterOutOfRange(f"wrong number of parameters in graph spec {spec!r}") from None


def tree_code_or_graph_code(g: Graph) -> str:
    if is_tree(g):
        return tree_canonical_form(g)
    from .canon import graph_canonical_form

    return graph_canonical_form(g, max_order=None)

