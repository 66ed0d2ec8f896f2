"""Structural membership tests for the extremal families.

Nothing here computes a domination number, so these predicates can be
checked against the solver independently.

A path ``P_k`` is *attached* to ``v`` when some neighbor ``w`` of ``v``
starts a branch of ``T - v`` that is a ``k``-vertex path with ``w`` at one
end. :func:`support_profile` lists those lengths for every vertex.
"""

from __future__ import annotations

from functools import lru_cache

from .canon import is_isomorphic, tree_canonical_form, tree_from_code
from .constructions import CoronaDecomposition, joined_subdivided_stars
from .errors import GraphDisconnected, NotATree, NotBipartite, ParameterOutOfRange
from .graph import (
    Graph,
    all_pairs,
    bits,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_tree,
    leaves,
    remove_vertices,
    shortest_path,
)


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise NotATree("expected a tree")


def _branch_path_length(g: Graph, v: int, w: int) -> int | None:
    """Length of the branch at ``v`` through ``w`` if it is a path hanging by ``w``."""
    prev, cur, length = v, w, 1
    while True:
        deg = g.degree(cur)
        if deg == 1:
            return length
        if deg != 2:
            return None
        (nxt,) = [x for x in bits(g.masks[cur]) if x != prev]
        prev, cur, length = cur, nxt, length + 1
        if cur == v:
            return None  # went round a cycle


def support_profile(t: Graph) -> dict[int, list[int]]:
    """Sorted lengths of the paths attached at each vertex."""
    _require_tree(t)
    profile = {}
    for v in range(t.order):
        lengths = [
            k for w in bits(t.masks[v]) if (k := _branch_path_length(t, v, w)) is not None
        ]
        profile[v] = sorted(lengths)
    return profile


def is_Pk_support(profile: dict[int, list[int]], v: int, k: int) -> bool:
    return k in profile[v]


def is_PiPj_support(profile: dict[int, list[int]], v: int, i: int, j: int) -> bool:
    lengths = profile[v]
    if i == j:
        return lengths.count(i) >= 2
    return i in lengths and j in lengths


# --- coronas ---------------------------------------------------------------


def verify_corona_decomposition(g: Graph, c: CoronaDecomposition, d: int) -> bool:
    anchors = list(c.anchors)
    if set(c.path_of) != set(anchors):
        return False
    covered = list(anchors)
    for a in anchors:
        chain = list(c.path_of[a])
        if len(chain) != d:
            return False
        covered.extend(chain)
    if sorted(covered) != list(range(g.order)):
        return False
    anchor_set = set(anchors)
    for a in anchors:
        # outer end first: chain[-1] touches the anchor
        seq = list(c.path_of[a]) + [a]
        for x, y in zip(seq, seq[1:]):
            if not g.has_edge(x, y):
                return False
        for idx, x in enumerate(c.path_of[a]):
            allowed = {seq[k] for k in (idx - 1, idx + 1) if 0 <= k < len(seq)}
            if set(g.neighbors(x)) != allowed:
                return False
        if not set(g.neighbors(a)) - anchor_set <= {seq[-2]}:
            return False
    return True


def is_corona(g: Graph, d: int) -> CoronaDecomposition | None:
    """Decompose ``g`` as ``H o P_d`` for a connected ``H``, or return ``None``.

    When ``H`` has two or more vertices every anchor has degree at least 2,
    so the leaves of ``g`` are exactly the outer path ends and walking ``d``
    steps in from each leaf fixes the whole decomposition. The single-anchor
    case is ``P_{d+1}`` itself, anchored at its least-index end.
    """
    if d < 1:
        raise ParameterOutOfRange(f"d must be >= 1, got {d}")
    if not is_connected(g):
        raise GraphDisconnected("is_corona needs a connected graph")
    n = g.order
    if n % (d + 1):
        return None
    if n == d + 1:
        ends = [v for v in range(n) if g.degree(v) <= 1]
        if g.size != d or (n > 1 and len(ends) != 2):
            return None
        anchor = ends[0]
        chain = shortest_path(g, anchor, ends[-1])[1:]
        cert = CoronaDecomposition((anchor,), {anchor: tuple(reversed(chain))})
        return cert if verify_corona_decomposition(g, cert, d) else None
    path_of = {}
    for leaf in leaves(g):
        chain = [leaf]
        prev, cur = -1, leaf
        for _ in range(d):
            nxt = [x for x in bits(g.masks[cur]) if x != prev]
            if len(nxt) != 1:
                return None
            prev, cur = cur, nxt[0]
            chain.append(cur)
        anchor = chain[-1]
        if anchor in path_of:
            return None
        path_of[anchor] = tuple(chain[:-1])
    anchors = tuple(sorted(path_of))
    if len(anchors) * (d + 1) != n:
        return None
    cert = CoronaDecomposition(anchors, path_of)
    return cert if verify_corona_decomposition(g, cert, d) else None


def corona_base(g: Graph, c: CoronaDecomposition) -> Graph:
    """The graph ``H`` induced on the anchors."""
    return induced_subgraph(g, c.anchors)[0]


def in_T_d(t: Graph, d: int) -> bool:
    """``t`` is ``T* o P_d`` for a tree ``T*`` on at least two vertices."""
    _require_tree(t)
    c = is_corona(t, d)
    return c is not None and len(c.anchors) >= 2


def in_B_d(g: Graph, d: int) -> bool:
    """``g`` is ``H o P_d`` for a connected bipartite ``H``."""
    if not is_connected(g):
        raise GraphDisconnected("in_B_d needs a connected graph")
    if not is_bipartite(g):
        raise NotBipartite("in_B_d needs a bipartite graph")
    return is_corona(g, d) is not None


# --- zeta_1 ----------------------------------------------------------------


def _peel_options(t: Graph):
    """Trees ``T'`` that the zeta_1 rule could have grown into ``t``."""
    deg = t.degrees()
    is_leaf = [x == 1 for x in deg]
    for u in range(t.order):
        nbrs = t.neighbors(u)
        inner = [w for w in nbrs if not is_leaf[w]]
        if len(inner) != 1:
            continue
        v = inner[0]
        u_leaves = [w for w in nbrs if is_leaf[w]]
        size = len(u_leaves)
        if size < 1:
            continue
        v_leaves = [w for w in t.neighbors(v) if is_leaf[w]]
        if len(v_leaves) < size - 1:
            continue
        # leaves of v are interchangeable, so dropping the last ones loses nothing
        drop = {u, *u_leaves, *v_leaves[len(v_leaves) - (size - 1) :]}
        kept = [x for x in range(t.order) if x not in drop]
        reduced, old = induced_subgraph(t, kept)
        new_v = old.index(v)
        if any(reduced.degree(w) == 1 for w in reduced.neighbors(new_v)):
            yield reduced


@lru_cache(maxsize=None)
def _zeta1_code(code: str) -> bool:
    t = tree_from_code(code)
    if t.order == 2:
        return True
    if t.order < 2 or t.order % 2:
        return False
    return any(_zeta1_code(tree_canonical_form(r)) for r in _peel_options(t))


def in_zeta1(t: Graph) -> bool:
    """Membership in the recursive family grown from K_2, by reverse peeling."""
    _require_tree(t)
    return _zeta1_code(tree_canonical_form(t))


def nonleaf_core(t: Graph) -> Graph | None:
    """``T - L(T)``, or ``None`` when nothing is left."""
    lv = leaves(t)
    if len(lv) >= t.order:
        return None
    if t.order == 1:
        return t
    return remove_vertices(t, lv)


def in_F_d(t: Graph, d: int) -> bool:
    if d < 2:
        raise ParameterOutOfRange(f"F_d needs d >= 2, got {d}")
    _require_tree(t)
    core = nonleaf_core(t)
    if core is None or t.order < 3:
        return False
    if d == 2:
        return in_zeta1(core)
    return core.order == d or in_T_d(core, d - 1)


def in_Fprime_d(t: Graph, d: int) -> bool:
    if d < 2:
        raise ParameterOutOfRange(f"F'_d needs d >= 2, got {d}")
    if d >= 3:
        return in_F_d(t, d)
    _require_tree(t)
    core = nonleaf_core(t)
    if core is None or t.order < 3:
        return False
    return core.order == 2 or in_T_d(core, 1)


def is_path_graph(g: Graph) -> bool:
    return is_tree(g) and max(g.degrees(), default=0) <= 2


# --- structural lemma on trees with long diameter --------------------------


def lemma34_hypotheses(t: Graph, d: int) -> bool:
    """diam >= 2d+1, no attached P_{d+1}, and no vertex carrying two attached
    paths of lengths i <= d-1 and j <= d."""
    if d < 2:
        raise ParameterOutOfRange(f"d must be >= 2, got {d}")
    _require_tree(t)
    table = all_pairs(t)
    if max(max(row) for row in table) < 2 * d + 1:
        return False
    profile = support_profile(t)
    for v, lengths in profile.items():
        if d + 1 in lengths:
            return False
        short = [k for k in lengths if k <= d]
        if len(short) >= 2 and short[0] <= d - 1:
            return False
    return True


def _children(t: Graph, root: int) -> tuple[dict[int, list[int]], dict[int, int]]:
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in bits(t.masks[u]):
            if w != parent[u]:
                parent[w] = u
                order.append(w)
    kids: dict[int, list[int]] = {v: [] for v in order}
    for v in order[1:]:
        kids[parent[v]].append(v)
    return kids, parent


def _subtree(kids: dict[int, list[int]], v: int) -> list[int]:
    out = [v]
    for u in out:
        out.extend(kids[u])
    return out


def _is_subdivided_star_at(kids: dict[int, list[int]], v: int, d: int) -> bool:
    """T_v is a (d-1)-subdivided K_{1,t} centered at v with t >= 2."""
    if len(kids[v]) < 2:
        return False
    for c in kids[v]:
        length, cur = 1, c
        while kids[cur]:
            if len(kids[cur]) != 1:
                return False
            cur = kids[cur][0]
            length += 1
        if length != d:
            return False
    return True


def _diametrical_pairs(t: Graph) -> list[tuple[int, int]]:
    table = all_pairs(t)
    s = max(max(row) for row in table)
    return [(x, y) for x in range(t.order) for y in range(t.order) if table[x][y] == s and x != y]


def lemma34_check(t: Graph, d: int, all_paths: bool = True) -> list[str]:
    """Clauses (i)-(v) that fail, for every diametrical path in both directions.

    Entries look like ``"ii@(x,y)"`` where ``x..y`` is the offending path.
    """
    if d < 2:
        raise ParameterOutOfRange(f"d must be >= 2, got {d}")
    _require_tree(t)
    pairs = _diametrical_pairs(t)
    if not all_paths:
        pairs = pairs[:1]
    deg = t.degrees()
    bad: list[str] = []
    two_star = None
    for x, y in pairs:
        p = shortest_path(t, x, y)  # p[k-1] is v_k
        s = len(p) - 1
        tag = f"@({x},{y})"

        def v(k: int) -> int:
            return p[k - 1]

        ks = list(range(2, d + 1)) + list(range(s - d + 2, s + 1))
        if any(deg[v(k)] != 2 for k in ks):
            bad.append("i" + tag)
        if any(deg[v(k)] < 3 for k in (d + 1, s - d + 1)):
            bad.append("ii" + tag)
        kids, _ = _children(t, v(s + 1))
        for u in range(t.order):
            if deg[u] >= 3 and all(deg[w] <= 2 for w in _subtree(kids, u)[1:]):
                if not _is_subdivided_star_at(kids, u, d):
                    bad.append("iii" + tag)
                    break
        if not _is_subdivided_star_at(kids, v(d + 1), d):
            bad.append("iv" + tag)
        if s == 2 * d + 1:
            if two_star is None:
                two_star = _is_two_subdivided_stars(t, d)
            if not two_star:
                bad.append("v" + tag)
    return bad


def _is_two_subdivided_stars(t: Graph, d: int) -> bool:
    total = (t.order - 2) // d
    if (t.order - 2) % d:
        return False
    return any(
        is_isomorphic(t, joined_subdivided_stars(t1, total - t1, d))
        for t1 in range(2, total - 1)
    )
