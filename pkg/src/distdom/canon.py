"""Canonical codes used for isomorphism rejection.

Trees get an AHU parenthesis string rooted at the center (the smaller of the
two rooted codes for a bicentral tree). General graphs get the graph6 string
of a canonical relabeling found by color refinement plus individualization;
the code is the least adjacency bit string over all leaves of that search.
"""

from __future__ import annotations

from .errors import NotATree, OrderTooLarge, ParseError
from .graph import Graph, bits, is_tree

DEFAULT_ORDER_CAP = 10


def tree_centers(t: Graph) -> list[int]:
    n = t.order
    if n <= 2:
        return list(range(n))
    deg = t.degrees()
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for w in bits(t.masks[u]):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(t: Graph, root: int) -> str:
    # iterative post-order so deep paths do not hit the recursion limit
    masks = t.masks
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in bits(masks[u]):
            if w != parent[u]:
                parent[w] = u
                order.append(w)
    child_codes: dict[int, list[str]] = {v: [] for v in order}
    code = ""
    for v in reversed(order):
        code = "(" + "".join(sorted(child_codes[v])) + ")"
        if parent[v] >= 0:
            child_codes[parent[v]].append(code)
    return code


def tree_canonical_form(t: Graph) -> str:
    """AHU code of the unrooted tree ``t``; equal iff isomorphic."""
    if not is_tree(t):
        raise NotATree("tree_canonical_form needs a tree")
    return min(_rooted_code(t, c) for c in tree_centers(t))


def tree_from_code(code: str) -> Graph:
    """Decode an AHU string; vertices are numbered in preorder."""
    edges = []
    stack: list[int] = []
    count = 0
    for pos, ch in enumerate(code):
        if ch == "(":
            if stack:
                edges.append((stack[-1], count))
            elif count:
                raise ParseError("tree code has more than one root", offset=pos)
            stack.append(count)
            count += 1
        elif ch == ")":
            if not stack:
                raise ParseError("unbalanced tree code", offset=pos)
            stack.pop()
        else:
            raise ParseError(f"unexpected character {ch!r} in tree code", offset=pos)
    if stack or not count:
        raise ParseError("unbalanced tree code", offset=len(code))
    return Graph(count, edges)


def canonical_tree(t: Graph) -> tuple[str, Graph]:
    code = tree_canonical_form(t)
    return code, tree_from_code(code)


# --- general graphs -------------------------------------------------------


def _refine(masks: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition (order is isomorphism-invariant)."""
    while True:
        cell_masks = [sum(1 << v for v in cell) for cell in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((masks[v] & cm).bit_count() for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _code_for(masks: tuple[int, ...], order: list[int]) -> int:
    n = len(order)
    code = 0
    for j in range(1, n):
        mj = masks[order[j]]
        for i in range(j):
            code = (code << 1) | (mj >> order[i] & 1)
    return code


def _canonical_order(masks: tuple[int, ...]) -> list[int]:
    n = len(masks)
    degree_classes: dict[int, list[int]] = {}
    for v in range(n):
        degree_classes.setdefault(masks[v].bit_count(), []).append(v)
    start = [degree_classes[k] for k in sorted(degree_classes)]
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(masks, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _code_for(masks, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        idx = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        target = cells[idx]
        tried: list[int] = []
        for v in target:
            # a twin of an already individualized sibling spans an isomorphic subtree
            if any(
                masks[v] & ~(1 << u) == masks[u] & ~(1 << v) for u in tried
            ):
                continue
            tried.append(v)
            rest = [u for u in target if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1 :])

    search(start)
    return best[1]


def _graph6_body(masks: tuple[int, ...], order: list[int]) -> str:
    from .io import to_graph6

    pos = {v: i for i, v in enumerate(order)}
    relabeled = [0] * len(masks)
    for v, m in enumerate(masks):
        relabeled[pos[v]] = sum(1 << pos[w] for w in bits(m))
    return to_graph6(Graph.from_masks(relabeled))


def canonical_order(g: Graph, max_order: int | None = DEFAULT_ORDER_CAP) -> list[int]:
    """Vertex order ``order`` such that ``relabel(g, order)`` is canonical."""
    if max_order is not None and g.order > max_order:
        raise OrderTooLarge(f"order {g.order} exceeds canonical-form cap {max_order}")
    return _canonical_order(g.masks)


def graph_canonical_form(g: Graph, max_order: int | None = DEFAULT_ORDER_CAP) -> str:
    """graph6 string of the canonical relabeling; equal iff isomorphic."""
    return _graph6_body(g.masks, canonical_order(g, max_order))


def canonical_graph(g: Graph, max_order: int | None = DEFAULT_ORDER_CAP) -> tuple[str, Graph]:
    from .io import from_graph6

    code = graph_canonical_form(g, max_order)
    return code, from_graph6(code)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if is_tree(g) and is_tree(h):
        return tree_canonical_form(g) == tree_canonical_form(h)
    return graph_canonical_form(g, None) == graph_canonical_form(h, None)
