"""Exact d-distance p-packing domination.

A set ``S`` is *d-dominating* when every vertex outside ``S`` is within
distance ``d`` of ``S``, and a *p-packing* when its members are pairwise at
distance at least ``p + 1``. :func:`gamma` returns the least size of a set
that is both, with the lexicographically least such set as witness, or
``INF`` when none exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (
    GraphDisconnected,
    NotBipartite,
    OrderTooSmall,
    ParameterOutOfRange,
)
from .graph import (
    INF,
    Graph,
    all_pairs,
    bfs_distances,
    bipartition,
    bits,
    diametrical_path,
    is_connected,
    is_tree,
    leaves,
)


@dataclass(frozen=True)
class DominationQuery:
    d: int
    p: int = 1

    def __post_init__(self):
        if self.d < 1:
            raise ParameterOutOfRange(f"d must be >= 1, got {self.d}")
        if self.p < 0:
            raise ParameterOutOfRange(f"p must be >= 0, got {self.p}")


@dataclass(frozen=True)
class GammaWitness:
    value: float  # int, or INF
    witness: tuple[int, ...] = ()

    @property
    def finite(self) -> bool:
        return self.value != INF

    def to_dict(self) -> dict:
        return {
            "value": "inf" if not self.finite else int(self.value),
            "witness": list(self.witness),
        }


@dataclass(frozen=True)
class LevelPartition:
    parts: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def _as_mask(s) -> int:
    return sum(1 << v for v in set(s))


def is_d_dominating(g: Graph, s: Sequence[int], d: int) -> bool:
    members = set(s)
    if not members:
        return False
    dists = [bfs_distances(g, w) for w in members]
    return all(v in members or any(row[v] <= d for row in dists) for v in range(g.order))


def is_p_packing(g: Graph, s: Sequence[int], p: int) -> bool:
    members = sorted(set(s))
    for i, w in enumerate(members):
        row = bfs_distances(g, w)
        if any(row[x] < p + 1 for x in members[i + 1 :]):
            return False
    return True


class _Balls:
    """Per-vertex bitmasks: the radius-d ball and the radius-p conflict zone."""

    def __init__(self, g: Graph, d: int, p: int):
        table = all_pairs(g)
        n = g.order
        self.n = n
        self.full = (1 << n) - 1
        self.ball = [sum(1 << w for w in range(n) if table[v][w] <= d) for v in range(n)]
        self.conflict = [sum(1 << w for w in range(n) if table[v][w] <= p) for v in range(n)]


def _exists(b: _Balls, k: int) -> bool:
    """Is there a valid set of size <= k? Branches on the hardest undominated vertex."""
    ball, conflict, full = b.ball, b.conflict, b.full
    maxball = max(x.bit_count() for x in ball)

    def rec(dominated: int, allowed: int, left: int) -> bool:
        if dominated == full:
            return True
        if left == 0:
            return False
        undominated = full & ~dominated
        if undominated.bit_count() > left * maxball:
            return False
        best, best_cands = -1, 0
        best_count = 1 << 30
        rest = undominated
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            cands = ball[u] & allowed
            c = cands.bit_count()
            if c < best_count:
                best, best_cands, best_count = u, cands, c
                if c == 0:
                    return False
        cands = sorted(bits(best_cands), key=lambda w: -(ball[w] & undominated).bit_count())
        for w in cands:
            if rec(dominated | ball[w], allowed & ~conflict[w], left - 1):
                return True
            allowed &= ~(1 << w)
        return False

    return rec(0, full, k)


def _lex_least(b: _Balls, k: int) -> tuple[int, ...] | None:
    """Lexicographically least valid set of size exactly k (sets compared as sorted tuples)."""
    ball, conflict, full, n = b.ball, b.conflict, b.full, b.n
    chosen: list[int] = []

    def rec(start: int, dominated: int, allowed: int, left: int) -> bool:
        if left == 0:
            return dominated == full
        cand_mask = allowed & ~((1 << start) - 1)
        undominated = full & ~dominated
        rest = undominated
        while rest:
            low = rest & -rest
            rest ^= low
            if not ball[low.bit_length() - 1] & cand_mask:
                return False
        for w in bits(cand_mask):
            chosen.append(w)
            if rec(w + 1, dominated | ball[w], allowed & ~conflict[w], left - 1):
                return True
            chosen.pop()
        return False

    if rec(0, 0, full, k):
        return tuple(chosen)
    return None


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphDisconnected("domination numbers are computed on connected graphs only")


def gamma(g: Graph, q: DominationQuery | tuple[int, int]) -> GammaWitness:
    """Exact ``gamma_d^p(g)`` with the lexicographically least optimal witness."""
    if not isinstance(q, DominationQuery):
        q = DominationQuery(*q)
    _require_connected(g)
    b = _Balls(g, q.d, q.p)
    for k in range(1, g.order + 1):
        if _exists(b, k):
            witness = _lex_least(b, k)
            assert witness is not None
            return GammaWitness(k, witness)
    return GammaWitness(INF, ())


def gamma_bruteforce(g: Graph, q: DominationQuery | tuple[int, int]) -> GammaWitness:
    """Reference oracle: subsets by size, then lexicographically, both predicates tested directly."""
    if not isinstance(q, DominationQuery):
        q = DominationQuery(*q)
    _require_connected(g)
    table = all_pairs(g)
    n = g.order
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            if any(table[a][c] < q.p + 1 for a, c in combinations(s, 2)):
                continue
            if all(min(table[v][w] for w in s) <= q.d for v in range(n)):
                return GammaWitness(k, s)
    return GammaWitness(INF, ())


# --- vertex partitions into independent d-dominating sets ----------------


def _slices(xs: list[int], k: int) -> list[tuple[int, ...]]:
    # k nonempty consecutive slices; the first absorbs the surplus
    head = len(xs) - (k - 1)
    return [tuple(xs[:head])] + [(x,) for x in xs[head:]] if k else []


def level_partition(g: Graph, d: int) -> LevelPartition:
    """Split a connected bipartite graph into d+1 independent d-dominating sets.

    With diameter above ``d`` the parts are the BFS levels from the first
    endpoint of :func:`diametrical_path`, grouped by residue mod ``d + 1``.
    Otherwise every vertex dominates everything, and the two color classes
    are cut into ``d + 1`` slices.
    """
    if d < 1:
        raise ParameterOutOfRange(f"d must be >= 1, got {d}")
    if not is_connected(g):
        raise GraphDisconnected("level_partition needs a connected graph")
    sides = bipartition(g)
    if sides is None:
        raise NotBipartite("level_partition needs a bipartite graph")
    if g.order < d + 1:
        raise OrderTooSmall(f"order {g.order} < d + 1 = {d + 1}")
    path = diametrical_path(g)
    if len(path) - 1 >= d + 1:
        levels = bfs_distances(g, path[0])
        parts = [
            tuple(v for v in range(g.order) if levels[v] % (d + 1) == i) for i in range(d + 1)
        ]
    else:
        xs, ys = sides
        kx = min(len(xs), d)
        parts = _slices(xs, kx) + _slices(ys, d + 1 - kx)
    result = LevelPartition(tuple(parts))
    assert verify_partition(g, result, d)
    return result


def verify_partition(g: Graph, parts, d: int) -> bool:
    parts = [tuple(p) for p in parts]
    if len(parts) != d + 1 or any(not p for p in parts):
        return False
    union = [v for p in parts for v in p]
    if sorted(union) != list(range(g.order)):
        return False
    return all(is_p_packing(g, p, 1) and is_d_dominating(g, p, d) for p in parts)


# --- closed-form bounds ----------------------------------------------------


@dataclass(frozen=True)
class BoundSheet:
    n: int
    leaves: int
    d: int
    is_tree: bool
    order_over: Fraction  # n/(d+1)
    nonleaves_over: Fraction  # (n-l)/d
    order_plus_leaves_over: Fraction  # (n+l)/(d+2)
    lower: Fraction  # (n-dl+2d)/(2d+1)
    applies: dict = field(default_factory=dict)
    regime: str | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "leaves": self.leaves,
            "d": self.d,
            "is_tree": self.is_tree,
            "n/(d+1)": str(self.order_over),
            "(n-l)/d": str(self.nonleaves_over),
            "(n+l)/(d+2)": str(self.order_plus_leaves_over),
            "(n-dl+2d)/(2d+1)": str(self.lower),
            "applies": dict(self.applies),
            "regime": self.regime,
        }


def bound_sheet(g: Graph, d: int) -> BoundSheet:
    n = g.order
    ell = len(leaves(g))
    tree = is_tree(g)
    applies = {
        "n>=d+1": n >= d + 1,
        "n-l>=d": tree and n - ell >= d,
        "n>=d": tree and n >= d,
        "tree": tree,
    }
    regime = None
    if tree and n >= d + ell:
        if n < (d + 1) * ell:
            regime = "n<(d+1)l"
        elif n == (d + 1) * ell:
            regime = "n=(d+1)l"
        else:
            regime = "n>(d+1)l"
    return BoundSheet(
        n=n,
        leaves=ell,
        d=d,
        is_tree=tree,
        order_over=Fraction(n, d + 1),
        nonleaves_over=Fraction(n - ell, d),
        order_plus_leaves_over=Fraction(n + ell, d + 2),
        lower=Fraction(n - d * ell + 2 * d, 2 * d + 1),
        applies=applies,
        regime=regime,
    )


def piecewise_bound(n: int, ell: int, d: int) -> tuple[str, Fraction]:
    """Branch label and value of the leaf-count bound for trees with n >= d + l."""
    if n < (d + 1) * ell:
        return "n<(d+1)l", Fraction(n - ell, d)
    if n == (d + 1) * ell:
        return "n=(d+1)l", Fraction(n, d + 1)
    return "n>(d+1)l", Fraction(n + ell, d + 2)
