from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distdom import constructions as cons
from distdom.canon import (
    canonical_graph,
    graph_canonical_form,
    is_isomorphic,
    tree_canonical_form,
    tree_centers,
    tree_from_code,
)
from distdom.errors import NotATree, OrderTooLarge, ParseError
from distdom.graph import Graph, relabel

from oracles import permutation_code, prufer_decode

KNOWN_TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}


@st.composite
def graphs_with_perm(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(n)))
    return Graph(n, edges), list(perm)


@st.composite
def trees_with_perm(draw, max_n=14):
    n = draw(st.integers(3, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    perm = draw(st.permutations(range(n)))
    return Graph(n, prufer_decode(tuple(seq), n)), list(perm)


def test_tree_code_examples():
    a = cons.path(4)
    b = Graph(4, [(2, 0), (0, 3), (3, 1)])
    assert tree_canonical_form(a) == tree_canonical_form(b)
    assert tree_canonical_form(a) != tree_canonical_form(cons.star(3))
    with pytest.raises(NotATree):
        tree_canonical_form(cons.cycle(4))


def test_tree_centers():
    assert tree_centers(cons.path(5)) == [2]
    assert tree_centers(cons.path(4)) == [1, 2]
    assert tree_centers(Graph(1)) == [0]


@pytest.mark.parametrize("n", range(1, 9))
def test_tree_codes_partition_labeled_trees(n):
    if n <= 2:
        graphs = [cons.path(n)]
    else:
        graphs = [Graph(n, prufer_decode(seq, n)) for seq in product(range(n), repeat=n - 2)]
    codes = {tree_canonical_form(g) for g in graphs}
    assert len(codes) == KNOWN_TREE_COUNTS[n]


@settings(max_examples=200, deadline=None)
@given(trees_with_perm())
def test_tree_code_invariant_and_decodable(tp):
    t, perm = tp
    code = tree_canonical_form(t)
    assert tree_canonical_form(relabel(t, perm)) == code
    back = tree_from_code(code)
    assert back.order == t.order
    assert tree_canonical_form(back) == code


def test_tree_from_code_rejects_garbage():
    for bad in ("", "(", "(()", "())(", "x"):
        with pytest.raises(ParseError):
            tree_from_code(bad)


def _all_labeled(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def test_graph_code_examples():
    c4 = cons.cycle(4)
    assert graph_canonical_form(c4) == graph_canonical_form(relabel(c4, [2, 0, 3, 1]))
    assert graph_canonical_form(c4) != graph_canonical_form(cons.path(4))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_graph_code_class_counts(n, count):
    assert len({graph_canonical_form(g) for g in _all_labeled(n)}) == count


def test_graph_code_matches_permutation_oracle_on_order_5():
    ours, theirs = {}, {}
    for g in _all_labeled(5):
        ours.setdefault(graph_canonical_form(g), set()).add(g.masks)
        theirs.setdefault(permutation_code(g), set()).add(g.masks)
    assert sorted(map(sorted, ours.values())) == sorted(map(sorted, theirs.values()))


@settings(max_examples=150, deadline=None)
@given(graphs_with_perm())
def test_graph_code_relabel_invariant(gp):
    g, perm = gp
    code, canon = canonical_graph(g)
    assert graph_canonical_form(relabel(g, perm)) == code
    assert graph_canonical_form(canon) == code
    assert is_isomorphic(g, canon)


@settings(max_examples=60, deadline=None)
@given(graphs_with_perm(max_n=6), graphs_with_perm(max_n=6))
def test_graph_code_equality_iff_isomorphic(a, b):
    g, h = a[0], b[0]
    same = g.order == h.order and permutation_code(g) == permutation_code(h)
    assert (graph_canonical_form(g) == graph_canonical_form(h)) == same


def test_order_cap():
    with pytest.raises(OrderTooLarge):
        graph_canonical_form(cons.path(11))
    assert graph_canonical_form(cons.path(11), max_order=None)
