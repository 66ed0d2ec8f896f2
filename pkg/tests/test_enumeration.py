import pytest

from distdom import constructions as cons
from distdom.canon import graph_canonical_form, tree_canonical_form
from distdom.enumeration import (
    EnumerationSpace,
    all_bipartite,
    all_connected_bipartite,
    all_trees,
    shard,
    shard_of,
    stream,
)
from distdom.errors import OrderTooLarge, ParameterOutOfRange
from distdom.graph import Graph, diameter, is_bipartite, is_connected, is_tree, leaves

from oracles import bipartite_classes_bruteforce, prufer_tree_classes

TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159]
CONNECTED_BIPARTITE_COUNTS = [1, 1, 1, 3, 5, 17, 44, 182, 730]
BIPARTITE_COUNTS = [1, 2, 3, 7, 13, 35]


def _from_nx(h) -> Graph:
    return Graph(h.number_of_nodes(), list(h.edges()))


@pytest.mark.parametrize("n", range(1, 15))
def test_tree_counts(n):
    trees = list(all_trees(n))
    assert len(trees) == TREE_COUNTS[n - 1]
    codes = [c for c, _ in trees]
    assert codes == sorted(set(codes))
    for code, t in trees[:50]:
        assert is_tree(t) and t.order == n
        assert tree_canonical_form(t) == code


@pytest.mark.parametrize("n", range(1, 9))
def test_trees_match_prufer_oracle(n):
    oracle = {tree_canonical_form(_from_nx(h)) for h in prufer_tree_classes(n)}
    assert len(oracle) == TREE_COUNTS[n - 1]
    assert oracle == {c for c, _ in all_trees(n)}


def test_tree_examples():
    assert {c for c, _ in all_trees(4)} == {tree_canonical_form(cons.path(4)), tree_canonical_form(cons.star(3))}
    assert [c for c, _ in all_trees(2)] == [tree_canonical_form(cons.path(2))]
    with pytest.raises(OrderTooLarge):
        all_trees(19)
    with pytest.raises(ParameterOutOfRange):
        all_trees(0)


@pytest.mark.parametrize("n", range(1, 10))
def test_connected_bipartite_counts(n):
    graphs = list(all_connected_bipartite(n))
    assert len(graphs) == CONNECTED_BIPARTITE_COUNTS[n - 1]
    for code, g in graphs:
        assert is_connected(g) and is_bipartite(g) and g.order == n


@pytest.mark.parametrize("n", range(1, 7))
def test_bipartite_match_edge_subset_oracle(n):
    oracle = {graph_canonical_form(_from_nx(h)) for h in bipartite_classes_bruteforce(n)}
    assert len(oracle) == CONNECTED_BIPARTITE_COUNTS[n - 1]
    assert oracle == {c for c, _ in all_connected_bipartite(n)}


def test_bipartite_examples():
    assert [c for c, _ in all_connected_bipartite(1)] == [graph_canonical_form(Graph(1))]
    assert [c for c, _ in all_connected_bipartite(3)] == [graph_canonical_form(cons.path(3))]
    four = {graph_canonical_form(g) for g in (cons.path(4), cons.star(3), cons.cycle(4))}
    assert {c for c, _ in all_connected_bipartite(4)} == four
    with pytest.raises(OrderTooLarge):
        all_connected_bipartite(10)


@pytest.mark.parametrize("n", range(1, 7))
def test_all_bipartite_counts(n):
    assert len(list(all_bipartite(n))) == BIPARTITE_COUNTS[n - 1]


def test_space_filters():
    space = EnumerationSpace("trees", 8, leaves=2)
    assert [g.order for _, g in stream(space)] == [8]
    diam = EnumerationSpace("trees", 7, diameter=(2, 3))
    got = list(stream(diam))
    assert all(2 <= diameter(g) <= 3 for _, g in got)
    assert len(got) == sum(1 for _, g in all_trees(7) if 2 <= diameter(g) <= 3)
    assert all(len(leaves(g)) == 3 for _, g in stream(EnumerationSpace("bipartite", 6, leaves=3)))
    with pytest.raises(ParameterOutOfRange):
        EnumerationSpace("cubic", 4)


@pytest.mark.parametrize("k", [1, 2, 3, 8])
def test_shards_partition_stream(k):
    space = EnumerationSpace("trees", 9)
    parts = [list(p) for p in shard(space, k)]
    merged = sorted(c for p in parts for c, _ in p)
    assert merged == [c for c, _ in stream(space)]
    for i, p in enumerate(parts):
        assert all(shard_of(c, k) == i for c, _ in p)
    if k == 1:
        assert len(parts[0]) == 47


def test_shard_count_validation():
    with pytest.raises(ParameterOutOfRange):
        shard(EnumerationSpace("trees", 5), 0)
    assert len(list(shard(EnumerationSpace("trees", 7), 1)[0])) == 11
