import networkx as nx
import pytest

from distdom import constructions as cons
from distdom.canon import canonical_tree, graph_canonical_form, is_isomorphic, tree_canonical_form
from distdom.enumeration import bipartite_upto, trees_upto
from distdom.errors import ParameterOutOfRange
from distdom.graph import Graph, diameter, is_bipartite, is_tree, leaves
from distdom.recognizers import (
    in_B_d,
    in_F_d,
    in_Fprime_d,
    in_T_d,
    in_zeta1,
    verify_corona_decomposition,
)

from oracles import to_nx


def _codes(stream):
    return [code for code, _ in stream]


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_corona_of_k1_and_k2_are_paths(d):
    g, cert = cons.corona(Graph(1), d)
    assert is_isomorphic(g, cons.path(d + 1))
    assert verify_corona_decomposition(g, cert, d)
    g2, cert2 = cons.corona(cons.path(2), d)
    assert nx.is_isomorphic(to_nx(g2), nx.path_graph(2 * (d + 1)))
    assert verify_corona_decomposition(g2, cert2, d)


def test_corona_layout():
    g, cert = cons.corona(cons.path(3), 2)
    assert g.order == 9 and is_tree(g)
    assert cert.anchors == (0, 1, 2)
    assert cert.path_of[0] == (4, 3)
    assert g.has_edge(0, 3) and g.has_edge(3, 4)
    assert len(leaves(g)) == 3
    assert cert.to_dict()["paths"]["2"] == [8, 7]


def test_d_subdivision_examples():
    assert is_isomorphic(cons.d_subdivision(cons.path(2), 1), cons.path(3))
    spider = cons.d_subdivision(cons.star(3), 1)
    assert spider.order == 7 and spider.degree(0) == 3 and len(leaves(spider)) == 3
    assert is_isomorphic(cons.d_subdivision(cons.path(3), 2), cons.path(7))
    assert cons.d_subdivision(cons.cycle(4), 0) == cons.cycle(4)


def test_double_star_examples():
    assert is_isomorphic(cons.double_star(1, 1), cons.path(4))
    d22 = cons.double_star(2, 2)
    assert d22.order == 6 and len(leaves(d22)) == 4
    assert cons.double_star(1, 2).degrees() == [2, 3, 1, 1, 1]


def test_gnkd():
    g = cons.counterexample_gnkd(4, 2, 2)
    assert g.order == 4 * (2 * 2 + 1) == 20
    assert not is_bipartite(g)
    assert cons.counterexample_gnkd(5, 2, 1).order == 15
    for bad in [(3, 2, 2), (4, 1, 2), (4, 2, 0)]:
        with pytest.raises(ParameterOutOfRange):
            cons.counterexample_gnkd(*bad)


def test_joined_subdivided_stars():
    a = cons.joined_subdivided_stars(2, 2, 2)
    assert (a.order, diameter(a)) == (10, 5)
    b = cons.joined_subdivided_stars(3, 2, 2)
    assert (b.order, len(leaves(b))) == (12, 5)
    c = cons.joined_subdivided_stars(2, 2, 3)
    assert (c.order, diameter(c)) == (14, 7)
    with pytest.raises(ParameterOutOfRange):
        cons.joined_subdivided_stars(1, 2, 2)


def test_primitives():
    c6 = cons.cycle(6)
    assert c6.order == 6 and set(c6.degrees()) == {2}
    assert cons.complete_bipartite(3, 3).size == 9
    s = cons.star(4)
    assert len(leaves(s)) == 4 and s.degree(0) == 4
    with pytest.raises(ParameterOutOfRange):
        cons.cycle(2)


def test_leafy_corona():
    g = cons.leafy_corona(cons.path(2), 2)
    assert g.order == 12 and len(leaves(g)) == 8


def test_zeta1_stream_examples():
    assert _codes(cons.zeta1_members(2)) == [tree_canonical_form(cons.path(2))]
    members = set(_codes(cons.zeta1_members(8)))
    for r in (1, 2, 3):
        assert tree_canonical_form(cons.double_star(r, r)) in members
    assert tree_canonical_form(cons.double_star(1, 2)) not in set(_codes(cons.zeta1_members(6)))
    assert all(g.order % 2 == 0 for _, g in cons.zeta1_members(12))


def test_zeta1_stream_equals_recognizer():
    closure = _codes(cons.zeta1_members(12))
    scanned = [code for code, t in trees_upto(12) if in_zeta1(t)]
    assert closure == sorted(scanned)


def test_family_T_examples():
    t2 = list(cons.family_T_d(12, 2))
    assert len(t2) == 4
    assert sorted(g.order for _, g in t2) == [6, 9, 12, 12]


@pytest.mark.parametrize("d", [1, 2, 3])
def test_family_T_equals_recognizer(d):
    scanned = sorted(code for code, t in trees_upto(12) if in_T_d(t, d))
    assert _codes(cons.family_T_d(12, d)) == scanned


def test_family_B_examples():
    p3 = graph_canonical_form(cons.path(3))
    assert p3 in _codes(cons.family_B_d(9, 2))
    b1 = _codes(cons.family_B_d(4, 1))
    assert b1 == sorted([graph_canonical_form(cons.path(2)), graph_canonical_form(cons.path(4))])
    c6p2, _ = cons.corona(cons.cycle(6), 2)
    assert in_B_d(c6p2, 2)


@pytest.mark.parametrize("d", [1, 2])
def test_family_B_equals_recognizer(d):
    scanned = sorted(code for code, g in bipartite_upto(9) if in_B_d(g, d))
    assert _codes(cons.family_B_d(9, d)) == scanned


def test_family_B_disconnected_bases():
    connected = set(_codes(cons.family_B_d(8, 1)))
    everything = set(_codes(cons.family_B_d(8, 1, connected=False)))
    assert connected < everything
    two_k2 = Graph(8, [(0, 1), (2, 3), (4, 5), (6, 7)])
    assert graph_canonical_form(two_k2) in everything


@pytest.mark.parametrize("d", [2, 3])
def test_family_F_streams_equal_recognizers(d):
    trees = list(trees_upto(12))
    assert _codes(cons.family_F_d(12, d)) == sorted(c for c, t in trees if in_F_d(t, d))
    assert _codes(cons.family_Fprime_d(12, d)) == sorted(c for c, t in trees if in_Fprime_d(t, d))


def test_family_Fprime_examples():
    assert _codes(cons.family_Fprime_d(12, 3)) == _codes(cons.family_F_d(12, 3))
    assert in_Fprime_d(cons.double_star(2, 2), 2)
    # core P_4 = P_2 o P_1 with a pendant on each of its two leaves
    t = Graph(6, [(0, 1), (1, 2), (2, 3), (0, 4), (3, 5)])
    assert in_Fprime_d(t, 2)
    assert canonical_tree(t)[0] in _codes(cons.family_Fprime_d(8, 2))


def test_build_specs():
    assert cons.build("path:5") == cons.path(5)
    assert cons.build("complete-bipartite:3,3") == cons.complete_bipartite(3, 3)
    assert cons.build("gnkd:4,2,2").order == 20
    with pytest.raises(ParameterOutOfRange):
        cons.build("nope:1")
    with pytest.raises(ParameterOutOfRange):
        cons.build("path:x")
    with pytest.raises(ParameterOutOfRange):
        cons.build("path:1,2,3")
