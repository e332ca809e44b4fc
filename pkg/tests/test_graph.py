from __future__ import annotations

import warnings

import networkx as nx
import pytest
from hypothesis import given, settings

from pnmax.graph import (FamilySpec, Graph, GraphError, build_graph, cartesian_product,
                         complete, corona_path, cycle, double_star, emit_edge_list,
                         emit_graph6, espn_tree, generate, grid, members, parse_edge_list,
                         parse_graph6, path, star, vertex_set)

from oracles import graphs, to_nx


def test_build_graph_single_edge():
    g = build_graph(2, [(0, 1)])
    assert g.order == 2 and g.size == 1
    assert g.has_edge(0, 1) and g.has_edge(1, 0)


def test_build_graph_path_degrees():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.degrees() == [1, 2, 2, 1]


def test_build_graph_collapses_duplicates():
    g = build_graph(3, [(0, 1), (0, 1), (1, 0)])
    assert g.size == 1
    assert g.edges() == [(0, 1)]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_build_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_vertex_set_round_trip():
    assert vertex_set([0, 3, 5]) == 0b101001
    assert members(0b101001) == [0, 3, 5]
    assert members(0) == []


def test_grid_8_3():
    g = generate("grid:8,3")
    assert (g.order, g.size) == (24, 37)


def test_corona_path_4():
    g = generate("corona_path:4")
    assert g.order == 8 and g.is_tree()
    # every spine vertex carries exactly one leaf
    assert sorted(g.degrees()).count(1) == 4


def test_espn_tree_4():
    g = generate("espn_tree:4")
    assert g.order == 20 and g.is_tree()


@pytest.mark.parametrize("spec,order,size", [
    ("path:7", 7, 6),
    ("cycle:9", 9, 9),
    ("star:5", 6, 5),
    ("double_star:3,4", 9, 8),
    ("complete:6", 6, 15),
    ("complete_bipartite:4,7", 11, 28),
    ("grid:5,4", 20, 4 * 4 + 5 * 3),
    ("corona_path:6", 12, 11),
    ("espn_tree:3", 15, 14),
])
def test_family_order_and_size(spec, order, size):
    g = generate(spec)
    assert (g.order, g.size) == (order, size)
    assert g.label == spec


@pytest.mark.parametrize("spec", ["path:0", "cycle:2", "star:0", "double_star:0,1",
                                  "grid:0,3", "espn_tree:1", "complete_bipartite:1,0"])
def test_family_parameters_out_of_range(spec):
    with pytest.raises(GraphError):
        generate(spec)


@pytest.mark.parametrize("spec", ["grid", "nosuch:3", "grid:3", "path:x", "cartesian:(path:2)",
                                  "cartesian:(path:2*(path:3)"])
def test_family_spec_malformed(spec):
    with pytest.raises(GraphError):
        FamilySpec.parse(spec)


def test_family_spec_string_round_trip():
    for text in ["grid:8,3", "double_star:3,4", "cartesian:(path:3)*(cycle:4)",
                 "cartesian:(cartesian:(path:2)*(path:2))*(path:2)"]:
        assert str(FamilySpec.parse(text)) == text


def test_cartesian_p2_p2_is_c4():
    g = cartesian_product(path(2), path(2))
    assert nx.is_isomorphic(to_nx(g), to_nx(cycle(4)))


def test_cartesian_p8_p3_is_grid_up_to_numbering():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        g = cartesian_product(path(8), path(3))
    assert (g.order, g.size) == (24, 37)
    # (a, x) is numbered a*3 + x in both, so the identity relabeling already matches
    assert g == grid(8, 3)
    # and a nontrivial relabeling is still isomorphic
    perm = list(reversed(range(24)))
    assert nx.is_isomorphic(to_nx(g.relabel(perm)), to_nx(grid(8, 3)))


def test_cartesian_with_k1_is_identity():
    h = double_star(2, 3)
    assert cartesian_product(complete(1), h) == h
    assert cartesian_product(h, complete(1)) == h


def test_cartesian_warns_above_enumeration_width():
    with pytest.warns(UserWarning):
        cartesian_product(path(9), path(3))


def test_cartesian_rejects_huge_product():
    with pytest.raises(GraphError):
        cartesian_product(path(12), path(11))


def test_cartesian_spec_matches_networkx():
    g = generate("cartesian:(path:3)*(cycle:4)")
    ref = nx.cartesian_product(nx.path_graph(3), nx.cycle_graph(4))
    assert nx.is_isomorphic(to_nx(g), ref)


def test_parse_edge_list_examples():
    assert parse_edge_list("n 2\n0 1") == build_graph(2, [(0, 1)])
    assert parse_edge_list("n 3\n# comment\n0 1\n1 2") == path(3)


@pytest.mark.parametrize("text", ["n 2\n0 2", "0 1\n", "n 3\n0 x", "n 3\n0 1 2", "", "n\n0 1"])
def test_parse_edge_list_errors(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


def test_graph6_k2():
    assert parse_graph6("A_") == complete(2)
    assert emit_graph6(complete(2)) == "A_"


def test_graph6_byte_exact_round_trip():
    g = parse_graph6("D?{")
    assert g.order == 5
    assert emit_graph6(g) == "D?{"


@pytest.mark.parametrize("text", ["A", "", "A_x\x01", "D?", "~"])
def test_graph6_errors(text):
    with pytest.raises(GraphError):
        parse_graph6(text)


def test_graph6_matches_networkx_encoding():
    for g in [path(5), cycle(7), grid(4, 3), star(6), espn_tree(2)]:
        ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert emit_graph6(g) == ref


def test_graph6_long_order():
    g = path(70)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(emit_edge_list(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_structure_queries_agree_with_networkx(g):
    h = to_nx(g)
    assert g.size == h.number_of_edges()
    if g.order:
        assert g.is_connected() == nx.is_connected(h)
        assert g.is_tree() == nx.is_tree(h)
    assert g.has_isolated_vertex() == any(d == 0 for _, d in h.degree())


def test_corona_and_star_shapes():
    assert corona_path(1) == build_graph(2, [(0, 1)])
    assert star(3).degrees() == [3, 1, 1, 1]
