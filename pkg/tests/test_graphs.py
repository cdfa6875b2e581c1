import networkx as nx
import pytest
from hypothesis import given

from fpure_lab.enumerate import are_isomorphic, canonical_form, connected_graphs_upto, enumerate_connected_graphs
from fpure_lab.families import (
    FamilyError,
    antihole,
    complete,
    complete_bipartite,
    cycle,
    parse_family,
    path,
    sporadic,
    star,
    xf1,
    xf2,
    xf5,
    xf6,
)
from fpure_lab.graphs import (
    GraphInputError,
    build_graph,
    complement,
    complete_vertex,
    components_without,
    connected_components,
    delete_vertex,
    empty_graph,
    format_edge_list,
    induced,
    parse_edge_list,
    relabel,
)

from strategies import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def test_build_graph_examples():
    p3 = build_graph(3, [(1, 2), (2, 3)])
    assert p3 == path(3)
    assert build_graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]) == cycle(5)
    with pytest.raises(GraphInputError):
        build_graph(2, [(1, 1)])
    with pytest.raises(GraphInputError):
        build_graph(2, [(1, 3)])


def test_family_sizes():
    assert (xf1(0).n, xf1(0).m) == (7, 9)
    assert (xf6(0).n, xf6(0).m) == (7, 13)
    assert (xf2(1).n, xf2(1).m) == (6, 6)
    t2 = sporadic("T2")
    assert (t2.n, t2.m) == (7, 6)
    assert sorted(t2.degree(v) for v in t2.vertices) == [1, 1, 1, 2, 2, 2, 3]
    assert nx.is_tree(to_nx(t2))
    assert are_isomorphic(complement(cycle(5)), cycle(5))
    assert complete_bipartite(1, 3) == star(3)


def test_coregular_families_sizes():
    # complements of the regular XF members have C(n,2) - m edges
    for g in (xf1(0), xf1(1), xf5(0), xf6(0), xf6(1)):
        assert complement(g).m == g.n * (g.n - 1) // 2 - g.m
    assert antihole(7).m == 21 - 7


def test_complement_examples():
    assert complement(complete(4)) == empty_graph(4)
    assert complement(complement(cycle(6))) == cycle(6)


@given(graphs(max_n=8))
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_induced_examples():
    h, mp = induced(cycle(5), {1, 2, 3})
    assert h == path(3) and mp == {1: 1, 2: 2, 3: 3}
    g = cycle(6)
    assert induced(g, g.vertices)[0] == g
    assert induced(complete(5), {2, 4, 5})[0] == complete(3)


@given(graphs(max_n=7))
def test_induced_matches_networkx(g):
    s = [v for v in g.vertices if v % 2]
    h, mp = induced(g, s)
    ours = {(min(mp[a], mp[b]), max(mp[a], mp[b])) for a, b in to_nx(g).subgraph(s).edges}
    assert h.edges == frozenset(ours)


def test_delete_and_complete():
    h, mp = delete_vertex(cycle(5), 1)
    assert h == path(4) and mp == {2: 1, 3: 2, 4: 3, 5: 4}
    assert complete_vertex(star(3), 1) == complete(4)
    assert complete_vertex(path(3), 2) == complete(3)


def test_components():
    assert connected_components(path(3)) == [[1, 2, 3]]
    assert sorted(components_without(cycle(5), {2, 5})) == [[1], [3, 4]]
    assert connected_components(empty_graph(3)) == [[1], [2], [3]]


@given(graphs(max_n=7))
def test_components_match_networkx(g):
    ours = sorted(sorted(c) for c in connected_components(g))
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs


@given(graphs(max_n=7))
def test_edge_list_roundtrip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_errors():
    with pytest.raises(GraphInputError):
        parse_edge_list("3 2\n1 2\n")
    with pytest.raises(GraphInputError):
        parse_edge_list("not a graph")


def test_parse_family_specs():
    assert parse_family("coXF1:n=0") == complement(xf1(0))
    assert parse_family("complement:cycle:7") == complement(cycle(7))
    assert parse_family("net") == xf2(1)
    assert parse_family("cycle:5") == cycle(5)
    for bad in ("bogus", "cycle", "cycle:x", ""):
        with pytest.raises(FamilyError):
            parse_family(bad)


def test_enumeration_counts():
    # connected graphs up to isomorphism: 1, 1, 2, 6, 21, 112
    counts = [sum(1 for _ in enumerate_connected_graphs(n)) for n in range(1, 7)]
    assert counts == [1, 1, 2, 6, 21, 112]


def test_enumeration_against_atlas():
    atlas = [h for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= 5 and nx.is_connected(h)]
    ours = connected_graphs_upto(5)
    assert len(atlas) == len(ours)
    for g in ours:
        assert sum(nx.is_isomorphic(to_nx(g), h) for h in atlas) == 1


@given(graphs(max_n=6))
def test_canonical_form_is_invariant(g):
    perm = list(reversed(g.vertices))
    assert canonical_form(relabel(g, perm)) == canonical_form(g)
    assert are_isomorphic(g, relabel(g, perm)) == nx.is_isomorphic(to_nx(g), to_nx(relabel(g, perm)))
