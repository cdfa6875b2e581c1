import itertools

import networkx as nx
import pytest
from hypothesis import given

from fpure_lab.enumerate import connected_graphs_upto
from fpure_lab.families import (
    SPORADIC_NAMES,
    at_forbidden_list,
    at_triple,
    complete,
    complete_bipartite,
    cycle,
    path,
    sporadic,
    star,
    xf1,
    xf2,
)
from fpure_lab.graphs import build_graph, complement, induced
from fpure_lab.recognition import (
    brute_force_transitive_orientation,
    brute_force_weakly_closed,
    check_labeling,
    chordality,
    contains_induced,
    find_asteroidal_triple,
    find_weakly_closed_labeling,
    gallai_forbidden_witness,
    is_asteroidal_triple,
    is_chordal,
    is_induced_embedding,
    is_peo,
    is_transitive,
    is_weakly_closed,
    transitive_orientation,
)
from strategies import graphs

from test_graphs import to_nx


def brute_at(g):
    """Asteroidal triple straight from the definition, via networkx connectivity."""
    h = to_nx(g)
    for t in itertools.combinations(g.vertices, 3):
        if any(g.has_edge(a, b) for a, b in itertools.combinations(t, 2)):
            continue
        ok = True
        for k in range(3):
            z = t[k]
            a, b = [t[i] for i in range(3) if i != k]
            rest = h.subgraph(set(g.vertices) - g.closed_neighbors(z))
            if not nx.has_path(rest, a, b):
                ok = False
                break
        if ok:
            return t
    return None


def test_chordal_examples():
    assert is_chordal(complete(5))
    ch = chordality(cycle(4))
    assert not ch.chordal and sorted(ch.cycle) == [1, 2, 3, 4]
    assert is_chordal(sporadic("T2"))


@given(graphs(max_n=8))
def test_chordality_matches_networkx(g):
    ch = chordality(g)
    assert ch.chordal == nx.is_chordal(to_nx(g))
    if ch.chordal:
        assert is_peo(g, ch.ordering)
    else:
        cyc = ch.cycle
        assert len(cyc) >= 4
        h, _ = induced(g, cyc)
        assert h.m == len(cyc) and all(h.degree(v) == 2 for v in h.vertices)


def test_asteroidal_examples():
    t = find_asteroidal_triple(cycle(6))
    assert t is not None and is_asteroidal_triple(cycle(6), (1, 3, 5))
    net = xf2(1)
    t = find_asteroidal_triple(net)
    assert t is not None and all(net.degree(v) == 1 for v in t)
    assert find_asteroidal_triple(complete(4)) is None
    assert find_asteroidal_triple(cycle(5)) is None


@given(graphs(max_n=8))
def test_asteroidal_triple_matches_definition(g):
    t = find_asteroidal_triple(g)
    assert (t is None) == (brute_at(g) is None)
    if t is not None:
        assert is_asteroidal_triple(g, t)


@pytest.mark.parametrize("name", SPORADIC_NAMES)
def test_figure_transcriptions_have_marked_triple(name):
    g = sporadic(name)
    assert is_asteroidal_triple(g, at_triple(name))


def test_contains_induced():
    phi = contains_induced(cycle(6), path(4))
    assert phi is not None and is_induced_embedding(cycle(6), path(4), phi)
    assert contains_induced(complete(4), cycle(4)) is None


@given(graphs(min_n=3, max_n=6), graphs(min_n=1, max_n=4))
def test_contains_induced_matches_networkx(g, h):
    gm = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(h))
    expected = any(True for _ in gm.subgraph_isomorphisms_iter()) if h.n <= g.n else False
    phi = contains_induced(g, h)
    assert (phi is not None) == expected
    if phi is not None:
        assert is_induced_embedding(g, h, phi)


def test_xf1_not_induced_in_next_member():
    # brute force over every injection decides the expected answer
    g, h = xf1(1), xf1(0)
    brute = any(
        all(g.has_edge(phi[a - 1], phi[b - 1]) == h.has_edge(a, b)
            for a, b in itertools.combinations(h.vertices, 2))
        for phi in itertools.permutations(g.vertices, h.n)
    )
    assert (contains_induced(g, h) is not None) == brute


def test_transitive_orientation_examples():
    o = transitive_orientation(path(3))
    assert o is not None and is_transitive(path(3), o)
    assert transitive_orientation(cycle(5)) is None
    assert brute_force_transitive_orientation(cycle(5)) is None
    g = complete_bipartite(2, 3)
    assert transitive_orientation(g) is not None


@given(graphs(max_n=6))
def test_orientation_matches_brute_force(g):
    o = transitive_orientation(g)
    assert (o is None) == (brute_force_transitive_orientation(g) is None)
    if o is not None:
        assert is_transitive(g, o)


def test_weakly_closed_examples():
    assert not is_weakly_closed(cycle(5))
    assert is_weakly_closed(star(3))
    assert brute_force_weakly_closed(star(3)) is not None
    assert check_labeling(complete(6), list(range(1, 7)))


@given(graphs(max_n=7))
def test_weakly_closed_three_way_agreement(g):
    lab = find_weakly_closed_labeling(g)
    orient = transitive_orientation(complement(g))
    wit = gallai_forbidden_witness(g)
    assert (lab is not None) == (orient is not None) == (wit is None)
    if lab is not None:
        assert check_labeling(g, lab)
        assert check_labeling(g, [g.n + 1 - x for x in lab])
    if g.n <= 6:
        assert (lab is not None) == (brute_force_weakly_closed(g) is not None)


@given(graphs(max_n=7))
def test_weakly_closed_implies_at_free(g):
    if is_weakly_closed(g):
        assert find_asteroidal_triple(g) is None


@given(graphs(max_n=8))
def test_at_free_iff_no_forbidden_member(g):
    members = at_forbidden_list(max_vertices=g.n)
    hit = any(contains_induced(g, m.graph) is not None for m in members)
    assert hit == (find_asteroidal_triple(g) is not None)


def test_gallai_examples():
    name, phi = gallai_forbidden_witness(cycle(5))
    assert name == "co-C5"
    assert gallai_forbidden_witness(complete(6)) is None
    assert gallai_forbidden_witness(cycle(7)) is not None


def test_chordal_classification_up_to_seven():
    for g in connected_graphs_upto(7):
        if is_chordal(g):
            assert is_weakly_closed(g) == (find_asteroidal_triple(g) is None)
