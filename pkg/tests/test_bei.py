import itertools

import pytest
from hypothesis import given

from fpure_lab.bei import (
    HypothesisError,
    PathPacking,
    bei,
    check_colon_hypotheses,
    colon_formula_sides,
    cut_sets,
    height_of,
    ideal_height,
    is_cut_set,
    is_cut_set_bruteforce,
    is_unmixed,
    koenig_fpure_expected,
    koenig_type,
    minimal_primes,
    minimal_vertex_isolator,
    minimal_vertex_separator,
    non_fpurity_certificate,
    omega,
    prime_component,
    radical_decomposition,
    verify_colon_formula,
)
from fpure_lab.enumerate import connected_graphs_upto
from fpure_lab.families import at_forbidden_list, complete, cycle, path, sporadic, xf2
from fpure_lab.graphs import GraphInputError, build_graph, empty_graph
from fpure_lab.poly import Ring, codimension, ideals_equal, parse_poly
from fpure_lab.recognition import is_weakly_closed
from strategies import graphs


def test_bei_examples():
    J = bei(complete(2), 2)
    assert J.generators == (parse_poly(J.ring, "x1*y2 + x2*y1"),)
    assert len(bei(cycle(5), 2).generators) == 5
    assert bei(empty_graph(3), 3).ideal.is_zero()


def test_omega():
    r = Ring.bei_ring(3, 2)
    assert omega(r, []) == parse_poly(r, "1")
    assert omega(r, [1, 3]) == parse_poly(r, "x1*y1*x3*y3")


def test_cut_set_examples():
    assert [cs.sorted() for cs in cut_sets(path(3))] == [(), (2,)]
    c5 = [cs.sorted() for cs in cut_sets(cycle(5))]
    assert c5 == [(), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]
    assert [cs.sorted() for cs in cut_sets(complete(5))] == [()]


@given(graphs(max_n=7))
def test_cut_sets_match_definition(g):
    fast = {cs.s for cs in cut_sets(g)}
    brute = {frozenset(S) for r in range(g.n + 1) for S in itertools.combinations(g.vertices, r)
             if is_cut_set_bruteforce(g, S)}
    assert fast == brute
    assert all(is_cut_set(g, S) for S in brute)


def test_height_examples():
    g = path(3)
    assert height_of(prime_component(g, []), 3) == 2
    assert height_of(prime_component(g, [2]), 3) == 2
    assert codimension(bei(g, 2).ideal) == 2
    with pytest.raises(GraphInputError):
        prime_component(g, [1])


def test_c5_is_not_unmixed():
    # {1,3} leaves {2} and {4,5}: height 2 + 5 - 2 = 5, against 4 for the empty set
    g = cycle(5)
    heights = {pc.cut.sorted(): pc.height for pc in minimal_primes(g)}
    assert heights[()] == 4 and heights[(1, 3)] == 5
    ring = bei(g, 2).ring
    assert codimension(prime_component(g, [1, 3]).ideal(ring)) == 5
    assert not is_unmixed(g)


@pytest.mark.parametrize("g", connected_graphs_upto(5), ids=lambda g: f"n{g.n}m{g.m}e{hash(g.edges) % 9973}")
def test_height_formula_matches_codimension(g):
    ring = bei(g, 2).ring
    for pc in minimal_primes(g):
        assert codimension(pc.ideal(ring)) == height_of(pc, g.n)
    if g.m:
        assert codimension(bei(g, 2).ideal) == ideal_height(g)


@pytest.mark.parametrize("g", connected_graphs_upto(4), ids=lambda g: f"n{g.n}m{g.m}e{hash(g.edges) % 9973}")
@pytest.mark.parametrize("p", [2, 3])
def test_radical_decomposition(g, p):
    J = bei(g, p)
    R = radical_decomposition(g, J.ring)
    assert J.ideal.gb().strings() == R.gb().strings()


def test_separator_isolator_examples():
    assert minimal_vertex_separator(path(3), [2]) and minimal_vertex_isolator(path(3), [2])
    assert minimal_vertex_isolator(cycle(6), [2, 6])
    c4 = cycle(4)  # K4 minus a perfect matching
    with pytest.raises(GraphInputError):
        minimal_vertex_separator(c4, [1])
    assert not is_cut_set(c4, [1])


def test_certificate_examples():
    net = xf2(1)
    t = non_fpurity_certificate(net)
    assert t is not None and all(net.degree(v) == 1 for v in t)
    assert non_fpurity_certificate(complete(5)) is None


def test_certificate_on_at_list():
    members = at_forbidden_list(max_vertices=8, smallest_only=True)
    assert len(members) == 19
    for m in members:
        assert non_fpurity_certificate(m.graph) is not None, m.name


def test_koenig_examples():
    kp = koenig_type(path(3))
    assert kp is not None and kp.edge_count == 2 and kp.is_valid(path(3))
    t2 = sporadic("T2")
    kt = koenig_type(t2)
    assert kt is not None and kt.is_valid(t2) and kt.edge_count == ideal_height(t2) == 5
    assert not is_unmixed(t2) and not is_weakly_closed(t2)
    kc = koenig_type(cycle(5))
    assert kc is not None and kc.edge_count == 4 == ideal_height(cycle(5))
    assert not PathPacking(((1, 2), (2, 3))).is_valid(path(3))


def _best_packing(g):
    """Max edge count over vertex-disjoint path systems, from edge subsets."""
    best = 0
    edges = g.sorted_edges()
    for r in range(len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            deg = {}
            for a, b in sub:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            if any(d > 2 for d in deg.values()):
                continue
            h = build_graph(g.n, sub)
            if all(len(c) - 1 == sum(1 for e in sub if e[0] in c) for c in map(set, _comps(h))):
                best = max(best, r)
    return best


def _comps(h):
    from fpure_lab.graphs import connected_components

    return connected_components(h)


@given(graphs(max_n=6))
def test_koenig_matches_brute_packing(g):
    if g.m == 0 or g.m > 9:
        return
    assert (koenig_type(g) is not None) == (_best_packing(g) >= ideal_height(g))


@pytest.mark.parametrize("g", connected_graphs_upto(5), ids=lambda g: f"n{g.n}m{g.m}e{hash(g.edges) % 9973}")
def test_koenig_prediction_implies_weakly_closed(g):
    if koenig_fpure_expected(g):
        assert is_weakly_closed(g)


def test_colon_formula_examples():
    g = build_graph(4, [(1, 3), (4, 2), (4, 1)])
    assert verify_colon_formula(g, [4], {1, 3}, 1, 2, 3)
    g = build_graph(3, [(1, 3)])
    lhs, rhs = colon_formula_sides(g, [], {1, 3}, 1, 2, 3)
    assert ideals_equal(lhs, rhs)
    g = build_graph(5, [(1, 3), (3, 4), (5, 2), (5, 1)])
    assert verify_colon_formula(g, [5], {1, 3, 4}, 1, 2, 3, 4)


def test_colon_hypotheses_are_enforced():
    g = build_graph(4, [(1, 3), (4, 2), (4, 1)])
    with pytest.raises(HypothesisError):
        check_colon_hypotheses(g, [4], {1, 2}, 1, 2, 3)
    with pytest.raises(HypothesisError):
        check_colon_hypotheses(build_graph(4, [(1, 3), (4, 1)]), [4], {1, 3}, 1, 2, 3)
    with pytest.raises(HypothesisError):
        check_colon_hypotheses(build_graph(4, [(1, 3), (2, 3)]), [], {1, 3}, 1, 2, 3)
    # an edge {c,d} is only allowed in the three-vertex branch
    with pytest.raises(HypothesisError):
        check_colon_hypotheses(build_graph(5, [(1, 3), (3, 4), (5, 2), (5, 1)]), [5], {1, 3}, 1, 2, 3, 4)


def _hypothesis_instances(max_n):
    """All (g, A, size) with a, b, c, d = 1, 2, 3, 4 passing the hypothesis check."""
    out = []
    labeled = []
    for n in range(3, max_n + 1):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            labeled.append(build_graph(n, [e for k, e in enumerate(pairs) if mask >> k & 1]))
    for g in labeled:
        for size in (2, 3):
            if size == 3 and g.n < 4:
                continue
            first = 4 if size == 2 else 5
            rest = list(range(first, g.n + 1))
            for r in range(len(rest) + 1):
                for A in itertools.combinations(rest, r):
                    B, d = ({1, 3}, None) if size == 2 else ({1, 3, 4}, 4)
                    try:
                        check_colon_hypotheses(g, A, B, 1, 2, 3, d)
                    except HypothesisError:
                        continue
                    out.append((g, A, size))
    return out


def test_colon_formula_on_every_small_instance():
    cases = _hypothesis_instances(5)
    assert sum(1 for c in cases if c[2] == 2) >= 4 and sum(1 for c in cases if c[2] == 3) >= 4
    for g, A, size in cases:
        B, d = ({1, 3}, None) if size == 2 else ({1, 3, 4}, 4)
        assert verify_colon_formula(g, A, B, 1, 2, 3, d), (g, A)
