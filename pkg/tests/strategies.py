"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from fpure_lab.graphs import build_graph


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n=2, max_n=5):
    from fpure_lab.enumerate import connected_graphs_upto

    pool = [g for g in connected_graphs_upto(max_n) if g.n >= min_n]
    return draw(st.sampled_from(pool))
