"""Canonical forms and enumeration of small connected graphs."""

from __future__ import annotations

import functools
import itertools
from typing import Iterator

from .graphs import Graph, GraphInputError, relabel

MAX_ENUM_N = 7


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition; cell order stays canonical."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {v: tuple(bin(adj[v] & m).count("1") for m in masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
                for k in keys:
                    new.append([v for v in c if sig[v] == k])
            else:
                new.append(c)
        cells = new
        if not changed:
            return cells


def _code(adj: list[int], order: list[int]) -> int:
    code = 0
    for i, v in enumerate(order):
        for w in order[i + 1:]:
            code = (code << 1) | ((adj[v] >> w) & 1)
    return code


def canonical_labeling(g: Graph) -> tuple[int, tuple[int, ...]]:
    """(certificate, order): the order lists old vertices by new label."""
    adj = [0] * (g.n + 1)
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    start = _refine(adj, [list(g.vertices)])
    best: list = [None, None]

    def rec(cells):
        cells = _refine(adj, cells)
        for i, c in enumerate(cells):
            if len(c) > 1:
                break
        else:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, tuple(order)
            return
        for v in c:
            rest = [w for w in c if w != v]
            rec(cells[:i] + [[v], rest] + cells[i + 1:])

    rec(start)
    return best[0], best[1]


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism invariant that separates non-isomorphic graphs."""
    return g.n, canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_labeling(g)
    perm = {old: new for new, old in enumerate(order, start=1)}
    return relabel(g, perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on n vertices once up to isomorphism (n <= 7)."""
    if n < 1:
        raise GraphInputError("n must be positive")
    if n > MAX_ENUM_N:
        raise GraphInputError(f"enumeration is limited to n <= {MAX_ENUM_N}")
    yield from _connected(n)


@functools.lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, frozenset()),)
    # every connected graph has a non-cut vertex, so extend connected (n-1)-graphs
    seen: dict[tuple, Graph] = {}
    for base in _connected(n - 1):
        for r in range(1, n):
            for nb in itertools.combinations(range(1, n), r):
                g = Graph(n, base.edges | {(v, n) for v in nb})
                key = canonical_form(g)
                if key not in seen:
                    seen[key] = canonical_graph(g)
    return tuple(sorted(seen.values(), key=lambda g: (g.m, g.sorted_edges())))


def connected_graphs_upto(n: int) -> list[Graph]:
    out = []
    for k in range(1, n + 1):
        out.extend(enumerate_connected_graphs(k))
    return out
