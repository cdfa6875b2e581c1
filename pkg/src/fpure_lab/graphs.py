"""Finite simple graphs on the vertex set 1..n.

Graphs are immutable values.  Operations that drop vertices (``induced``,
``delete_vertex``) relabel the survivors onto 1..k and return the map from
old to new labels, since the algebra layer wants contiguous labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphInputError(ValueError):
    """Raised on malformed graph input (loops, bad labels, parse errors)."""


Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n``."""

    n: int
    edges: frozenset[Edge]
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise GraphInputError(f"bad edge {(u, v)} for n={self.n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in nbrs))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, deduplicating edges; loops and bad labels are errors."""
    if n < 1:
        raise GraphInputError("a graph needs at least one vertex")
    out = set()
    for e in edges:
        u, v = (int(x) for x in e)
        if u == v:
            raise GraphInputError(f"loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphInputError(f"vertex out of range in edge {(u, v)}")
        out.add(_norm(u, v))
    return Graph(n, frozenset(out))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complement(g: Graph) -> Graph:
    es = frozenset(
        (i, j) for i in range(1, g.n + 1) for j in range(i + 1, g.n + 1) if j not in g.neighbors(i)
    )
    return Graph(g.n, es)


def relabel(g: Graph, perm: dict[int, int] | Sequence[int]) -> Graph:
    """Apply a bijection old -> new.  A sequence is read as perm[old-1]."""
    if not isinstance(perm, dict):
        perm = {i + 1: int(v) for i, v in enumerate(perm)}
    if sorted(perm) != list(g.vertices) or sorted(perm.values()) != list(g.vertices):
        raise GraphInputError("relabeling is not a bijection on 1..n")
    return Graph(g.n, frozenset(_norm(perm[u], perm[v]) for u, v in g.edges))


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``s``, relabeled by increasing old label."""
    keep = sorted(set(s))
    if not keep:
        raise GraphInputError("induced subgraph on an empty vertex set")
    if keep[0] < 1 or keep[-1] > g.n:
        raise GraphInputError("vertex out of range")
    mp = {v: i + 1 for i, v in enumerate(keep)}
    es = frozenset(_norm(mp[u], mp[v]) for u, v in g.edges if u in mp and v in mp)
    return Graph(len(keep), es), mp


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    _check_vertex(g, v)
    if g.n == 1:
        raise GraphInputError("cannot delete the only vertex")
    return induced(g, [u for u in g.vertices if u != v])


def complete_vertex(g: Graph, v: int) -> Graph:
    """Completion at ``v``: turn N(v) into a clique, keep everything else."""
    _check_vertex(g, v)
    nb = sorted(g.neighbors(v))
    extra = {(a, b) for i, a in enumerate(nb) for b in nb[i + 1:]}
    return Graph(g.n, g.edges | extra)


def _check_vertex(g: Graph, v: int) -> None:
    if not (1 <= v <= g.n):
        raise GraphInputError(f"vertex {v} out of range 1..{g.n}")


def components_without(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of g minus ``removed``, each sorted, ordered by least vertex."""
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    return components_without(g)


def is_connected(g: Graph) -> bool:
    return len(components_without(g)) <= 1


def count_components(g: Graph, removed: Iterable[int] = ()) -> int:
    return len(components_without(g, removed))


# edge-list text format ------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphInputError("empty edge list")
    try:
        if len(rows[0]) != 2:
            raise ValueError
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = []
        for r in rows[1:]:
            if len(r) != 2:
                raise ValueError
            pairs.append((int(r[0]), int(r[1])))
    except ValueError:
        raise GraphInputError("malformed edge list line") from None
    if len(pairs) != m:
        raise GraphInputError(f"header says {m} edges, found {len(pairs)}")
    return build_graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
