"""Combinatorial classifiers: chordality, asteroidal triples, induced
subgraph search, transitive orientation and weak closure."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Graph, complement, components_without


# chordality -------------------------------------------------------------------

@dataclass(frozen=True)
class Chordality:
    chordal: bool
    ordering: Optional[tuple[int, ...]] = None  # perfect elimination ordering
    cycle: Optional[tuple[int, ...]] = None  # induced cycle of length >= 4

    def __bool__(self) -> bool:
        return self.chordal


def _mcs_order(g: Graph) -> list[int]:
    # maximum cardinality search; the reverse visiting order is a PEO iff chordal
    weight = {v: 0 for v in g.vertices}
    order = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], -u))
        order.append(v)
        del weight[v]
        for w in g.neighbors(v):
            if w in weight:
                weight[w] += 1
    order.reverse()
    return order


def is_peo(g: Graph, order: Sequence[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        for a, b in itertools.combinations(later, 2):
            if not g.has_edge(a, b):
                return False
    return True


def chordless_cycle(g: Graph) -> Optional[tuple[int, ...]]:
    """Some induced cycle of length >= 4, or None."""
    for v in g.vertices:
        nb = sorted(g.neighbors(v))
        for u, w in itertools.combinations(nb, 2):
            if g.has_edge(u, w):
                continue
            banned = (g.neighbors(v) - {u, w}) | {v}
            p = _shortest_path(g, u, w, banned)
            if p is not None:
                return (v, *p)
    return None


def _shortest_path(g: Graph, s: int, t: int, banned) -> Optional[list[int]]:
    prev = {s: None}
    dq = deque([s])
    while dq:
        x = dq.popleft()
        if x == t:
            out = []
            while x is not None:
                out.append(x)
                x = prev[x]
            return out[::-1]
        for y in sorted(g.neighbors(x)):
            if y not in prev and y not in banned:
                prev[y] = x
                dq.append(y)
    return None


def chordality(g: Graph) -> Chordality:
    order = _mcs_order(g)
    if is_peo(g, order):
        return Chordality(True, ordering=tuple(order))
    cyc = chordless_cycle(g)
    assert cyc is not None, "no PEO but no chordless cycle"
    return Chordality(False, cycle=cyc)


def is_chordal(g: Graph) -> bool:
    return chordality(g).chordal


# asteroidal triples -------------------------------------------------------------

def _avoid_labels(g: Graph) -> list[dict[int, int]]:
    labels: list[dict[int, int]] = [dict()]
    for v in g.vertices:
        lab = {}
        for k, comp in enumerate(components_without(g, g.closed_neighbors(v))):
            for w in comp:
                lab[w] = k
        labels.append(lab)
    return labels


def find_asteroidal_triple(g: Graph) -> Optional[tuple[int, int, int]]:
    """Lexicographically first asteroidal triple, or None if g is AT-free."""
    lab = _avoid_labels(g)
    for a in g.vertices:
        for b in range(a + 1, g.n + 1):
            if g.has_edge(a, b):
                continue
            for c in range(b + 1, g.n + 1):
                if g.has_edge(a, c) or g.has_edge(b, c):
                    continue
                if (lab[a][b] == lab[a][c] and lab[b][a] == lab[b][c]
                        and lab[c][a] == lab[c][b]):
                    return (a, b, c)
    return None


def is_asteroidal_triple(g: Graph, triple: Sequence[int]) -> bool:
    a, b, c = triple
    if len({a, b, c}) < 3 or g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
        return False
    for t, (s, u) in ((a, (b, c)), (b, (a, c)), (c, (a, b))):
        comps = components_without(g, g.closed_neighbors(t))
        if not any(s in comp and u in comp for comp in comps):
            return False
    return True


# induced subgraph search --------------------------------------------------------

def contains_induced(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """An induced embedding of h into g as a map V(h) -> V(g), or None.

    Exploration is deterministic: h's vertices are placed in a fixed
    connectivity-first order and g's candidates are tried in increasing order.
    """
    if h.n > g.n or h.m > g.m:
        return None
    order = []
    left = set(h.vertices)
    while left:
        placed = set(order)
        best = max(left, key=lambda v: (len(h.neighbors(v) & placed), h.degree(v), -v))
        order.append(best)
        left.remove(best)
    gdeg = [0] + [g.degree(v) for v in g.vertices]
    hdeg = [0] + [h.degree(v) for v in h.vertices]
    # neighbourhood degree profiles for pruning
    gprof = [()] + [tuple(sorted((gdeg[w] for w in g.neighbors(v)), reverse=True)) for v in g.vertices]
    hprof = [()] + [tuple(sorted((hdeg[w] for w in h.neighbors(v)), reverse=True)) for v in h.vertices]

    def dominated(hp, gp):
        # an induced copy maps h-neighbours to distinct g-neighbours of at least that degree
        if len(hp) > len(gp):
            return False
        return all(a <= b for a, b in zip(hp, gp))

    cand = {v: [w for w in g.vertices if gdeg[w] >= hdeg[v] and dominated(hprof[v], gprof[w])]
            for v in h.vertices}
    phi: dict[int, int] = {}
    used: set[int] = set()

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in cand[v]:
            if w in used:
                continue
            ok = True
            for u, x in phi.items():
                if h.has_edge(u, v) != g.has_edge(x, w):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used.add(w)
            if rec(i + 1):
                return True
            del phi[v]
            used.discard(w)
        return False

    return dict(sorted(phi.items())) if rec(0) else None


def is_induced_embedding(g: Graph, h: Graph, phi: dict[int, int]) -> bool:
    if sorted(phi) != list(h.vertices) or len(set(phi.values())) != h.n:
        return False
    return all(h.has_edge(a, b) == g.has_edge(phi[a], phi[b])
               for a, b in itertools.combinations(h.vertices, 2))


# transitive orientation ---------------------------------------------------------

Orientation = frozenset  # of directed pairs (a, b) meaning a -> b


def is_transitive(g: Graph, orient) -> bool:
    arcs = set(orient)
    if len(arcs) != g.m:
        return False
    for a, b in arcs:
        if (b, a) in arcs or not g.has_edge(a, b):
            return False
    out = {v: set() for v in g.vertices}
    for a, b in arcs:
        out[a].add(b)
    for a, b in arcs:
        for c in out[b]:
            if (a, c) not in arcs:
                return False
    return True


def transitive_orientation(g: Graph) -> Optional[frozenset[tuple[int, int]]]:
    """A transitive orientation of g, or None if g is not a comparability graph.

    Each decision is propagated through the forcing rules (same tail with a
    non-adjacent head, same head with a non-adjacent tail, transitive closure)
    and undone on contradiction.
    """
    edges = g.sorted_edges()
    if not edges:
        return frozenset()

    def propagate(state: dict, a: int, b: int) -> bool:
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            key = (a, b) if a < b else (b, a)
            want = 1 if a < b else -1
            have = state.get(key)
            if have is not None:
                if have != want:
                    return False
                continue
            state[key] = want
            na, nb = g.neighbors(a), g.neighbors(b)
            for c in na:
                if c != b and c not in nb:
                    queue.append((a, c))
            for c in nb:
                if c != a and c not in na:
                    queue.append((c, b))
            # closure through b -> c and c -> a
            for c in nb:
                if c == a:
                    continue
                k2 = (b, c) if b < c else (c, b)
                d = state.get(k2)
                if d is not None and (d == 1) == (b < c):
                    if c not in na:
                        return False
                    queue.append((a, c))
            for c in na:
                if c == b:
                    continue
                k2 = (c, a) if c < a else (a, c)
                d = state.get(k2)
                if d is not None and (d == 1) == (c < a):
                    if c not in nb:
                        return False
                    queue.append((c, b))
        return True

    def search(state: dict) -> Optional[dict]:
        for e in edges:
            if e not in state:
                break
        else:
            return state
        u, v = e
        for a, b in ((u, v), (v, u)):
            trial = dict(state)
            if propagate(trial, a, b):
                res = search(trial)
                if res is not None:
                    return res
        return None

    final = search({})
    if final is None:
        return None
    orient = frozenset((u, v) if d == 1 else (v, u) for (u, v), d in final.items())
    if not is_transitive(g, orient):
        raise AssertionError("orientation search produced a non-transitive orientation")
    return orient


def brute_force_transitive_orientation(g: Graph) -> Optional[frozenset]:
    """Exhaustive oracle over all 2^m orientations (small graphs only)."""
    edges = g.sorted_edges()
    for bits in itertools.product((0, 1), repeat=len(edges)):
        orient = frozenset((u, v) if s == 0 else (v, u) for (u, v), s in zip(edges, bits))
        if is_transitive(g, orient):
            return orient
    return None


# weak closure ---------------------------------------------------------------------

def check_labeling(g: Graph, perm: Sequence[int] | dict) -> bool:
    """Direct test of the weakly closed condition for the labeling old -> perm[old].

    For every edge {i, j} with i < j in the new labels, each k strictly
    between them must be adjacent to i or to j.
    """
    if isinstance(perm, dict):
        lab = perm
    else:
        lab = {v + 1: int(x) for v, x in enumerate(perm)}
    if sorted(lab.values()) != list(g.vertices) or sorted(lab) != list(g.vertices):
        return False
    at = {new: old for old, new in lab.items()}
    for u, v in g.edges:
        i, j = sorted((lab[u], lab[v]))
        a, b = at[i], at[j]
        for k in range(i + 1, j):
            w = at[k]
            if not (g.has_edge(a, w) or g.has_edge(w, b)):
                return False
    return True


def is_weakly_closed(g: Graph) -> bool:
    return transitive_orientation(complement(g)) is not None


def find_weakly_closed_labeling(g: Graph) -> Optional[tuple[int, ...]]:
    """A weakly closed labeling as a tuple ``perm`` with new label perm[v-1].

    Built from a linear extension of a transitive orientation of the
    complement: comparable pairs keep their order, and an edge i-j of g with
    some k in between adjacent to neither would force i < k < j in the poset,
    hence i < j, contradicting that i-j is not a complement edge.
    """
    co = complement(g)
    orient = transitive_orientation(co)
    if orient is None:
        return None
    indeg = {v: 0 for v in g.vertices}
    out = {v: [] for v in g.vertices}
    for a, b in orient:
        out[a].append(b)
        indeg[b] += 1
    ready = sorted(v for v in g.vertices if indeg[v] == 0)
    seq = []
    while ready:
        v = ready.pop(0)
        seq.append(v)
        for w in sorted(out[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    perm = [0] * g.n
    for new, old in enumerate(seq, start=1):
        perm[old - 1] = new
    return tuple(perm)


def brute_force_weakly_closed(g: Graph) -> Optional[tuple[int, ...]]:
    """Oracle: try every labeling (n <= 8)."""
    for perm in itertools.permutations(range(1, g.n + 1)):
        if check_labeling(g, perm):
            return perm
    return None


# forbidden lists ---------------------------------------------------------------------

def gallai_forbidden_witness(g: Graph) -> Optional[tuple[str, dict[int, int]]]:
    """First Gallai-list member found as an induced subgraph, with its embedding."""
    from .families import gallai_list

    for mem in gallai_list(g.n):
        phi = contains_induced(g, mem.graph)
        if phi is not None:
            return mem.name, phi
    return None


def at_forbidden_witness(g: Graph) -> Optional[tuple[str, dict[int, int]]]:
    from .families import at_forbidden_list

    for mem in at_forbidden_list(max_vertices=g.n):
        phi = contains_induced(g, mem.graph)
        if phi is not None:
            return mem.name, phi
    return None
