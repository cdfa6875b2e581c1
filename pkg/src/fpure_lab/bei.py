"""Binomial edge ideals: generators, cut sets, minimal primes, heights,
the isolator-based non-F-purity certificate, König type, and the colon
formulas for primes P(A, B)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import Graph, GraphInputError, components_without, count_components
from .poly import GREVLEX, Effort, Ideal, MonomialOrder, Poly, Ring, ideals_equal, quotient_ideal, frobenius_power


# ring and generators -------------------------------------------------------------------

def x_index(ring: Ring, i: int) -> int:
    off = 1 if ring.names[0] == "t" else 0
    return off + i - 1


def y_index(ring: Ring, i: int) -> int:
    off = 1 if ring.names[0] == "t" else 0
    return off + ring.n + i - 1


def xvar(ring: Ring, i: int) -> Poly:
    return Poly(ring, {ring.var(x_index(ring, i)): 1}, _clean=True)


def yvar(ring: Ring, i: int) -> Poly:
    return Poly(ring, {ring.var(y_index(ring, i)): 1}, _clean=True)


def f_ij(ring: Ring, i: int, j: int) -> Poly:
    """x_i y_j - x_j y_i."""
    if i == j:
        raise GraphInputError("f_ij needs distinct indices")
    e1 = [0] * ring.nvars
    e2 = [0] * ring.nvars
    e1[x_index(ring, i)] += 1
    e1[y_index(ring, j)] += 1
    e2[x_index(ring, j)] += 1
    e2[y_index(ring, i)] += 1
    return Poly(ring, {ring.encode(e1): 1, ring.encode(e2): -1})


def omega(ring: Ring, A: Iterable[int]) -> Poly:
    """prod_{i in A} x_i y_i."""
    e = [0] * ring.nvars
    for i in A:
        e[x_index(ring, i)] += 1
        e[y_index(ring, i)] += 1
    return Poly(ring, {ring.encode(e): 1}, _clean=True)


@dataclass(frozen=True)
class BinomialEdgeIdeal:
    graph: Graph
    p: int
    ring: Ring
    ideal: Ideal

    @property
    def generators(self) -> tuple[Poly, ...]:
        return self.ideal.gens


def bei(g: Graph, p: int, order: MonomialOrder = GREVLEX) -> BinomialEdgeIdeal:
    ring = Ring.bei_ring(g.n, p, order)
    gens = tuple(f_ij(ring, i, j) for i, j in g.sorted_edges())
    return BinomialEdgeIdeal(g, p, ring, Ideal(ring, gens))


def complete_ideal(ring: Ring, B: Iterable[int]) -> Ideal:
    B = sorted(B)
    return Ideal(ring, tuple(f_ij(ring, i, j) for i, j in itertools.combinations(B, 2)))


def var_ideal(ring: Ring, S: Iterable[int]) -> Ideal:
    gens = []
    for i in sorted(S):
        gens += [xvar(ring, i), yvar(ring, i)]
    return Ideal(ring, tuple(gens))


def P_ideal(ring: Ring, S: Iterable[int], A: Iterable[int]) -> Ideal:
    """P(S, A) = (x_i, y_i : i in S) + J of the complete graph on A."""
    S, A = set(S), set(A)
    if S & A:
        raise GraphInputError("P(S, A) needs disjoint sets")
    return var_ideal(ring, S) + complete_ideal(ring, A)


# cut sets and minimal primes -----------------------------------------------------------

@dataclass(frozen=True)
class CutSet:
    s: frozenset[int]
    c: int

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.s))


@dataclass(frozen=True)
class PrimeComponent:
    cut: CutSet
    comps: tuple[tuple[int, ...], ...]
    height: int

    def ideal(self, ring: Ring) -> Ideal:
        out = var_ideal(ring, self.cut.s)
        for comp in self.comps:
            out = out + complete_ideal(ring, comp)
        return out


def _cut_condition(g: Graph, S: frozenset[int]) -> tuple[bool, list[list[int]]]:
    comps = components_without(g, S)
    label = {}
    for k, comp in enumerate(comps):
        for v in comp:
            label[v] = k
    for i in S:
        # re-adding i merges the components it touches; need at least two
        touched = {label[w] for w in g.neighbors(i) if w in label}
        if len(touched) < 2:
            return False, comps
    return True, comps


def is_cut_set(g: Graph, s: Iterable[int]) -> bool:
    S = frozenset(s)
    if not S:
        return True
    return _cut_condition(g, S)[0]


def is_cut_set_bruteforce(g: Graph, s: Iterable[int]) -> bool:
    """The definition verbatim: c(S - {i}) < c(S) for every i in S."""
    S = frozenset(s)
    c = count_components(g, S)
    return all(count_components(g, S - {i}) < c for i in S)


def cut_sets(g: Graph) -> list[CutSet]:
    """All cut sets, ordered by size then lexicographically; the empty set first."""
    out = []
    verts = list(g.vertices)
    for r in range(0, g.n + 1):
        for S in itertools.combinations(verts, r):
            fs = frozenset(S)
            if r and any(g.degree(i) < 2 for i in S):
                continue  # a vertex of degree < 2 can never touch two components
            ok, comps = _cut_condition(g, fs)
            if ok:
                out.append(CutSet(fs, len(comps)))
    return out


def height_formula(s_size: int, n: int, c: int) -> int:
    """|S| + (n - c(S)): two per removed vertex, |C| - 1 per component C."""
    return s_size + n - c


def prime_component(g: Graph, s: Iterable[int]) -> PrimeComponent:
    S = frozenset(s)
    ok, comps = _cut_condition(g, S)
    if S and not ok:
        raise GraphInputError(f"{sorted(S)} is not a cut set")
    cut = CutSet(S, len(comps))
    return PrimeComponent(cut, tuple(tuple(c) for c in comps), height_formula(len(S), g.n, len(comps)))


def height_of(pc: PrimeComponent, n: int) -> int:
    return height_formula(len(pc.cut.s), n, pc.cut.c)


def minimal_primes(g: Graph) -> list[PrimeComponent]:
    return [prime_component(g, cs.s) for cs in cut_sets(g)]


def ideal_height(g: Graph) -> int:
    """hgt J_G: the least height of a minimal prime."""
    if g.m == 0:
        return 0
    return min(height_of(pc, g.n) for pc in minimal_primes(g))


def is_unmixed(g: Graph) -> bool:
    hs = {height_of(pc, g.n) for pc in minimal_primes(g)}
    return len(hs) <= 1


def radical_decomposition(g: Graph, ring: Ring, effort: Effort | None = None) -> Ideal:
    """Intersection of all P_G(S) over cut sets, as an ideal."""
    from .poly import intersect, reduced

    out = None
    for pc in minimal_primes(g):
        P = pc.ideal(ring)
        out = P if out is None else intersect(out, P, effort)
    return reduced(out, effort)


# separators, isolators, certificate -------------------------------------------------------

def _need_cut(g: Graph, s) -> frozenset[int]:
    S = frozenset(s)
    if not is_cut_set(g, S):
        raise GraphInputError(f"{sorted(S)} is not a cut set")
    return S


def minimal_vertex_separator(g: Graph, s: Iterable[int]) -> bool:
    S = _need_cut(g, s)
    return count_components(g, S) == 2


def minimal_vertex_isolator(g: Graph, s: Iterable[int]) -> bool:
    S = _need_cut(g, s)
    comps = components_without(g, S)
    return len(comps) == 2 and min(len(c) for c in comps) == 1


def _isolates(g: Graph, v: int) -> bool:
    # N(v) is a minimal vertex isolator and G - N(v) = {v} + (G - N[v])
    nb = g.neighbors(v)
    if not nb or not is_cut_set(g, nb):
        return False
    comps = components_without(g, nb)
    return len(comps) == 2 and [v] in comps and len(comps[0]) + len(comps[1]) == g.n - len(nb)


def non_fpurity_certificate(g: Graph) -> Optional[tuple[int, int, int]]:
    """First triple of pairwise nonadjacent vertices each isolated by its neighbourhood."""
    good = [v for v in g.vertices if _isolates(g, v)]
    for a, b, c in itertools.combinations(good, 3):
        if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
            return (a, b, c)
    return None


# König type ----------------------------------------------------------------------------------

@dataclass(frozen=True)
class PathPacking:
    paths: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return sum(len(p) - 1 for p in self.paths)

    def is_valid(self, g: Graph) -> bool:
        seen = set()
        for p in self.paths:
            if len(p) < 2 or seen & set(p) or len(set(p)) != len(p):
                return False
            seen |= set(p)
            if not all(g.has_edge(a, b) for a, b in zip(p, p[1:])):
                return False
        return True


def _arms(g: Graph, v: int, free: frozenset, banned: frozenset):
    """Simple paths starting at v inside ``free``, avoiding ``banned``."""
    stack = [(v,)]
    while stack:
        path = stack.pop()
        yield path
        for w in sorted(g.neighbors(path[-1]), reverse=True):
            if w in free and w not in banned and w not in path:
                stack.append(path + (w,))


def path_packing(g: Graph, target: int) -> Optional[PathPacking]:
    """Vertex-disjoint paths with exactly ``target`` edges, by exhaustive search.

    Finds a packing with at least ``target`` edges and trims path ends, which
    lowers the count one edge at a time.
    """
    if target <= 0:
        return PathPacking(())

    def trim(paths):
        paths = [list(p) for p in paths]
        extra = sum(len(p) - 1 for p in paths) - target
        for p in paths:
            while extra > 0 and len(p) > 1:
                p.pop()
                extra -= 1
        return PathPacking(tuple(tuple(p) for p in paths if len(p) > 1))

    def rec(free: frozenset, paths: list, total: int):
        if total >= target:
            return trim(paths)
        if not free or total + len(free) - 1 < target:
            return None
        v = min(free)
        rest = free - {v}
        for arm1 in _arms(g, v, rest | {v}, frozenset()):
            for arm2 in _arms(g, v, rest | {v}, frozenset(arm1[1:])):
                path = arm2[::-1] + arm1[1:]
                if len(path) < 2:
                    continue
                got = rec(free - set(path), paths + [path], total + len(path) - 1)
                if got is not None:
                    return got
        return rec(rest, paths, total)

    return rec(frozenset(g.vertices), [], 0)


def koenig_type(g: Graph) -> Optional[PathPacking]:
    return path_packing(g, ideal_height(g))


def koenig_fpure_expected(g: Graph) -> bool:
    return is_unmixed(g) and koenig_type(g) is not None


# colon formulas for P(A, B) -------------------------------------------------------------------

class HypothesisError(GraphInputError):
    pass


def check_colon_hypotheses(g: Graph, A: Iterable[int], B: Iterable[int], a: int, b: int, c: int,
                           d: Optional[int] = None) -> None:
    A, B = set(A), set(B)
    labels = [a, b, c] + ([d] if d is not None else [])
    if len(set(labels)) != len(labels):
        raise HypothesisError("a, b, c, d must be distinct")
    if any(not (1 <= v <= g.n) for v in labels):
        raise HypothesisError("a, b, c, d must be vertices of the ambient ring")
    if B not in ({a, c}, {a, c, d} if d is not None else {a, c}):
        raise HypothesisError("B must be {a,c} or {a,c,d}")
    if A & set(labels):
        raise HypothesisError("(1) A must avoid a, b, c, d")
    if any(not (1 <= k <= g.n) for k in A):
        raise HypothesisError("(1) A must lie in V(G)")
    for k in sorted(A):
        if not g.has_edge(k, b):
            raise HypothesisError(f"(2) edge {{{k},{b}}} missing")
        if not (g.has_edge(k, a) or g.has_edge(k, c)):
            raise HypothesisError(f"(3) vertex {k} adjacent to neither a nor c")
    if not g.has_edge(a, c):
        raise HypothesisError("(4) edge {a,c} missing")
    three = d is not None and d in B
    if three and not g.has_edge(c, d):
        raise HypothesisError("(4) edge {c,d} missing")
    # with B = {a,c} the edge {c,d} would break the formula, so d stays a bystander
    allowed = {tuple(sorted((a, c)))}
    if three:
        allowed.add(tuple(sorted((c, d))))
    for e in g.sorted_edges():
        if e not in allowed and not (set(e) & A):
            raise HypothesisError(f"(5) edge {e} is not allowed")


def colon_formula_sides(g: Graph, A, B, a, b, c, d=None, p: int = 2, effort: Effort | None = None):
    """Left side P^[2] : J_G and the right side of the formula, as ideals."""
    check_colon_hypotheses(g, A, B, a, b, c, d)
    J = bei(g, p)
    ring = J.ring
    P = P_ideal(ring, A, B)
    Pq = frobenius_power(P, 2 if p == 2 else p)
    lhs = quotient_ideal(Pq, J.ideal, effort)
    w = omega(ring, A)
    if len(set(B)) == 2:
        extra = [f_ij(ring, a, c) * w]
    else:
        fac, fad, fcd = f_ij(ring, a, c), f_ij(ring, a, d), f_ij(ring, c, d)
        extra = [fac * fad * w, fac * fcd * w, fad * fcd * w]
    rhs = Pq + Ideal(ring, tuple(extra))
    return lhs, rhs


def verify_colon_formula(g: Graph, A, B, a, b, c, d=None, p: int = 2, effort: Effort | None = None) -> bool:
    lhs, rhs = colon_formula_sides(g, A, B, a, b, c, d, p, effort)
    return ideals_equal(lhs, rhs, effort)
