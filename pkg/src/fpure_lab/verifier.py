"""Brute-force re-verification of the checkable identities behind the F-purity results.

Every check returns a :class:`CheckResult`, one per (statement, parameters).
The expansion checks (switching, triangle) use their own tiny dense
arithmetic on exponent tuples and never touch the Groebner engine.  Probes
record an outcome without asserting it (``hard=False``).
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .bei import (
    P_ideal,
    f_ij,
    is_cut_set,
    minimal_primes,
    minimal_vertex_isolator,
    prime_component,
    var_ideal,
    verify_colon_formula,
)
from .families import antihole, at_forbidden_list, complement, xf1, xf6
from .fedder import NOT_FPURE, fedder
from .graphs import Graph, components_without
from .poly import (
    Effort,
    GroebnerTimeout,
    Ideal,
    Poly,
    Ring,
    binom_direct,
    binom_mod_p,
    contains_ideal,
    frobenius_power,
    ideals_equal,
    intersect,
    is_prime,
    quotient,
    quotient_ideal,
)
from .recognition import gallai_forbidden_witness, is_weakly_closed

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckResult:
    check: str
    params: dict
    outcome: str
    counterexample: Optional[dict] = None
    reason: Optional[str] = None
    elapsed_ms: float = 0.0
    hard: bool = True

    @property
    def ok(self) -> bool:
        """Passed, skipped, or a probe (probes never fail a run)."""
        return self.outcome != FAIL or not self.hard

    def to_dict(self) -> dict:
        d = {"check": self.check, "params": self.params, "outcome": self.outcome,
             "elapsed_ms": self.elapsed_ms}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.reason:
            d["reason"] = self.reason
        if not self.hard:
            d["probe"] = True
        return d


def _timed(name: str, params: dict, body: Callable[[], tuple], hard: bool = True) -> CheckResult:
    t0 = time.monotonic()
    try:
        outcome, cex, reason = body()
    except GroebnerTimeout as e:
        outcome, cex, reason = SKIPPED, None, f"budget: {e}"
    ms = round((time.monotonic() - t0) * 1000, 1)
    return CheckResult(name, params, outcome, cex, reason, ms, hard)


def write_findings(results: Iterable[CheckResult], path) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for r in results:
            fh.write(json.dumps(r.to_dict(), sort_keys=True) + "\n")


# number theory -----------------------------------------------------------------------

def check_lucas(p: int, bound: int = 100) -> CheckResult:
    def body():
        if not is_prime(p):
            return SKIPPED, None, "not prime"
        for n in range(bound + 1):
            for m in range(n + 1):
                a, b = binom_mod_p(n, m, p), binom_direct(n, m, p)
                if a != b:
                    return FAIL, {"n": n, "m": m, "lucas": a, "pascal": b}, None
        return PASS, None, None

    return _timed("lucas", {"p": p, "bound": bound}, body)


def check_alternating_binomials(p: int) -> CheckResult:
    def body():
        if not is_prime(p):
            return SKIPPED, None, "not prime"
        c = 1
        for i in range(p):
            if i:
                c = c * (p - i) // i  # exact binom(p-1, i)
            if (c - (-1) ** i) % p:
                return FAIL, {"i": i, "binom": c, "expected": (-1) ** i}, None
        return PASS, None, None

    return _timed("alternating_binomials", {"p": p}, body)


# dense expansion oracle ----------------------------------------------------------------------

def _emul(f: dict, g: dict, p: int) -> dict:
    out: dict = {}
    for a, c in f.items():
        for b, d in g.items():
            e = tuple(x + y for x, y in zip(a, b))
            out[e] = (out.get(e, 0) + c * d) % p
    return {e: c for e, c in out.items() if c}


def _epow(f: dict, k: int, p: int, nvars: int, keep: Callable[[tuple], bool] = lambda e: True) -> dict:
    out = {tuple([0] * nvars): 1}
    for _ in range(k):
        out = {e: c for e, c in _emul(out, f, p).items() if keep(e)}
    return out


def _ebinom(i: int, j: int, nvars: int, shift: int) -> dict:
    """x_i y_j - x_j y_i over variables x_0..x_{s-1}, y_0..y_{s-1} with s = shift."""
    a = [0] * nvars
    b = [0] * nvars
    a[i] += 1
    a[shift + j] += 1
    b[j] += 1
    b[shift + i] += 1
    return {tuple(a): 1, tuple(b): -1}


def _show(f: dict, names: Sequence[str]) -> list:
    out = []
    for e, c in sorted(f.items()):
        mono = "*".join(f"{n}^{k}" if k > 1 else n for n, k in zip(names, e) if k) or "1"
        out.append(f"{c}*{mono}")
    return out


def check_switching_identity(p: int) -> CheckResult:
    """(f_ab f_bc)^(p-1) = (x_b y_b f_ac)^(p-1) modulo (x_b^p, y_b^p)."""
    names = ("xa", "xb", "xc", "ya", "yb", "yc")

    def body():
        if not is_prime(p):
            return SKIPPED, None, "not prime"
        a, b, c = 0, 1, 2
        xb, yb = 1, 4

        def keep(e):
            return e[xb] < p and e[yb] < p

        fab = {e: v % p for e, v in _ebinom(a, b, 6, 3).items()}
        fbc = {e: v % p for e, v in _ebinom(b, c, 6, 3).items()}
        fac = {e: v % p for e, v in _ebinom(a, c, 6, 3).items()}
        lhs = _epow(_emul(fab, fbc, p), p - 1, p, 6, keep)
        xy = {(0, 1, 0, 0, 1, 0): 1}
        rhs = _epow(_emul(xy, fac, p), p - 1, p, 6, keep)
        if lhs != rhs:
            diff = {e: (lhs.get(e, 0) - rhs.get(e, 0)) % p for e in set(lhs) | set(rhs)}
            diff = {e: v for e, v in diff.items() if v}
            return FAIL, {"lhs_minus_rhs": _show(diff, names)[:20]}, None
        return PASS, None, None

    return _timed("switching", {"p": p}, body)


def check_triangle_lemma(p: int) -> CheckResult:
    """Every term of (f12 f23 f13)^(p-1) has some exponent >= p."""
    names = ("x1", "x2", "x3", "y1", "y2", "y3")

    def body():
        if not is_prime(p):
            return SKIPPED, None, "not prime"
        f = _emul(_emul(_ebinom(0, 1, 6, 3), _ebinom(1, 2, 6, 3), p), _ebinom(0, 2, 6, 3), p)

        def keep(e):
            # terms already in m^[p] stay there under further multiplication
            return all(x < p for x in e)

        survivors = _epow(f, p - 1, p, 6, keep)
        if survivors:
            return FAIL, {"terms_outside": _show(survivors, names)[:20]}, None
        return PASS, None, None

    return _timed("triangle", {"p": p}, body)


# regular sequences -------------------------------------------------------------------------

def _regular_sequences(t: int, ring: Ring) -> list[tuple[str, list[Poly]]]:
    xs = [Poly.variable(ring, f"x{i}") for i in range(1, t + 1)]
    out = [("variables", xs)]
    if t >= 2:
        out.append(("variables+binomial", xs[:t - 1] + [f_ij(ring, t, t + 1)]))
    return out


def _fpow(fs: Sequence[Poly], alpha: Sequence[int]) -> Poly:
    out = Poly.const(fs[0].ring, 1)
    for f, a in zip(fs, alpha):
        out = out * f ** a
    return out


def check_regular_sequence_intersection(t: int, cap: int = 2, p: int = 2,
                                        effort: Effort | None = None) -> CheckResult:
    """(f^a1, f^a2) cap (f^b) = (f^lcm(ai, b)) over exponent tuples up to ``cap``."""

    def body():
        if not 1 <= t <= 3:
            return SKIPPED, None, "t must be 1..3"
        ring = Ring.bei_ring(t + 1, p)
        tuples = list(itertools.product(range(cap + 1), repeat=t))
        for label, fs in _regular_sequences(t, ring):
            for a1, a2, b in itertools.product(tuples, repeat=3):
                if a2 < a1:
                    continue
                left = Ideal(ring, (_fpow(fs, a1), _fpow(fs, a2)))
                right = Ideal(ring, (_fpow(fs, b),))
                got = intersect(left, right, effort)
                want = Ideal(ring, tuple(_fpow(fs, [max(x, y) for x, y in zip(a, b)]) for a in (a1, a2)))
                if not ideals_equal(got, want, effort):
                    return FAIL, {"sequence": label, "alpha": [a1, a2], "beta": b,
                                  "intersection": [str(g) for g in got.gens],
                                  "lcm_ideal": [str(g) for g in want.gens]}, None
        return PASS, None, None

    return _timed("regseq", {"t": t, "cap": cap, "p": p}, body)


# colon lemma for three binomials ------------------------------------------------------------

def _char6_sides(p: int):
    ring = Ring.bei_ring(3, p)
    fac, fad, fcd = f_ij(ring, 1, 2), f_ij(ring, 1, 3), f_ij(ring, 2, 3)
    sq = Ideal(ring, (fac * fac, fad * fad, fcd * fcd))
    lhs = quotient_ideal(sq, Ideal(ring, (fac, fcd)))
    rhs = sq + Ideal(ring, (fac * fad, fac * fcd, fad * fcd))
    return ring, fac, lhs, rhs


def check_char6_lemma_char2() -> CheckResult:
    def body():
        ring, fac, lhs, rhs = _char6_sides(2)
        # (f_ac^2) : f_ac = (f_ac)
        one = quotient(Ideal(ring, (fac * fac,)), fac)
        if not ideals_equal(one, Ideal(ring, (fac,))):
            return FAIL, {"principal_colon": [str(g) for g in one.gens]}, None
        if not ideals_equal(lhs, rhs):
            return FAIL, {"lhs": [str(g) for g in lhs.gens], "rhs": [str(g) for g in rhs.gens]}, None
        return PASS, None, None

    return _timed("colon6", {"p": 2}, body)


def probe_char6_lemma(p: int) -> CheckResult:
    """Same identity with squares of the generators in characteristic p; recorded only."""

    def body():
        if not is_prime(p):
            return SKIPPED, None, "not prime"
        _, _, lhs, rhs = _char6_sides(p)
        if ideals_equal(lhs, rhs):
            return PASS, None, None
        return FAIL, {"lhs_in_rhs": contains_ideal(rhs, lhs), "rhs_in_lhs": contains_ideal(lhs, rhs),
                      "lhs": [str(g) for g in lhs.gens]}, None

    return _timed("colon6_probe", {"p": p}, body, hard=False)


# colon formula for a prime P(A, B) ------------------------------------------------------------

# (n, edges, A) with a, b, c = 1, 2, 3 and, for the three-vertex branch, d = 4
COLON_FORMULA_INSTANCES = {
    2: [
        (3, [(1, 3)], []),
        (4, [(1, 3), (2, 4), (1, 4)], [4]),
        (4, [(1, 3), (2, 4), (3, 4)], [4]),
        (4, [(1, 3), (2, 4), (1, 4), (3, 4)], [4]),
        (5, [(1, 3), (2, 4), (1, 4), (2, 5), (3, 5), (4, 5)], [4, 5]),
        (6, [(1, 3), (1, 4), (2, 4), (3, 4), (1, 5), (2, 5), (2, 6), (3, 6)], [4, 5, 6]),
    ],
    3: [
        (4, [(1, 3), (3, 4)], []),
        (5, [(1, 3), (3, 4), (2, 5), (1, 5)], [5]),
        (5, [(1, 3), (3, 4), (2, 5), (3, 5)], [5]),
        (5, [(1, 3), (3, 4), (2, 5), (1, 5), (4, 5)], [5]),
        (6, [(1, 3), (3, 4), (1, 5), (2, 5), (2, 6), (3, 6), (5, 6)], [5, 6]),
    ],
}


def check_colon_formula(n: int, edges, A, size: int, p: int = 2) -> CheckResult:
    """P^[2] : J_G = P^[2] + (f_ac w_A), or its three-binomial analogue when |B| = 3."""
    from .graphs import build_graph

    def body():
        g = build_graph(n, edges)
        B, d = ({1, 3}, None) if size == 2 else ({1, 3, 4}, 4)
        if verify_colon_formula(g, A, B, 1, 2, 3, d, p=p):
            return PASS, None, None
        return FAIL, {"edges": [list(e) for e in edges], "A": list(A), "B": sorted(B)}, None

    return _timed("colon_formula", {"branch": size, "n": n, "edges": [list(e) for e in edges], "A": list(A)},
                  body)


# graphs ------------------------------------------------------------------------------------

def check_gallai_reduction(graphs: Iterable[Graph], label: str = "corpus") -> CheckResult:
    def body():
        count = 0
        for g in graphs:
            count += 1
            wc = is_weakly_closed(g)
            wit = gallai_forbidden_witness(g)
            if wc == (wit is not None):
                return FAIL, {"graph": sorted(g.edges), "n": g.n, "weakly_closed": wc,
                              "witness": wit and wit[0]}, None
        return PASS, None, None

    return _timed("gallai", {"corpus": label}, body)


def check_at_fedder_agreement(max_vertices: int = 7, p: int = 2, budget: int | None = None) -> CheckResult:
    """Forbidden-list members carry the isolator certificate and fail Fedder's test."""
    from .bei import non_fpurity_certificate

    def body():
        for m in at_forbidden_list(max_vertices=8, smallest_only=True):
            if non_fpurity_certificate(m.graph) is None:
                return FAIL, {"member": m.name, "problem": "no certificate"}, None
            if m.graph.n <= max_vertices:
                r = fedder(m.graph, p, budget=budget, name=m.name)
                if r.verdict != NOT_FPURE:
                    return FAIL, {"member": m.name, "verdict": r.verdict}, None
        return PASS, None, None

    return _timed("at_fedder", {"max_vertices": max_vertices, "p": p}, body)


def check_swap_lemma(g: Graph, p: int, label: str = "", effort: Effort | None = None) -> CheckResult:
    """P^[p] : (f_ij, f_jk) is inside P^[p] : f_ik for minimal primes P = P_G(S), j not in S."""

    def body():
        from .bei import bei

        ring = bei(g, p).ring
        for pc in minimal_primes(g):
            P = pc.ideal(ring)
            Pq = frobenius_power(P, p)
            for i, j, k in itertools.permutations(g.vertices, 3):
                # the argument divides by x_j, so j must stay outside the cut set
                if i > k or j in pc.cut.s:
                    continue
                left = quotient_ideal(Pq, Ideal(ring, (f_ij(ring, i, j), f_ij(ring, j, k))), effort)
                right = quotient(Pq, f_ij(ring, i, k), effort)
                if not contains_ideal(right, left, effort):
                    return FAIL, {"cut_set": sorted(pc.cut.s), "triple": [i, j, k]}, None
        return PASS, None, None

    return _timed("swap", {"graph": label or sorted(g.edges), "p": p}, body)


def check_isolator_colon(g: Graph, p: int, label: str = "", effort: Effort | None = None) -> CheckResult:
    """P(S,A)^[p] : J_G inside (x_k, y_k : k in S+A-{i,j})^[p] + (f_ij)^(p-1)."""

    def body():
        from .bei import bei

        J = bei(g, p)
        ring = J.ring
        tested = 0
        for pc in minimal_primes(g):
            S = pc.cut.s
            if not S or not minimal_vertex_isolator(g, S):
                continue
            comps = components_without(g, S)
            big = [c for c in comps if len(c) > 1]
            if len(big) != 1:
                continue
            A = big[0]
            lhs = quotient_ideal(frobenius_power(P_ideal(ring, S, A), p), J.ideal, effort)
            for i, j in itertools.combinations(A, 2):
                rest = (set(S) | set(A)) - {i, j}
                bound = frobenius_power(var_ideal(ring, rest), p) if rest else Ideal(ring, ())
                bound = bound + Ideal(ring, (f_ij(ring, i, j) ** (p - 1),))
                tested += 1
                if not contains_ideal(bound, lhs, effort):
                    return FAIL, {"S": sorted(S), "A": A, "pair": [i, j]}, None
        if not tested:
            return SKIPPED, None, "no minimal vertex isolator"
        return PASS, None, None

    return _timed("isolator_colon", {"graph": label or sorted(g.edges), "p": p}, body)


# co-regular structures ----------------------------------------------------------------------

@dataclass(frozen=True)
class ListedPrime:
    name: str
    s: frozenset
    b: frozenset
    colon: Optional[tuple]  # (a, b, c, d) for the colon formula, d may be None


def coregular_primes(family: str, n: int) -> tuple[Graph, list[ListedPrime]]:
    """The minimal primes listed for the named family, in the paper's labels."""
    fam = family.lower().replace("_", "-")
    out = []
    if fam in ("anti-hole", "antihole"):
        g = antihole(n)
        for i in range(1, n + 1):
            a, b, c = i, i % n + 1, (i + 1) % n + 1
            out.append(ListedPrime(f"P{a},{c}", frozenset(set(g.vertices) - {a, b, c}),
                                   frozenset({a, c}), (a, b, c, None)))
        out.append(ListedPrime("P(0,[n])", frozenset(), frozenset(g.vertices), None))
        return g, out
    if fam in ("co-xf1", "coxf1"):
        g = complement(xf1(n))
        N = 2 * n + 7
        for i in range(2, 2 * n + 4):
            out.append(ListedPrime(f"P{i},{i + 2}", frozenset(set(range(1, N + 1)) - {1, i, i + 1, i + 2}),
                                   frozenset({i, i + 2}), (i, i + 1, i + 2, 1)))
        out.append(ListedPrime("Q1", frozenset(set(range(2, 2 * n + 4)) | {N}),
                               frozenset({1, 2 * n + 4, 2 * n + 6}), (2 * n + 4, 2 * n + 5, 2 * n + 6, 1)))
        out.append(ListedPrime("Q2", frozenset(range(4, 2 * n + 7)), frozenset({1, 3, N}), (3, 2, N, 1)))
        out.append(ListedPrime("Q3", frozenset({2 * n + 6, N}), frozenset(range(2, 2 * n + 6)), None))
        return g, out
    if fam in ("co-xf6", "coxf6"):
        g = complement(xf6(n))
        N = 2 * n + 7
        for i in range(3, 2 * n + 4):
            out.append(ListedPrime(f"P{i},{i + 2}", frozenset(set(range(1, N + 1)) - {1, 2, i, i + 1, i + 2}),
                                   frozenset({i, i + 2}), (i, i + 1, i + 2, None)))
        out.append(ListedPrime("Q1", frozenset(range(5, 2 * n + 7)), frozenset({2, 4, N}), (4, 3, N, 2)))
        out.append(ListedPrime("Q2", frozenset(set(range(3, 2 * n + 4)) | {N}),
                               frozenset({1, 2 * n + 4, 2 * n + 6}), (2 * n + 4, 2 * n + 5, 2 * n + 6, 1)))
        out.append(ListedPrime("Q3", frozenset({2 * n + 6, N}), frozenset(range(3, 2 * n + 6)), None))
        return g, out
    raise ValueError(f"unknown co-regular family {family!r}")


def check_coregular_structures(family: str, n: int, colon: bool = True,
                               budget: int | None = 2_000_000) -> CheckResult:
    def body():
        g, listed = coregular_primes(family, n)
        for lp in listed:
            if lp.s and not is_cut_set(g, lp.s):
                return FAIL, {"prime": lp.name, "problem": "not a cut set", "S": sorted(lp.s)}, None
            pc = prime_component(g, lp.s)
            big = [set(c) for c in pc.comps if len(c) > 1]
            if big != [set(lp.b)]:
                return FAIL, {"prime": lp.name, "problem": "components differ",
                              "components": [list(c) for c in pc.comps]}, None
        if colon:
            effort = Effort(max_reductions=budget)
            for lp in listed:
                if lp.colon is None:
                    continue
                a, b, c, d = lp.colon
                if not verify_colon_formula(g, lp.s, lp.b, a, b, c, d, p=2, effort=effort):
                    return FAIL, {"prime": lp.name, "problem": "colon formula"}, None
        return PASS, None, None

    return _timed("coregular", {"family": family, "n": n, "colon": colon}, body)


# suites -------------------------------------------------------------------------------------

SELECTIONS = ("all", "lucas", "switching", "triangle", "regseq", "colon6", "gallai", "coregular")


def run_selection(selection: str, max_n: int = 5) -> list[CheckResult]:
    """Checks behind ``fpure-lab verify <selection>``."""
    from .enumerate import connected_graphs_upto
    from .families import complete, cycle

    if selection not in SELECTIONS:
        raise ValueError(f"unknown selection {selection!r}")
    want = (lambda s: True) if selection == "all" else (lambda s: s == selection)
    out: list[CheckResult] = []
    if want("lucas"):
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
            out.append(check_lucas(p, 100))
            out.append(check_alternating_binomials(p))
    if want("switching"):
        out += [check_switching_identity(p) for p in (2, 3, 5, 7)]
    if want("triangle"):
        out += [check_triangle_lemma(p) for p in (2, 3, 5, 7)]
    if want("regseq"):
        out += [check_regular_sequence_intersection(1, 2), check_regular_sequence_intersection(2, 2),
                check_regular_sequence_intersection(3, 1)]
    if want("colon6"):
        out.append(check_char6_lemma_char2())
        out += [probe_char6_lemma(p) for p in (3, 5)]
        for size, cases in COLON_FORMULA_INSTANCES.items():
            out += [check_colon_formula(n, e, A, size) for n, e, A in cases]
    if want("gallai"):
        out.append(check_gallai_reduction(connected_graphs_upto(max_n), f"connected<={max_n}"))
        out.append(check_gallai_reduction([cycle(5)], "C5"))
        out.append(check_gallai_reduction([complete(7)], "K7"))
    if want("coregular"):
        out.append(check_coregular_structures("anti-hole", 7))
        out.append(check_coregular_structures("co-XF1", 1))
        out.append(check_coregular_structures("co-XF6", 2, colon=max_n >= 7))
    return out
