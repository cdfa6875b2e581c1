"""Buchberger's algorithm over Z/pZ.

Pairs are chosen by the normal strategy (smallest lcm) and pruned with the
Gebauer-Moeller update.  Work is metered by an :class:`Effort` budget counting
S-pair reductions, with an optional wall-clock backstop.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .polynomial import Poly, PolyError
from .ring import Ring, RingError


class GroebnerTimeout(RuntimeError):
    """Budget exhausted; ``stats`` holds the partial counters."""

    def __init__(self, msg: str, stats: dict):
        super().__init__(msg)
        self.stats = stats


@dataclass
class Effort:
    """Shared effort meter.  ``max_reductions`` / ``max_seconds`` of None mean unlimited."""

    max_reductions: Optional[int] = None
    max_seconds: Optional[float] = None
    reductions: int = 0
    _t0: float = field(default_factory=time.monotonic, repr=False)

    def spend(self, k: int = 1) -> None:
        self.reductions += k
        if self.max_reductions is not None and self.reductions > self.max_reductions:
            raise GroebnerTimeout("reduction budget exhausted", self.stats())
        if self.max_seconds is not None and (self.reductions & 63) == 0:
            self.check_clock()

    def check_clock(self) -> None:
        if self.max_seconds is not None and time.monotonic() - self._t0 > self.max_seconds:
            raise GroebnerTimeout("wall-clock budget exhausted", self.stats())

    def remaining(self) -> Optional[int]:
        if self.max_reductions is None:
            return None
        return max(0, self.max_reductions - self.reductions)

    def elapsed(self) -> float:
        return time.monotonic() - self._t0

    def stats(self) -> dict:
        return {"reductions": self.reductions, "elapsed_s": round(self.elapsed(), 3)}


def _unlimited() -> Effort:
    return Effort()


# reduction ----------------------------------------------------------------------------

class _Basis:
    """Reducer set in packed form: (lead, tail-terms) of monic elements."""

    __slots__ = ("ring", "items")

    def __init__(self, ring: Ring, polys: Iterable[Poly] = ()):
        self.ring = ring
        self.items: list[tuple[int, list[tuple[int, int]]]] = []
        for g in polys:
            self.add(g)

    def add(self, g: Poly) -> None:
        g = g.monic()
        ld = g.lead
        self.items.append((ld, [(m, c) for m, c in g.terms.items() if m != ld]))


def reduce_terms(ring: Ring, terms: dict, reducers: Sequence[tuple[int, list]], full: bool = True) -> dict:
    """Remainder of ``terms`` modulo the monic reducers.

    With ``full=False`` stops at the first irreducible leading term.
    """
    if not terms:
        return {}
    lay = ring._lay
    p = ring.p
    add = lay["divadd"]
    gall = lay["gall"]
    gnc = lay["gnc"]
    one = ring.one
    work = dict(terms)
    heap = [-m for m in work]
    heapq.heapify(heap)
    push = heapq.heappush
    pop = heapq.heappop
    rem: dict[int, int] = {}
    while heap:
        m = -pop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for lead, tail in reducers:
            x = m - lead + add
            if x & gall == gnc:
                shift = m - lead  # q - one, with q = m / lead
                for t, ct in tail:
                    mm = t + shift
                    v = work.get(mm)
                    if v is None:
                        work[mm] = (-c * ct) % p
                        push(heap, -mm)
                    else:
                        v = (v - c * ct) % p
                        if v:
                            work[mm] = v
                        else:
                            del work[mm]
                break
        else:
            rem[m] = c
            if not full:
                rem.update(work)
                return rem
    del one
    return rem


# Groebner bases -----------------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, interreduced, sorted by increasing lead."""

    ring: Ring
    basis: tuple[Poly, ...]
    stats: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_red", _Basis(self.ring, self.basis).items)

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    @property
    def order(self):
        return self.ring.order

    def leads(self) -> list[int]:
        return [g.lead for g in self.basis]

    def normal_form(self, f: Poly) -> Poly:
        if f.ring != self.ring:
            raise RingError("ring mismatch")
        return Poly(self.ring, reduce_terms(self.ring, f.terms, self._red), _clean=True)

    def contains(self, f: Poly) -> bool:
        return not self.normal_form(f)

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].lead == self.ring.one

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def strings(self) -> list[str]:
        return [str(g) for g in self.basis]


def _spoly(ring: Ring, f: Poly, g: Poly, lcm: int) -> dict:
    p = ring.p
    one = ring.one
    out: dict[int, int] = {}
    for h, sgn in ((f, 1), (g, -1)):
        ld = h.lead
        inv = pow(h.terms[ld], p - 2, p) * sgn
        sh = lcm - ld  # monomial lcm/ld, minus one
        for m, c in h.terms.items():
            if m == ld:
                continue
            mm = m + sh
            v = (out.get(mm, 0) + c * inv) % p
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
    del one
    return out


def buchberger(gens: Sequence[Poly], ring: Ring | None = None, effort: Effort | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Deterministic: the result depends only on the ideal and the order.
    Raises :class:`GroebnerTimeout` when the effort budget runs out.
    """
    gens = [g for g in gens if g]
    if ring is None:
        if not gens:
            raise PolyError("empty generator list needs an explicit ring")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingError("generators live in different rings")
    effort = effort or _unlimited()
    t0 = time.monotonic()
    lay = ring._lay
    gall, gnc, add = lay["gall"], lay["gnc"], lay["divadd"]

    def divides(a, b):
        return (b - a + add) & gall == gnc

    polys: list[Poly] = []
    leads: list[int] = []
    active: list[int] = []
    pairs: dict[tuple[int, int], int] = {}
    heap: list = []
    npairs = 0

    def reducers():
        return [_red_items[i] for i in active]

    _red_items: list = []

    def insert(h: Poly) -> None:
        nonlocal npairs
        h = h.monic()
        k = len(polys)
        polys.append(h)
        ld = h.lead
        leads.append(ld)
        _red_items.append((ld, [(m, c) for m, c in h.terms.items() if m != ld]))
        # Gebauer-Moeller update
        cand = [(g, ring.mono_lcm(leads[g], ld)) for g in active]
        kept = []
        for idx, (g1, l1) in enumerate(cand):
            if ring.mono_gcd_is_one(leads[g1], ld):
                kept.append((g1, l1, True))
                continue
            blocked = False
            for g2, l2 in cand[idx + 1:]:
                if divides(l2, l1):
                    blocked = True
                    break
            if not blocked:
                for g2, l2, _ in kept:
                    if divides(l2, l1):
                        blocked = True
                        break
            if not blocked:
                kept.append((g1, l1, False))
        for key in list(pairs):
            i, j = key
            lij = pairs[key]
            if divides(ld, lij) and ring.mono_lcm(leads[i], ld) != lij and ring.mono_lcm(leads[j], ld) != lij:
                del pairs[key]
        for g1, l1, coprime in kept:
            if not coprime:
                pairs[(g1, k)] = l1
                heapq.heappush(heap, (ring.mono_degree(l1), l1, g1, k))
                npairs += 1
        active[:] = [g for g in active if not divides(ld, leads[g])] + [k]

    for f in sorted(gens, key=lambda f: f.lead):
        r = reduce_terms(ring, f.terms, reducers())
        if r:
            insert(Poly(ring, r, _clean=True))
            if polys[-1].lead == ring.one:
                break
    zero_red = 0
    while heap and not (len(active) == 1 and leads[active[0]] == ring.one):
        _, l, i, j = heapq.heappop(heap)
        if pairs.get((i, j)) != l:
            continue
        del pairs[(i, j)]
        effort.spend()
        s = _spoly(ring, polys[i], polys[j], l)
        r = reduce_terms(ring, s, reducers())
        if r:
            insert(Poly(ring, r, _clean=True))
        else:
            zero_red += 1
    final = _interreduce(ring, [polys[i] for i in active])
    stats = {"pairs": npairs, "zero_reductions": zero_red, "reductions": effort.reductions,
             "elapsed_s": round(time.monotonic() - t0, 4)}
    return GroebnerBasis(ring, tuple(final), stats)


def _interreduce(ring: Ring, polys: list[Poly]) -> list[Poly]:
    polys = [g.monic() for g in polys if g]
    if any(g.lead == ring.one for g in polys):
        return [Poly.const(ring, 1)]
    # drop elements whose lead is divisible by another lead
    polys.sort(key=lambda g: g.lead)
    minimal: list[Poly] = []
    for g in polys:
        if not any(ring.mono_divides(h.lead, g.lead) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = _Basis(ring, minimal[:i] + minimal[i + 1:]).items
        ld = g.lead
        tail = {m: c for m, c in g.terms.items() if m != ld}
        r = reduce_terms(ring, tail, others)
        r[ld] = g.terms[ld]
        out.append(Poly(ring, r, _clean=True).monic())
    out.sort(key=lambda g: g.lead)
    return out


def is_groebner(polys: Sequence[Poly]) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    polys = [g for g in polys if g]
    if not polys:
        return True
    ring = polys[0].ring
    red = _Basis(ring, polys).items
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            l = ring.mono_lcm(polys[i].lead, polys[j].lead)
            if reduce_terms(ring, _spoly(ring, polys[i], polys[j], l), red):
                return False
    return True


def normal_form(f: Poly, gb: GroebnerBasis) -> Poly:
    return gb.normal_form(f)
