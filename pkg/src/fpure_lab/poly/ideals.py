"""Ideals: Groebner-backed membership, intersection and quotients by
elimination, Frobenius powers, monomial containment and dimension."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .groebner import Effort, GroebnerBasis, buchberger
from .polynomial import Poly, PolyError, divide_exact, parse_poly, _is_power_of
from .ring import MonomialOrder, Ring, RingError


@dataclass(frozen=True)
class Ideal:
    ring: Ring
    gens: tuple[Poly, ...]
    _gb: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        gens = tuple(g for g in self.gens if g)
        for g in gens:
            if g.ring != self.ring:
                raise RingError("generator from a different ring")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def of(cls, polys: Iterable[Poly], ring: Ring | None = None) -> "Ideal":
        polys = list(polys)
        if ring is None:
            if not polys:
                raise PolyError("empty ideal needs a ring")
            ring = polys[0].ring
        return cls(ring, tuple(polys))

    def gb(self, effort: Effort | None = None) -> GroebnerBasis:
        if "gb" not in self._gb:
            self._gb["gb"] = buchberger(self.gens, self.ring, effort)
        return self._gb["gb"]

    def is_zero(self) -> bool:
        return not self.gens

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingError("ring mismatch")
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, tuple(f * g for f in self.gens for g in other.gens))

    def contains(self, f: Poly, effort: Effort | None = None) -> bool:
        return member(f, self, effort)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def to_json(self) -> str:
        return json.dumps({"ring": self.ring.describe(), "gens": [str(g) for g in self.gens]})

    @classmethod
    def from_json(cls, text: str, ring: Ring | None = None) -> "Ideal":
        d = json.loads(text)
        meta = d["ring"]
        if ring is None:
            ring = Ring(meta["p"], tuple(meta["vars"]), _order(meta.get("order", "grevlex")))
        return cls(ring, tuple(parse_poly(ring, s) for s in d["gens"]))


def _order(name: str) -> MonomialOrder:
    from .ring import order_from_name

    return order_from_name(name)


def member(f: Poly, I: Ideal, effort: Effort | None = None) -> bool:
    if not f:
        return True
    if I.is_zero():
        return False
    return I.gb(effort).contains(f)


def contains_ideal(I: Ideal, J: Ideal, effort: Effort | None = None) -> bool:
    """J is contained in I."""
    if not J.gens:
        return True
    if I.is_zero():
        return False
    gb = I.gb(effort)
    return all(gb.contains(g) for g in J.gens)


def ideals_equal(I: Ideal, J: Ideal, effort: Effort | None = None) -> bool:
    return contains_ideal(I, J, effort) and contains_ideal(J, I, effort)


def reduced(I: Ideal, effort: Effort | None = None) -> Ideal:
    """Same ideal, generated by its reduced Groebner basis."""
    if I.is_zero():
        return I
    return Ideal(I.ring, I.gb(effort).basis)


def intersect(I: Ideal, J: Ideal, effort: Effort | None = None) -> Ideal:
    """I cap J as the t-free part of GB(t*I + (1-t)*J) under an elimination order."""
    if I.ring != J.ring:
        raise RingError("ring mismatch")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, ())
    big = ring.extended("t")
    emb = list(range(1, big.nvars))
    t = Poly.variable(big, big.names[0])
    one_minus_t = Poly.const(big, 1) - t
    gens = [t * f.convert(big, emb) for f in I.gens] + [one_minus_t * g.convert(big, emb) for g in J.gens]
    gb = buchberger(gens, big, effort)
    back = [None] + list(range(ring.nvars))
    out = []
    for g in gb.basis:
        if big.decode(g.lead)[0] == 0:
            out.append(g.convert(ring, back))
    return reduced(Ideal(ring, tuple(out)), effort)


def quotient(I: Ideal, f: Poly, effort: Effort | None = None) -> Ideal:
    """I : f, from generators of I cap (f) divided by f."""
    if not f:
        raise PolyError("quotient by the zero polynomial")
    ring = I.ring
    if I.is_zero():
        return Ideal(ring, ())
    if member(f, I, effort):
        return Ideal(ring, (Poly.const(ring, 1),))
    K = intersect(I, Ideal(ring, (f,)), effort)
    return reduced(Ideal(ring, tuple(divide_exact(g, f) for g in K.gens)), effort)


def quotient_ideal(I: Ideal, J: Ideal, effort: Effort | None = None) -> Ideal:
    """I : J as the intersection of I : f over generators f of J."""
    if J.is_zero():
        raise PolyError("quotient by the zero ideal")
    result: Optional[Ideal] = None
    for f in J.gens:
        Q = quotient(I, f, effort)
        result = Q if result is None else intersect(result, Q, effort)
    return result


def frobenius_power(I: Ideal, q: int) -> Ideal:
    """I^[q], generated by the q-th powers of the generators (q a power of p)."""
    if not _is_power_of(q, I.ring.p):
        raise PolyError(f"{q} is not a power of the characteristic {I.ring.p}")
    return Ideal(I.ring, tuple(g.frobenius(q) for g in I.gens))


def frobenius_gb(gb: GroebnerBasis, q: int) -> GroebnerBasis:
    """GB of I^[q] from a GB of I: Frobenius is flat, leads map to q-th powers."""
    basis = tuple(g.frobenius(q) for g in gb.basis)
    return GroebnerBasis(gb.ring, basis, {"frobenius_of": len(basis)})


def maximal_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, tuple(Poly.variable(ring, v) for v in ring.names))


def frobenius_maximal(ring: Ring, q: int | None = None) -> Ideal:
    q = ring.p if q is None else q
    return frobenius_power(maximal_ideal(ring), q)


def monomial_ideal_contains(M: Ideal, f: Poly) -> tuple[bool, Optional[int]]:
    """Whether every term of f lies in the monomial ideal M.

    Returns ``(True, None)`` or ``(False, first_violating_monomial)`` with
    terms scanned from the top of the order.
    """
    if not M.is_monomial():
        raise PolyError("ideal is not generated by monomials")
    ring = M.ring
    gens = [g.lead for g in M.gens]
    for m, _ in f.sorted_terms():
        if not any(ring.mono_divides(g, m) for g in gens):
            return False, m
    return True, None


def outside_frobenius_max(ring: Ring, m: int, q: int) -> bool:
    """True when the monomial m is not in m^[q], i.e. all exponents < q."""
    return all(e < q for e in ring.decode(m))


# dimension ---------------------------------------------------------------------------

def codimension(I: Ideal, effort: Effort | None = None) -> int:
    """Height of I: the least number of variables meeting the support of
    every leading monomial of a Groebner basis."""
    ring = I.ring
    if I.is_zero():
        return 0
    gb = I.gb(effort)
    if gb.is_unit():
        return ring.nvars + 1  # convention: the unit ideal has no dimension
    supports = []
    for ld in gb.leads():
        s = frozenset(i for i, e in enumerate(ring.decode(ld)) if e)
        supports.append(s)
    # keep minimal supports only
    supports = sorted(set(supports), key=len)
    mins = [s for i, s in enumerate(supports) if not any(t < s for t in supports[:i])]
    best = [len(ring.names)]

    def rec(chosen: frozenset, k: int):
        if k >= best[0]:
            return
        for s in mins:
            if not (s & chosen):
                break
        else:
            best[0] = k
            return
        for v in sorted(s):
            rec(chosen | {v}, k + 1)

    rec(frozenset(), 0)
    return best[0]


def krull_dimension(I: Ideal, effort: Effort | None = None) -> int:
    return I.ring.nvars - codimension(I, effort)
