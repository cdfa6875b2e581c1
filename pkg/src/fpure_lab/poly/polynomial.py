"""Sparse polynomials over Z/pZ: arithmetic, display and parsing."""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence, Union

from .ring import ExponentOverflow, Ring, RingError, is_prime


class PolyError(ValueError):
    pass


class Poly:
    """Immutable polynomial; ``terms`` maps packed monomial -> coefficient (nonzero mod p)."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[int, int] | None = None, *, _clean: bool = False):
        self.ring = ring
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            p = ring.p
            self.terms = {m: c % p for m, c in terms.items() if c % p}
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, ring: Ring) -> "Poly":
        return cls(ring, {}, _clean=True)

    @classmethod
    def const(cls, ring: Ring, c: int) -> "Poly":
        return cls(ring, {ring.one: c})

    @classmethod
    def monomial(cls, ring: Ring, exps: Sequence[int], c: int = 1) -> "Poly":
        return cls(ring, {ring.encode(exps): c})

    @classmethod
    def variable(cls, ring: Ring, name: str) -> "Poly":
        return cls(ring, {ring.var(ring.index(name)): 1}, _clean=True)

    @classmethod
    def from_exps(cls, ring: Ring, pairs: Iterable[tuple[Sequence[int], int]]) -> "Poly":
        out: dict[int, int] = {}
        for e, c in pairs:
            m = ring.encode(e)
            out[m] = out.get(m, 0) + c
        return cls(ring, out)

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def lead(self) -> int:
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        return max(self.terms)

    @property
    def lead_coeff(self) -> int:
        return self.terms[self.lead]

    def sorted_terms(self) -> list[tuple[int, int]]:
        return sorted(self.terms.items(), reverse=True)

    def exps_terms(self) -> list[tuple[tuple[int, ...], int]]:
        dec = self.ring.decode
        return [(dec(m), c) for m, c in self.sorted_terms()]

    def degree(self) -> int:
        return max((self.ring.mono_degree(m) for m in self.terms), default=-1)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_homogeneous(self) -> bool:
        return len({self.ring.mono_degree(m) for m in self.terms}) <= 1

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        p = self.ring.p
        inv = pow(self.lead_coeff, p - 2, p)
        if inv == 1:
            return self
        return Poly(self.ring, {m: c * inv % p for m, c in self.terms.items()}, _clean=True)

    # arithmetic
    def _check(self, other: "Poly") -> None:
        if other.ring != self.ring:
            raise RingError("ring mismatch")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, int):
            return Poly.const(self.ring, other)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        p = self.ring.p
        return Poly(self.ring, {m: p - c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other) -> "Poly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def scale(self, c: int) -> "Poly":
        p = self.ring.p
        c %= p
        if c == 0:
            return Poly.zero(self.ring)
        return Poly(self.ring, {m: v * c % p for m, v in self.terms.items()}, _clean=True)

    def mul_term(self, mono: int, c: int = 1) -> "Poly":
        """Multiply by c * mono (mono packed)."""
        r = self.ring
        p = r.p
        c %= p
        if c == 0:
            return Poly.zero(r)
        shift = mono - r.one
        gall = r._lay["gall"]
        out = {}
        for m, v in self.terms.items():
            mm = m + shift
            if mm & gall:
                raise ExponentOverflow("exponent overflow in product")
            out[mm] = v * c % p
        return Poly(r, out, _clean=True)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        r = self.ring
        p = r.p
        one = r.one
        gall = r._lay["gall"]
        a, b = (self, other) if len(self) <= len(other) else (other, self)
        out: dict[int, int] = {}
        get = out.get
        for m1, c1 in a.terms.items():
            sh = m1 - one
            for m2, c2 in b.terms.items():
                mm = m2 + sh
                out[mm] = (get(mm, 0) + c1 * c2) % p
        for mm in list(out):
            if mm & gall:
                raise ExponentOverflow("exponent overflow in product")
            if not out[mm]:
                del out[mm]
        return Poly(r, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise PolyError("exponent must be a nonnegative integer")
        if k == 0:
            return Poly.const(self.ring, 1)
        if _is_power_of(k, self.ring.p):
            return self.frobenius(k)
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def frobenius(self, q: int) -> "Poly":
        """f^q for q a power of p: termwise, since Frobenius is additive."""
        r = self.ring
        if not _is_power_of(q, r.p):
            raise PolyError(f"{q} is not a power of {r.p}")
        p = r.p
        return Poly(r, {r.mono_pow(m, q): pow(c, q, p) for m, c in self.terms.items()}, _clean=True)

    def exact_divide(self, mono: int | "Poly") -> "Poly":
        """Divide by a monomial (packed int or one-term Poly); every term must be divisible."""
        r = self.ring
        if isinstance(mono, Poly):
            if not mono.is_monomial():
                return divide_exact(self, mono)
            (mono, c), = mono.terms.items()
        else:
            c = 1
        p = r.p
        inv = pow(c, p - 2, p)
        out = {}
        for m, v in self.terms.items():
            if not r.mono_divides(mono, m):
                raise PolyError("inexact division by monomial")
            out[r.mono_div(m, mono)] = v * inv % p
        return Poly(r, out, _clean=True)

    # comparison and hashing
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == Poly.const(self.ring, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        return format_poly(self)

    def convert(self, ring: Ring, mapping: Sequence[int] | None = None) -> "Poly":
        """Re-encode into ``ring``; ``mapping[i]`` is the target index of variable i."""
        src = self.ring
        if mapping is None:
            if src.names != ring.names:
                raise RingError("rings differ in variables; pass a mapping")
            mapping = range(src.nvars)
        out: dict[int, int] = {}
        for m, c in self.terms.items():
            e = src.decode(m)
            tgt = [0] * ring.nvars
            for i, x in enumerate(e):
                if x:
                    j = mapping[i]
                    if j is None:
                        raise RingError("variable has no image")
                    tgt[j] += x
            key = ring.encode(tgt)
            out[key] = (out.get(key, 0) + c) % ring.p
        if ring.p != src.p:
            raise RingError("characteristic mismatch")
        return Poly(ring, out)


def _is_power_of(q: int, p: int) -> bool:
    if q < 1:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def divide_exact(f: Poly, g: Poly) -> Poly:
    """Quotient f / g, raising unless g divides f exactly."""
    if not g:
        raise PolyError("division by zero polynomial")
    r = f.ring
    p = r.p
    glead = g.lead
    ginv = pow(g.terms[glead], p - 2, p)
    gtail = [(m, c) for m, c in g.terms.items() if m != glead]
    work = dict(f.terms)
    quo: dict[int, int] = {}
    while work:
        m = max(work)
        if not r.mono_divides(glead, m):
            raise PolyError("polynomial division is not exact")
        c = work.pop(m) * ginv % p
        q = r.mono_div(m, glead)
        quo[q] = c
        sh = q - r.one
        for t, ct in gtail:
            mm = t + sh
            v = (work.get(mm, 0) - c * ct) % p
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return Poly(r, quo, _clean=True)


# display / parse -----------------------------------------------------------------

def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    r = f.ring
    parts = []
    for m, c in f.sorted_terms():
        ms = r.mono_str(m)
        if ms == "1":
            parts.append(str(c))
        elif c == 1:
            parts.append(ms)
        else:
            parts.append(f"{c}*{ms}")
    return " + ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()]))")


def parse_poly(ring: Ring, text: str) -> Poly:
    """Parse sums/differences/products/powers of variables and integers."""
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise PolyError(f"cannot parse polynomial near {text[pos:pos + 10]!r}")
        pos = mt.end()
        num, name, op = mt.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif name is not None:
            toks.append(("var", name))
        elif op is not None:
            toks.append(("op", "^" if op == "**" else op))
    if not toks:
        raise PolyError("empty polynomial")
    i = 0

    def peek():
        return toks[i] if i < len(toks) else (None, None)

    def take():
        nonlocal i
        i += 1
        return toks[i - 1]

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        val = term().scale(sign)
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            val = val + t if op == "+" else val - t
        return val

    def term():
        val = power()
        while peek() == ("op", "*") or peek()[0] in ("var", "num") or peek() == ("op", "("):
            if peek() == ("op", "*"):
                take()
            val = val * power()
        return val

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, k = take()
            if kind != "num":
                raise PolyError("exponent must be an integer")
            base = base ** k
        return base

    def atom():
        kind, v = take() if i < len(toks) else (None, None)
        if kind == "num":
            return Poly.const(ring, v)
        if kind == "var":
            try:
                return Poly.variable(ring, v)
            except RingError:
                raise PolyError(f"unknown variable {v!r}") from None
        if (kind, v) == ("op", "("):
            val = expr()
            if take() != ("op", ")"):
                raise PolyError("missing ')'")
            return val
        if (kind, v) == ("op", "-"):
            return -atom()
        raise PolyError("unexpected end or token in polynomial")

    out = expr()
    if i != len(toks):
        raise PolyError("trailing input in polynomial")
    return out


PolyLike = Union[Poly, str]


def as_poly(ring: Ring, f: PolyLike) -> Poly:
    return parse_poly(ring, f) if isinstance(f, str) else f
