"""Polynomial rings over Z/pZ with packed monomials.

A monomial is a single Python int.  The exponent vector is split into
fixed-width fields, and the field layout depends on the monomial order so
that plain integer comparison *is* the order:

* lex:      e_0 | e_1 | ... | e_{N-1}                 (most significant first)
* grevlex:  deg | E-e_{N-1} | ... | E-e_0
* elim(k):  deg(A) | E-e_{k-1} .. E-e_0 | deg(B) | E-e_{N-1} .. E-e_k

with A the first k variables, B the rest and ``E = 2**(W-1) - 1``.  The
complemented fields make reverse-lex tie breaking an ascending integer
comparison.  Every field keeps its top bit free as a guard, so products and
divisibility tests run on whole ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

WIDTH = 16
_E = (1 << (WIDTH - 1)) - 1
_MASK = (1 << WIDTH) - 1
_GUARD = 1 << (WIDTH - 1)


class RingError(ValueError):
    pass


class ExponentOverflow(ArithmeticError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grevlex`` or ``elim`` (first ``split`` variables eliminated)."""

    kind: str = "grevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise RingError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.split < 1:
            raise RingError("elimination order needs split >= 1")

    def __str__(self):
        return f"elim({self.split})" if self.kind == "elim" else self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def order_from_name(name: str) -> MonomialOrder:
    name = name.strip().lower()
    if name.startswith("elim"):
        k = int(name[name.index("(") + 1:name.index(")")])
        return MonomialOrder("elim", k)
    return MonomialOrder(name)


@dataclass(frozen=True)
class Ring:
    p: int
    names: tuple[str, ...]
    order: MonomialOrder = GREVLEX
    # derived layout, excluded from equality
    _lay: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingError(f"{self.p} is not prime")
        if len(self.names) < 1:
            raise RingError("ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise RingError("duplicate variable names")
        if self.order.kind == "elim" and self.order.split >= len(self.names):
            raise RingError("elimination split must leave variables")
        object.__setattr__(self, "_lay", _layout(len(self.names), self.order))

    # construction helpers
    @staticmethod
    def bei_ring(n: int, p: int, order: MonomialOrder = GREVLEX, with_t: bool = False) -> "Ring":
        names = tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"y{i}" for i in range(1, n + 1))
        if with_t:
            names = ("t",) + names
        return Ring(p, names, order)

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.p, self.names, order)

    def extended(self, name: str = "t") -> "Ring":
        """Ring with a new first variable and the matching elimination order."""
        base = self.names
        while name in base:
            name = name + "_"
        return Ring(self.p, (name,) + base, MonomialOrder("elim", 1))

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def n(self) -> int:
        """Vertex count when the ring is a binomial-edge-ideal ring."""
        k = self.nvars - (1 if self.names[0] == "t" else 0)
        return k // 2

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise RingError(f"no variable {name!r}") from None

    # monomial encoding
    @property
    def one(self) -> int:
        return self._lay["one"]

    def encode(self, exps: Sequence[int]) -> int:
        lay = self._lay
        if len(exps) != self.nvars:
            raise RingError("exponent vector has wrong length")
        m = lay["one"]
        for e, (sh, comp) in zip(exps, lay["var"]):
            if e < 0:
                raise RingError("negative exponent")
            m += (-e if comp else e) << sh
        for sh, idx in lay["deg"]:
            d = sum(exps[i] for i in idx)
            if d > _E:
                raise ExponentOverflow("degree exceeds field width")
            m += d << sh
        if any(e > _E for e in exps) or m & lay["gall"]:
            raise ExponentOverflow("exponent or degree exceeds field width")
        return m

    def decode(self, m: int) -> tuple[int, ...]:
        out = []
        for sh, comp in self._lay["var"]:
            v = (m >> sh) & _MASK
            out.append(_E - v if comp else v)
        return tuple(out)

    def var(self, i: int) -> int:
        e = [0] * self.nvars
        e[i] = 1
        return self.encode(e)

    def mono_mul(self, a: int, b: int) -> int:
        m = a + b - self._lay["one"]
        if m & self._lay["gall"]:
            raise ExponentOverflow("monomial product overflows")
        return m

    def mono_divides(self, a: int, b: int) -> bool:
        """Does a divide b."""
        x = b - a + self._lay["divadd"]
        return x & self._lay["gall"] == self._lay["gnc"]

    def mono_div(self, b: int, a: int) -> int:
        return b - a + self._lay["one"]

    def mono_pow(self, a: int, k: int) -> int:
        one = self._lay["one"]
        m = k * (a - one) + one
        if k and (m & self._lay["gall"] or any(e * k > _E for e in self.decode(a))):
            raise ExponentOverflow("monomial power overflows")
        return m

    def mono_lcm(self, a: int, b: int) -> int:
        return self.encode([max(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def mono_gcd_is_one(self, a: int, b: int) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(self.decode(a), self.decode(b)))

    def mono_degree(self, a: int) -> int:
        return sum(self.decode(a))

    def mono_str(self, m: int) -> str:
        parts = []
        for name, e in zip(self.names, self.decode(m)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def describe(self) -> dict:
        return {"p": self.p, "n": self.n, "vars": list(self.names), "order": str(self.order)}


def _layout(N: int, order: MonomialOrder) -> dict:
    # fields listed most significant first: ("var", i, complemented) or ("deg", indices)
    if order.kind == "lex":
        fields = [("var", i, False) for i in range(N)]
    elif order.kind == "grevlex":
        fields = [("deg", tuple(range(N)))] + [("var", i, True) for i in reversed(range(N))]
    else:
        k = order.split
        fields = [("deg", tuple(range(k)))] + [("var", i, True) for i in reversed(range(k))]
        fields += [("deg", tuple(range(k, N)))] + [("var", i, True) for i in reversed(range(k, N))]
    nf = len(fields)
    var = [None] * N
    deg = []
    one = gnc = gc = 0
    for pos, f in enumerate(fields):
        sh = (nf - 1 - pos) * WIDTH
        if f[0] == "var":
            _, i, comp = f
            var[i] = (sh, comp)
            if comp:
                one += _E << sh
                gc |= _GUARD << sh
            else:
                gnc |= _GUARD << sh
        else:
            deg.append((sh, f[1]))
            gnc |= _GUARD << sh
    return {"var": var, "deg": deg, "one": one, "gnc": gnc, "gc": gc,
            "gall": gnc | gc, "divadd": one + gnc}
