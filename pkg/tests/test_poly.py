import math
import random

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from fpure_lab.bei import bei, f_ij
from fpure_lab.families import complete, cycle, path
from fpure_lab.poly import (
    GREVLEX,
    LEX,
    Effort,
    ExponentOverflow,
    GroebnerTimeout,
    Ideal,
    Poly,
    PolyError,
    Ring,
    RingError,
    binom_direct,
    binom_mod_p,
    buchberger,
    codimension,
    contains_ideal,
    frobenius_gb,
    frobenius_maximal,
    frobenius_power,
    ideals_equal,
    intersect,
    is_groebner,
    is_prime,
    member,
    monomial_ideal_contains,
    normal_form,
    parse_poly,
    quotient,
    quotient_ideal,
)

R2 = Ring(2, ("x", "y"), LEX)


def P(ring, s):
    return parse_poly(ring, s)


def sympy_gb(gens, ring, order):
    syms = sp.symbols(ring.names)
    G = sp.groebner([sp.sympify(str(f)) for f in gens], *syms, modulus=ring.p, order=order)
    return {sp.Poly(f, *syms, modulus=ring.p).monic() for f in G.exprs}, syms


def as_sympy_set(basis, ring, syms):
    return {sp.Poly(sp.sympify(str(f)), *syms, modulus=ring.p).monic() for f in basis}


# arithmetic ---------------------------------------------------------------------------

def test_arith_examples():
    r = Ring.bei_ring(3, 2)
    f12 = f_ij(r, 1, 2)
    assert not (f12 + f12)
    for p in (2, 3, 5, 7):
        rp = Ring(p, ("x", "y"))
        assert (P(rp, "x + y") ** p) == P(rp, f"x^{p} + y^{p}")
    assert len((f_ij(r, 1, 2) * f_ij(r, 2, 3)).terms) == 4


@st.composite
def small_polys(draw, ring, max_terms=4, max_exp=3):
    k = draw(st.integers(0, max_terms))
    pairs = []
    for _ in range(k):
        e = tuple(draw(st.integers(0, max_exp)) for _ in range(ring.nvars))
        pairs.append((e, draw(st.integers(0, ring.p - 1))))
    return Poly.from_exps(ring, pairs)


R5 = Ring(5, ("a", "b", "c"))


@given(small_polys(R5), small_polys(R5), small_polys(R5))
def test_ring_axioms_against_sympy(f, g, h):
    syms = sp.symbols(R5.names)

    def S(q):
        return sp.Poly(sp.sympify(str(q)), *syms, modulus=5)

    assert S(f * g) == S(f) * S(g)
    assert S(f + g) == S(f) + S(g)
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert S(f ** 3) == S(f) ** 3


@given(small_polys(R5))
def test_parse_format_roundtrip(f):
    assert parse_poly(R5, str(f)) == f


def test_exact_divide_and_errors():
    r = Ring(3, ("x", "y"))
    f = P(r, "x^2*y + x*y^2")
    assert f.exact_divide(r.encode([1, 1])) == P(r, "x + y")
    with pytest.raises(PolyError):
        f.exact_divide(r.encode([2, 0]))
    with pytest.raises(RingError):
        Ring(4, ("x",))
    with pytest.raises(PolyError):
        parse_poly(r, "x + ")
    with pytest.raises((RingError, PolyError)):
        parse_poly(r, "z")


def test_exponent_overflow_is_detected():
    r = Ring(2, ("x",))
    with pytest.raises(ExponentOverflow):
        Poly.variable(r, "x") ** (1 << 40)


# Groebner bases ---------------------------------------------------------------------------

def test_buchberger_examples():
    gb = buchberger([P(R2, "x^2"), P(R2, "x*y")], R2)
    assert {str(g) for g in gb.basis} == {"x^2", "x*y"}
    r = Ring.bei_ring(3, 3)
    tri = bei(complete(3), 3)
    gb = tri.ideal.gb()
    assert len(gb) == 3 and is_groebner(list(tri.generators))
    assert buchberger([Poly.const(r, 1)], r).is_unit()


@pytest.mark.parametrize("g", [path(3), cycle(4), cycle(5), complete(4)], ids=["P3", "C4", "C5", "K4"])
@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("order,name", [(GREVLEX, "grevlex"), (LEX, "lex")])
def test_bei_gb_matches_sympy(g, p, order, name):
    J = bei(g, p, order)
    gb = J.ideal.gb()
    theirs, syms = sympy_gb(J.generators, J.ring, name)
    assert as_sympy_set(gb.basis, J.ring, syms) == theirs


@given(st.lists(small_polys(Ring(3, ("a", "b", "c"), GREVLEX), max_terms=3, max_exp=2), min_size=1, max_size=3))
def test_random_gb_matches_sympy(gens):
    ring = Ring(3, ("a", "b", "c"), GREVLEX)
    gens = [g for g in gens if g]
    if not gens:
        return
    gb = buchberger(gens, ring)
    theirs, syms = sympy_gb(gens, ring, "grevlex")
    assert as_sympy_set(gb.basis, ring, syms) == theirs


def test_reduced_gb_is_canonical_under_permutation():
    J = bei(cycle(5), 2)
    gens = list(J.generators)
    base = buchberger(gens, J.ring).strings()
    rng = random.Random(7)
    for _ in range(5):
        rng.shuffle(gens)
        assert buchberger(gens, J.ring).strings() == base


def test_budget_raises_timeout():
    J = bei(cycle(6), 3)
    with pytest.raises(GroebnerTimeout):
        buchberger(list(J.generators), J.ring, Effort(max_reductions=3))


# membership, intersection, quotient ----------------------------------------------------------

def test_membership_examples():
    r = Ring.bei_ring(3, 2)
    f12 = f_ij(r, 1, 2)
    assert not normal_form(f12, buchberger([f12], r))
    x1, y2 = Poly.variable(r, "x1"), Poly.variable(r, "y2")
    assert member(x1 * y2 * f12, Ideal(r, (f12,)))
    J = bei(path(3), 2)
    assert not member(f_ij(J.ring, 1, 3), J.ideal)


def test_intersect_examples():
    r = Ring(2, ("x", "y"))
    x, y = Poly.variable(r, "x"), Poly.variable(r, "y")
    assert ideals_equal(intersect(Ideal(r, (x,)), Ideal(r, (y,))), Ideal(r, (x * y,)))
    assert ideals_equal(intersect(Ideal(r, (x * x, y)), Ideal(r, (x,))), Ideal(r, (x * x, x * y)))
    rb = Ring.bei_ring(2, 3)
    f = f_ij(rb, 1, 2)
    assert ideals_equal(intersect(Ideal(rb, (f * f,)), Ideal(rb, (f,))), Ideal(rb, (f * f,)))


def test_intersect_matches_monomial_lcm():
    # monomial ideals intersect termwise by lcm
    r = Ring(3, ("x", "y", "z"))
    I = Ideal(r, (P(r, "x^2*y"), P(r, "z^3")))
    J = Ideal(r, (P(r, "x*y^2"), P(r, "y*z")))
    lcms = [P(r, s) for s in ("x^2*y^2", "x^2*y*z", "x*y^2*z^3", "y*z^3")]
    assert ideals_equal(intersect(I, J), Ideal(r, tuple(lcms)))


def test_quotient_examples():
    r = Ring(2, ("x", "y"))
    x = Poly.variable(r, "x")
    assert ideals_equal(quotient(Ideal(r, (x * x,)), x), Ideal(r, (x,)))
    rb = Ring.bei_ring(3, 2)
    fac, fad, fcd = f_ij(rb, 1, 2), f_ij(rb, 1, 3), f_ij(rb, 2, 3)
    assert ideals_equal(quotient(Ideal(rb, (fac * fac,)), fac), Ideal(rb, (fac,)))
    sq = frobenius_power(Ideal(rb, (fac, fad, fcd)), 2)
    lhs = quotient_ideal(sq, Ideal(rb, (fac, fcd)))
    rhs = sq + Ideal(rb, (fac * fad, fac * fcd, fad * fcd))
    assert ideals_equal(lhs, rhs)


@given(st.sampled_from([path(3), cycle(4), complete(3)]), st.sampled_from([2, 3]))
def test_quotient_laws(g, p):
    J = bei(g, p).ideal
    Jp = frobenius_power(J, p)
    C = quotient_ideal(Jp, J)
    assert contains_ideal(C, Jp)
    f = J.gens[0]
    assert quotient(J, f).gb().is_unit()


# Frobenius and monomial containment ---------------------------------------------------------

def test_frobenius_examples():
    r = Ring.bei_ring(2, 2)
    F = frobenius_power(Ideal(r, (f_ij(r, 1, 2),)), 2)
    assert F.gens[0] == P(r, "x1^2*y2^2 + x2^2*y1^2")
    r3 = Ring.bei_ring(3, 3)
    F = frobenius_power(Ideal(r3, (f_ij(r3, 1, 2), f_ij(r3, 2, 3))), 3)
    assert F.gens == (P(r3, "x1^3*y2^3 - x2^3*y1^3"), P(r3, "x2^3*y3^3 - x3^3*y2^3"))
    M = frobenius_maximal(Ring.bei_ring(2, 5))
    assert all(g.is_monomial() and g.degree() == 5 for g in M.gens) and len(M.gens) == 4
    with pytest.raises(PolyError):
        frobenius_power(Ideal(r, (f_ij(r, 1, 2),)), 3)


@given(small_polys(R5, max_terms=3, max_exp=2), small_polys(R5, max_terms=3, max_exp=2))
def test_frobenius_is_multiplicative(f, g):
    assert (f * g).frobenius(5) == f.frobenius(5) * g.frobenius(5)
    assert (f + g).frobenius(5) == f.frobenius(5) + g.frobenius(5)


@pytest.mark.parametrize("g", [path(4), cycle(5)], ids=["P4", "C5"])
@pytest.mark.parametrize("p", [2, 3])
def test_frobenius_of_gb_is_gb(g, p):
    J = bei(g, p)
    gbp = frobenius_gb(J.ideal.gb(), p)
    assert gbp.strings() == frobenius_power(J.ideal, p).gb().strings()


def test_monomial_ideal_contains_examples():
    r = Ring.bei_ring(2, 2)
    M = frobenius_maximal(r)
    assert monomial_ideal_contains(M, P(r, "x1^2*y2^2 + x2^2*y1^2")) == (True, None)
    ok, m = monomial_ideal_contains(M, P(r, "x1*y2"))
    assert not ok and r.mono_str(m) == "x1*y2"
    for p in (2, 3, 5):
        rp = Ring.bei_ring(3, p)
        t = (f_ij(rp, 1, 2) * f_ij(rp, 2, 3) * f_ij(rp, 1, 3)) ** (p - 1)
        assert monomial_ideal_contains(frobenius_maximal(rp), t)[0]


def test_codimension():
    assert codimension(bei(path(3), 2).ideal) == 2
    assert codimension(bei(complete(4), 2).ideal) == 3


# Lucas -------------------------------------------------------------------------------------

@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_lucas_matches_direct(p):
    for n in range(201):
        for m in range(n + 1):
            assert binom_mod_p(n, m, p) == binom_direct(n, m, p) == math.comb(n, m) % p


def test_lucas_examples():
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        assert binom_mod_p(2 * p - 2, p - 1, p) == 0
        for i in range(p):
            assert binom_mod_p(p - 1, i, p) == (-1) ** i % p
    assert binom_mod_p(5, 2, 2) == 0
    assert binom_mod_p(7, 9, 3) == 0
    assert is_prime(23) and not is_prime(1) and not is_prime(21)
