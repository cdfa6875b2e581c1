"""Sparse polynomial algebra over prime fields."""

from .groebner import Effort, GroebnerBasis, GroebnerTimeout, buchberger, is_groebner, normal_form
from .ideals import (
    Ideal,
    codimension,
    contains_ideal,
    frobenius_gb,
    frobenius_maximal,
    frobenius_power,
    ideals_equal,
    intersect,
    krull_dimension,
    maximal_ideal,
    member,
    monomial_ideal_contains,
    quotient,
    quotient_ideal,
    reduced,
)
from .lucas import binom_direct, binom_mod_p
from .polynomial import Poly, PolyError, divide_exact, format_poly, parse_poly
from .ring import GREVLEX, LEX, ExponentOverflow, MonomialOrder, Ring, RingError, is_prime

__all__ = [
    "Effort", "GroebnerBasis", "GroebnerTimeout", "buchberger", "is_groebner", "normal_form",
    "Ideal", "codimension", "contains_ideal", "frobenius_gb", "frobenius_maximal",
    "frobenius_power", "ideals_equal", "intersect", "krull_dimension", "maximal_ideal", "member",
    "monomial_ideal_contains", "quotient", "quotient_ideal", "reduced",
    "binom_direct", "binom_mod_p",
    "Poly", "PolyError", "divide_exact", "format_poly", "parse_poly",
    "GREVLEX", "LEX", "ExponentOverflow", "MonomialOrder", "Ring", "RingError", "is_prime",
]
