"""Binomial coefficients mod p: Lucas digit products and a Pascal oracle."""

from __future__ import annotations

import functools

from .ring import RingError, is_prime


def _need_prime(p: int) -> None:
    if not is_prime(p):
        raise RingError(f"{p} is not prime")


def _small_binom(a: int, b: int, p: int) -> int:
    if b < 0 or b > a:
        return 0
    num = den = 1
    for i in range(b):
        num = num * (a - i) % p
        den = den * (i + 1) % p
    return num * pow(den, p - 2, p) % p


def binom_mod_p(n: int, m: int, p: int) -> int:
    """binom(n, m) mod p as the product of binomials of base-p digits."""
    _need_prime(p)
    if n < 0 or m < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if m > n:
        return 0
    out = 1
    while n or m:
        a, b = n % p, m % p
        if b > a:
            return 0
        out = out * _small_binom(a, b, p) % p
        n //= p
        m //= p
    return out


@functools.lru_cache(maxsize=64)
def _pascal_rows(p: int, rows: int) -> tuple[tuple[int, ...], ...]:
    table = [(1,)]
    for _ in range(rows):
        prev = table[-1]
        row = [1] + [(prev[i] + prev[i + 1]) % p for i in range(len(prev) - 1)] + [1]
        table.append(tuple(row))
    return tuple(table)


def binom_direct(n: int, m: int, p: int) -> int:
    """binom(n, m) mod p from Pascal's recurrence (independent of Lucas)."""
    _need_prime(p)
    if n < 0 or m < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if m > n:
        return 0
    rows = 1 << max(n, 1).bit_length()
    return _pascal_rows(p, rows)[n][m]
