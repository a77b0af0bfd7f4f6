"""Closed forms for the classical families, used as independent oracles."""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .exact_math import Polynomial, T


def generic_regions(n: int, d: int) -> int:
    return sum(comb(n, k) for k in range(d + 1))


def generic_bounded(n: int, d: int) -> int:
    return sum((-1) ** (d - k) * comb(n, k) for k in range(d + 1))


def generic_chi(n: int, d: int) -> Polynomial:
    return Polynomial((-1) ** (d - j) * comb(n, d - j) for j in range(d + 1))


def braid_chi(n: int) -> Polynomial:
    return Polynomial.from_roots(range(n))


def catalan_chi(n: int) -> Polynomial:
    return Polynomial.from_roots([0] + list(range(n + 1, 2 * n)))


def shi_chi(n: int) -> Polynomial:
    return T * Polynomial([-n, 1]) ** (n - 1)


def linial_chi(n: int) -> Polynomial:
    """Postnikov's formula ``t / 2^n * sum_k C(n, k) (t - k)^(n - 1)``."""
    s = Polynomial()
    for k in range(n + 1):
        s = s + Polynomial([-k, 1]) ** (n - 1) * comb(n, k)
    return s * T * Fraction(1, 2 ** n)


def linial_regions(n: int) -> int:
    r = Fraction(sum(comb(n, k) * (k + 1) ** (n - 1) for k in range(n + 1)), 2 ** n)
    assert r.denominator == 1
    return int(r)


def catalan_regions(n: int) -> tuple[int, int]:
    from .combinatorics import catalan_number
    return factorial(n) * catalan_number(n), factorial(n) * catalan_number(n - 1)


def shi_regions(n: int) -> tuple[int, int]:
    return (n + 1) ** (n - 1), (n - 1) ** (n - 1)
