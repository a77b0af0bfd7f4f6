"""Exact rational and prime-field arithmetic, row reduction and dense polynomials.

Rationals are :class:`fractions.Fraction`; matrices are lists of rows.
Nothing here uses floating point except :func:`poly_roots_numeric`.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateAbscissa, ZeroPolynomial

Matrix = list[list[Fraction]]


def frac(x) -> Fraction:
    """Parse ``3``, ``"3"``, ``"-2/5"`` or a Fraction into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact data")
    return Fraction(x)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# row reduction

def rref(m: Sequence[Sequence]) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form over the rationals.

    Returns ``(matrix, rank, pivot_cols)``; the matrix keeps the input shape,
    with zero rows at the bottom.
    """
    rows = [[frac(x) for x in row] for row in m]
    if not rows:
        return [], 0, []
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("matrix is not rectangular")
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, r, pivots


def rref_mod(m: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], int, list[int]]:
    """Reduced row echelon form over the prime field F_p (entries in [0, p))."""
    rows = [[int(x) % p for x in row] for row in m]
    if not rows:
        return [], 0, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, r, pivots


def rank(m: Sequence[Sequence]) -> int:
    return rref(m)[1]


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)]


# ---------------------------------------------------------------------------
# primes

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % k for k in range(3, isqrt(n) + 1, 2))


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    k = max(n + 1, 2)
    while not is_prime(k):
        k += 1
    return k


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Dense univariate polynomial with rational coefficients, index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Polynomial":
        p = cls([lead])
        for r in roots:
            p = p * cls([-frac(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, complex) else 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Polynomial":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - other.degree, 1)
        lead = other.coeffs[-1]
        for k in range(len(rem) - 1, other.degree - 1, -1):
            c = rem[k] / lead
            if c:
                q[k - other.degree] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - other.degree + j] -= c * b
        return Polynomial(q), Polynomial(rem)

    def compose_affine(self, scale, shift=0) -> "Polynomial":
        """p(scale * t + shift)."""
        lin = Polynomial([shift, scale])
        out = Polynomial()
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def coefficient_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def to_text(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag.numerator}{mono}"
                else:
                    body = f"({format_rational(mag)}){mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self.to_text()})"

    def __str__(self):
        return self.to_text()


def _as_poly(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


T = Polynomial([0, 1])


def poly_interpolate(points: Sequence[tuple], degree: int) -> Polynomial:
    """Exact Lagrange interpolation through ``degree + 1`` points."""
    pts = [(frac(x), frac(y)) for x, y in points]
    if len(pts) != degree + 1:
        raise ValueError(f"need exactly {degree + 1} points, got {len(pts)}")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation abscissae must be distinct")
    out = Polynomial()
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        basis = Polynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial([-xj, 1])
                denom *= xi - xj
        out = out + basis * (yi / denom)
    return out


def poly_roots_numeric(p: Polynomial, polish: int = 3) -> list[complex]:
    """All complex roots (with multiplicity) via companion-matrix eigenvalues.

    A few Newton steps are applied to each root afterwards.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no finite root set")
    if p.degree < 1:
        raise ValueError("constant polynomial has no roots")
    c = np.array([float(x) for x in reversed(p.coeffs)], dtype=float)
    roots = np.roots(c).astype(complex)
    dc = np.polyder(c)
    for _ in range(polish):
        fx = np.polyval(c, roots)
        dfx = np.polyval(dc, roots)
        ok = np.abs(dfx) > 1e-300
        step = np.zeros_like(roots)
        step[ok] = fx[ok] / dfx[ok]
        cand = roots - step
        better = np.abs(np.polyval(c, cand)) <= np.abs(fx)
        roots = np.where(better, cand, roots)
    return sorted((complex(r) for r in roots), key=lambda z: (round(z.real, 9), round(z.imag, 9)))
