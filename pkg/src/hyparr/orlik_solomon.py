"""Orlik-Solomon algebra as a graded quotient of the exterior algebra on the hyperplanes.

Elements of the exterior algebra are dicts mapping increasing index tuples to
rational coefficients. All linear algebra is exact.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from .arrangement import Arrangement
from .errors import BudgetExceeded, CrossCheckFailed
from .exact_math import Polynomial, rref
from .poset import chi_via_mobius

DEFAULT_MAX_HYPERPLANES = 12

Monomial = tuple[int, ...]
Element = dict[Monomial, Fraction]


def normalize(factors: Iterable[int]) -> tuple[int, Optional[Monomial]]:
    """Sort a product of generators, returning ``(sign, monomial)``; a repeat gives ``(0, None)``."""
    f = list(factors)
    if len(set(f)) != len(f):
        return 0, None
    inversions = sum(1 for a, b in combinations(f, 2) if a > b)
    return (-1) ** inversions, tuple(sorted(f))


def element(terms: Iterable[tuple[Iterable[int], object]]) -> Element:
    """Build an element from ``(factors, coefficient)`` pairs, applying anticommutativity."""
    out: Element = {}
    for factors, c in terms:
        s, m = normalize(factors)
        if s:
            out[m] = out.get(m, Fraction(0)) + s * Fraction(c)
    return {m: c for m, c in out.items() if c != 0}


def wedge(a: Element, b: Element) -> Element:
    return element((ma + mb, ca * cb) for ma, ca in a.items() for mb, cb in b.items())


def boundary(m: Monomial) -> Element:
    """``sum_{j=1..k} (-1)^j`` times ``m`` with its j-th factor removed."""
    return element((m[: j - 1] + m[j:], (-1) ** j) for j in range(1, len(m) + 1))


def _is_empty(A: Arrangement, S: Monomial) -> bool:
    aug = rref([A[i].row() for i in S])
    return bool(aug[2]) and aug[2][-1] == A.dim


def _is_dependent(A: Arrangement, S: Monomial) -> bool:
    return rref([A[i].normal for i in S])[1] < len(S)


def ideal_generators(A: Arrangement, max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> list[Element]:
    """Monomials of subsets with empty intersection; boundaries of the other dependent subsets.

    Every qualifying subset contributes, not only the minimal ones.
    """
    n = len(A)
    if n > max_hyperplanes:
        raise BudgetExceeded(f"{n} hyperplanes exceeds Orlik-Solomon budget {max_hyperplanes}")
    gens = []
    for k in range(2, n + 1):
        for S in combinations(range(n), k):
            if _is_empty(A, S):
                gens.append({S: Fraction(1)})
            elif _is_dependent(A, S):
                gens.append(boundary(S))
    return gens


class _Echelon:
    """Incrementally row-reduced span of sparse rows over Q."""

    def __init__(self):
        self.pivots: dict[Monomial, Element] = {}

    def reduce(self, row: Element) -> Element:
        row = dict(row)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            f = row[lead]
            for m, c in piv.items():
                v = row.get(m, Fraction(0)) - f * c
                if v:
                    row[m] = v
                else:
                    row.pop(m, None)
        return row

    def add(self, row: Element) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        c = row[lead]
        self.pivots[lead] = {m: v / c for m, v in row.items()}
        return True

    def __len__(self):
        return len(self.pivots)


class OrlikSolomon:
    """Graded pieces of the ideal, degree by degree.

    The degree-k part of the ideal is spanned by products ``e_T * g`` with
    ``|T| + deg g = k``; it equals ``E_1 * I_(k-1)`` plus the degree-k
    generators, which is how it is built.
    """

    def __init__(self, A: Arrangement, max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES):
        self.arrangement = A
        self.n = len(A)
        self.generators = ideal_generators(A, max_hyperplanes)
        by_degree: dict[int, list[Element]] = {}
        for g in self.generators:
            by_degree.setdefault(len(next(iter(g))), []).append(g)
        self.ideal: list[_Echelon] = []
        prev: list[Element] = []
        for k in range(self.n + 1):
            ech = _Echelon()
            full = comb(self.n, k)
            for b in prev:
                for i in range(self.n):
                    if len(ech) == full:
                        break
                    ech.add(wedge({(i,): Fraction(1)}, b))
            for g in by_degree.get(k, []):
                if len(ech) == full:
                    break
                ech.add(g)
            self.ideal.append(ech)
            prev = list(ech.pivots.values())

    def graded_dimensions(self) -> list[int]:
        return [comb(self.n, k) - len(self.ideal[k]) for k in range(self.n + 1)]

    def in_ideal(self, x: Element) -> bool:
        by_deg: dict[int, Element] = {}
        for m, c in x.items():
            by_deg.setdefault(len(m), {})[m] = c
        return all(not self.ideal[k].reduce(part) for k, part in by_deg.items())

    def basis(self, k: int) -> list[Monomial]:
        """Standard monomials of degree k (those that are not pivots of the ideal)."""
        return [m for m in combinations(range(self.n), k) if m not in self.ideal[k].pivots]


def graded_dimensions(A: Arrangement, max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> list[int]:
    """``dim OS(A)_k`` for ``k = 0..n``, with trailing zeros trimmed (entry 0 is kept)."""
    dims = OrlikSolomon(A, max_hyperplanes).graded_dimensions()
    while len(dims) > 1 and dims[-1] == 0:
        dims.pop()
    return dims


def hilbert_from_chi(chi: Polynomial, d: int) -> Polynomial:
    """``x^d chi(-1/x)``: the coefficient of ``x^i`` is ``(-1)^i`` times that of ``t^(d-i)``."""
    return Polynomial((-1) ** i * chi.coefficient(d - i) for i in range(d + 1))


def hilbert_polynomial(A: Arrangement, max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> Polynomial:
    """Hilbert polynomial from the graded dimensions, checked against ``x^d chi(-1/x)``."""
    hilb = Polynomial(graded_dimensions(A, max_hyperplanes))
    expected = hilbert_from_chi(chi_via_mobius(A), A.dim)
    if hilb != expected:
        raise CrossCheckFailed(f"Hilbert polynomial {hilb} differs from x^d chi(-1/x) = {expected}")
    return hilb
