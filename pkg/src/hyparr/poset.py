"""Intersection posets, Möbius values and the characteristic polynomial.

The characteristic polynomial is available three ways: from the Möbius
function of the poset, by deletion/contraction, and by counting points of the
complement over prime fields followed by interpolation.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Callable, Optional

import numpy as np

from .arrangement import Arrangement, contract, delete
from .errors import BudgetExceeded, DimensionTooLarge, NonIntegerCoefficients
from .exact_math import Polynomial, lcm, next_prime, poly_interpolate, rref, rref_mod

DEFAULT_MAX_POINTS = 10 ** 7


@dataclass
class Flat:
    """A nonempty intersection of hyperplanes.

    ``system`` is the RREF of the augmented defining system (zero rows dropped)
    and doubles as the canonical key. ``generators`` is one witness subset whose
    intersection is the flat; ``hyperplanes`` is the set of all hyperplanes
    containing it, stored as a bitmask.
    """

    system: tuple
    dim: int
    generators: frozenset
    hyperplanes: int

    def contains_hyperplane(self, i: int) -> bool:
        return bool(self.hyperplanes >> i & 1)

    def hyperplane_set(self) -> frozenset:
        return frozenset(i for i in range(self.hyperplanes.bit_length()) if self.hyperplanes >> i & 1)


class IntersectionPoset:
    """Flats ordered by reverse inclusion; element 0 is the ambient space.

    ``X <= Y`` iff ``Y`` is contained in ``X``, which holds iff every hyperplane
    containing ``X`` also contains ``Y``.
    """

    def __init__(self, dim: int, flats: list[Flat], field: Optional[int] = None):
        self.dim = dim
        self.field = field
        # decreasing dimension, so every Y < X precedes X
        self.flats = sorted(flats, key=lambda f: (-f.dim, f.system))
        self.index = {f.system: i for i, f in enumerate(self.flats)}
        self._mobius: Optional[list[int]] = None

    def __len__(self) -> int:
        return len(self.flats)

    def leq(self, i: int, j: int) -> bool:
        a, b = self.flats[i].hyperplanes, self.flats[j].hyperplanes
        return a & b == a

    def less(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    @property
    def mobius(self) -> list[int]:
        if self._mobius is None:
            self._mobius = mobius(self)
        return self._mobius

    def mobius_of(self, system: tuple) -> int:
        i = self.index.get(system)
        return 0 if i is None else self.mobius[i]

    def counts_by_dim(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f in self.flats:
            out[f.dim] = out.get(f.dim, 0) + 1
        return out

    def signature(self) -> frozenset:
        """``{(containing hyperplanes, dim)}``; equal signatures mean isomorphic labelled posets."""
        return frozenset((f.hyperplanes, f.dim) for f in self.flats)

    def chi(self) -> Polynomial:
        coeffs = [0] * (self.dim + 1)
        for f, m in zip(self.flats, self.mobius):
            coeffs[f.dim] += m
        return Polynomial(coeffs)


# ---------------------------------------------------------------------------
# construction

def integral_rows(A: Arrangement) -> list[list[int]]:
    """Primitive integer ``[v | a]`` rows, each hyperplane scaled by its common denominator."""
    out = []
    for h in A:
        row = h.row()
        if not all(isinstance(c, Fraction) for c in row):
            raise NonIntegerCoefficients(f"cannot scale {h.label()} to integers")
        den = reduce(lcm, (c.denominator for c in row), 1)
        ints = [int(c * den) for c in row]
        g = reduce(gcd, ints, 0) or 1
        out.append([c // g for c in ints])
    return out


def _closure(rows: list[list], d: int, reducer: Callable) -> list[Flat]:
    ambient = Flat((), d, frozenset(), 0)
    flats = {(): ambient}
    queue = [ambient]
    for X in queue:
        for i, row in enumerate(rows):
            if X.hyperplanes >> i & 1:
                continue
            m, r, piv = reducer(list(X.system) + [row])
            if piv and piv[-1] == d:
                continue  # empty intersection
            key = tuple(tuple(x) for x in m[:r])
            if key == X.system:
                X.hyperplanes |= 1 << i
                continue
            Y = flats.get(key)
            if Y is None:
                Y = Flat(key, d - r, X.generators | {i}, X.hyperplanes | (1 << i))
                flats[key] = Y
                queue.append(Y)
            else:
                Y.hyperplanes |= X.hyperplanes | (1 << i)
    return list(flats.values())


def build_poset(A: Arrangement, p: Optional[int] = None) -> IntersectionPoset:
    """Intersection poset over Q, or over F_p when ``p`` is given.

    Built by closure: starting from the ambient space, intersect every known
    flat with every single hyperplane until no new flat appears.
    """
    if p is None:
        rows = [h.row() for h in A]
        return IntersectionPoset(A.dim, _closure(rows, A.dim, rref))
    rows = [[c % p for c in r] for r in integral_rows(A)]
    if any(not any(r[:-1]) for r in rows):
        raise ValueError(f"a hyperplane degenerates modulo {p}")
    return IntersectionPoset(A.dim, _closure(rows, A.dim, lambda m: rref_mod(m, p)), field=p)


def mobius(P: IntersectionPoset) -> list[int]:
    """Möbius values aligned with ``P.flats``: 1 at the bottom, vanishing sums above."""
    masks = [f.hyperplanes for f in P.flats]
    mu: list[int] = []
    for i, mx in enumerate(masks):
        if i == 0:
            mu.append(1)
            continue
        s = 0
        for j in range(i):
            my = masks[j]
            if my & mx == my and my != mx:
                s += mu[j]
        mu.append(-s)
    return mu


# ---------------------------------------------------------------------------
# characteristic polynomial, three ways

def chi_via_mobius(A: Arrangement) -> Polynomial:
    return build_poset(A).chi()


def chi_via_deletion_contraction(A: Arrangement, _memo: Optional[dict] = None) -> Polynomial:
    """Recurse on the last hyperplane; the empty arrangement in R^d gives t^d."""
    memo = {} if _memo is None else _memo
    key = A.key()
    if key in memo:
        return memo[key]
    if not A.hyperplanes:
        out = Polynomial.monomial(A.dim)
    else:
        last = len(A) - 1
        out = chi_via_deletion_contraction(delete(A, last), memo) - chi_via_deletion_contraction(
            contract(A, last), memo
        )
    memo[key] = out
    return out


def is_good_prime(A: Arrangement, p: int, reference: Optional[IntersectionPoset] = None) -> bool:
    """True iff reducing ``A`` mod ``p`` keeps the intersection poset intact.

    Flats are matched through the set of hyperplanes containing them, which
    fixes the full order relation; dimensions must agree flat by flat.
    """
    rows = integral_rows(A)
    reduced = [tuple(c % p for c in r) for r in rows]
    if any(not any(r[:-1]) for r in reduced):
        return False
    ref = reference if reference is not None else build_poset(A)
    mod = build_poset(A, p)
    if mod.counts_by_dim() != ref.counts_by_dim():
        return False
    return mod.signature() == ref.signature()


def count_complement_points(A: Arrangement, p: int, max_points: int = DEFAULT_MAX_POINTS) -> int:
    """Number of points of F_p^d lying on no hyperplane, by exhaustive enumeration."""
    d = A.dim
    total = p ** d
    if total > max_points:
        raise DimensionTooLarge(f"{p}^{d} = {total} points exceeds budget {max_points}")
    rows = np.array(integral_rows(A), dtype=np.int64).reshape(len(A), d + 1) % p
    chunk = 1 << 20
    count = 0
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        coords = [(idx // p ** k) % p for k in range(d)]
        alive = np.ones(idx.shape, dtype=bool)
        for r in rows:
            val = np.full(idx.shape, -r[d], dtype=np.int64)
            for k in range(d):
                if r[k]:
                    val += r[k] * coords[k]
            alive &= (val % p) != 0
        count += int(alive.sum())
    return count


def good_primes(A: Arrangement, how_many: int, max_points: int = DEFAULT_MAX_POINTS) -> list[int]:
    """The smallest ``how_many`` good primes above max(|integer coefficient|, d) within the point budget."""
    rows = integral_rows(A)
    bound = max([abs(c) for r in rows for c in r] + [A.dim])
    ref = build_poset(A)
    out: list[int] = []
    p = next_prime(bound)
    while len(out) < how_many:
        if p ** A.dim > max_points:
            raise BudgetExceeded(
                f"only {len(out)} good primes with p^{A.dim} <= {max_points}; need {how_many}"
            )
        if is_good_prime(A, p, ref):
            out.append(p)
        p = next_prime(p)
    return out


def finite_field_counts(A: Arrangement, how_many: int, max_points: int = DEFAULT_MAX_POINTS,
                        threads: int = 1) -> list[tuple[int, int]]:
    primes = good_primes(A, how_many, max_points)
    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            counts = list(ex.map(lambda q: count_complement_points(A, q, max_points), primes))
    else:
        counts = [count_complement_points(A, q, max_points) for q in primes]
    return list(zip(primes, counts))


def chi_via_finite_field(A: Arrangement, max_points: int = DEFAULT_MAX_POINTS, threads: int = 1) -> Polynomial:
    """Interpolate the degree-d polynomial through complement counts at d + 1 good primes."""
    data = finite_field_counts(A, A.dim + 1, max_points, threads)
    return poly_interpolate(data, A.dim)
