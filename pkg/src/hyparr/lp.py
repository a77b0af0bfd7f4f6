"""Exact simplex method over the rationals with Bland's anti-cycling rule.

Only problems with a feasible origin are needed here, i.e.
``maximize c.x  s.t.  A x <= b,  b >= 0``, so the slack basis starts the
method and no first phase is required.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact_math import frac


@dataclass
class LPResult:
    status: str  # "optimal" or "unbounded"
    x: Optional[list[Fraction]]
    value: Optional[Fraction]


def maximize_nonneg(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """``max c.x`` subject to ``A x <= b`` and ``x >= 0``, with ``b >= 0``."""
    m, n = len(A), len(c)
    b = [frac(v) for v in b]
    if any(v < 0 for v in b):
        raise ValueError("origin must be feasible (b >= 0)")
    # tableau rows: [A | I | b]; objective row holds reduced costs -c
    T = [[frac(v) for v in row] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i, row in enumerate(A)]
    obj = [-frac(v) for v in c] + [Fraction(0)] * m + [Fraction(0)]
    basis = [n + i for i in range(m)]
    width = n + m
    while True:
        # Bland: lowest-index improving column
        col = next((j for j in range(width) if obj[j] < 0), None)
        if col is None:
            break
        best = None
        for i in range(m):
            a = T[i][col]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return LPResult("unbounded", None, None)
        r = best[1]
        pv = T[r][col]
        if pv != 1:
            T[r] = [v / pv for v in T[r]]
        prow = T[r]
        nz = [j for j, w in enumerate(prow) if w]
        for i in range(m):
            f = T[i][col]
            if i != r and f != 0:
                row = T[i]
                for j in nz:
                    row[j] -= f * prow[j]
        f = obj[col]
        if f:
            for j in nz:
                obj[j] -= f * prow[j]
        basis[r] = col
    x = [Fraction(0)] * width
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    return LPResult("optimal", x[:n], obj[-1])


def maximize_free(c: Sequence, A: Sequence[Sequence], b: Sequence, nonneg: int = 0) -> LPResult:
    """As :func:`maximize_nonneg`, but the leading ``len(c) - nonneg`` variables are free.

    Free variables are split as ``x = u - w``.
    """
    nfree = len(c) - nonneg
    c2 = [frac(v) for v in c[:nfree]] + [-frac(v) for v in c[:nfree]] + [frac(v) for v in c[nfree:]]
    A2 = [[frac(v) for v in row[:nfree]] + [-frac(v) for v in row[:nfree]] + [frac(v) for v in row[nfree:]] for row in A]
    res = maximize_nonneg(c2, A2, b)
    if res.x is None:
        return res
    x = [res.x[k] - res.x[nfree + k] for k in range(nfree)] + res.x[2 * nfree:]
    return LPResult(res.status, x, res.value)
