"""Regions of real arrangements as feasible strict sign vectors.

A sign ``+1`` at hyperplane ``i`` means ``v_i . x > a_i``; ``-1`` means ``<``.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .arrangement import Arrangement, essential_basis
from .errors import BaseNotFound, BudgetExceeded
from .lp import maximize_free
from .poset import chi_via_mobius

DEFAULT_MAX_HYPERPLANES = 20

SignVector = tuple[int, ...]


@dataclass(frozen=True)
class Region:
    signs: SignVector
    sample: tuple[Fraction, ...]
    relatively_bounded: bool

    def sign_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)


def parse_signs(text: str) -> SignVector:
    return tuple(1 if ch == "+" else -1 for ch in text)


def _strict_point(rows: Sequence[tuple], dim: int) -> Optional[tuple[Fraction, ...]]:
    """Point with ``s (v . x - a) > 0`` for every ``(v, a, s)`` in ``rows``, or None.

    Solves ``max tau`` s.t. ``s (v . x - a) >= tau``, ``tau <= 1``. Writing
    ``tau = tau0 + sigma`` with ``tau0`` the margin of the origin makes the
    origin a feasible start.
    """
    if not rows:
        return tuple(Fraction(0) for _ in range(dim))
    tau0 = min([Fraction(1)] + [-s * a for _, a, s in rows])
    A = [[-s * c for c in v] + [1] for v, _, s in rows]
    b = [-s * a - tau0 for _, a, s in rows]
    A.append([0] * dim + [1])
    b.append(1 - tau0)
    res = maximize_free([0] * dim + [1], A, b, nonneg=1)
    if tau0 + res.value <= 0:
        return None
    return tuple(res.x[:dim])


def strict_feasible(A: Arrangement, signs: Mapping[int, int] | Sequence[int]) -> Optional[tuple[Fraction, ...]]:
    """Exact interior point of the open polyhedron cut out by a (partial) sign assignment.

    ``signs`` is either a sequence covering a prefix of the hyperplanes or a
    mapping ``{index: sign}``.
    """
    items = signs.items() if isinstance(signs, Mapping) else enumerate(signs)
    rows = [(A[i].normal, A[i].offset, s) for i, s in items]
    return _strict_point(rows, A.dim)


def _facet_point(A: Arrangement, signs: SignVector, k: int) -> Optional[tuple[Fraction, ...]]:
    """Relative-interior point of the face of ``signs`` on hyperplane ``k``, if it is a facet."""
    H = A[k]
    p = H.pivot
    rows = []
    for i, G in enumerate(A):
        if i == k:
            continue
        g = G.normal[p]
        normal = [G.normal[j] - g * H.normal[j] for j in range(A.dim) if j != p]
        offset = G.offset - g * H.offset
        if all(c == 0 for c in normal):
            if signs[i] * -offset <= 0:
                return None
            continue
        rows.append((normal, offset, signs[i]))
    y = _strict_point(rows, A.dim - 1)
    if y is None:
        return None
    xp = H.offset - sum((H.normal[j] * y[j if j < p else j - 1] for j in range(A.dim) if j != p), Fraction(0))
    return tuple(y[:p]) + (xp,) + tuple(y[p:])


def is_relatively_bounded(A: Arrangement, r: Region | SignVector) -> bool:
    """No nonzero direction in the normal span keeps every inequality of the region.

    Parametrise the normal span as ``y = B^T z`` and maximise ``sum_i s_i v_i . y``
    over ``s_i v_i . y >= 0`` with the sum capped at 1; a positive optimum is a
    recession direction, i.e. the region is not relatively bounded.
    """
    signs = r.signs if isinstance(r, Region) else r
    B = essential_basis(A)
    if not B:
        return True  # empty arrangement: the essentialisation is a point
    w = [[sum((bk[j] * h.normal[j] for j in range(A.dim)), Fraction(0)) for bk in B] for h in A]
    rows = [[-s * c for c in wi] for wi, s in zip(w, signs)]
    total = [sum((s * wi[k] for wi, s in zip(w, signs)), Fraction(0)) for k in range(len(B))]
    res = maximize_free(total, rows + [total], [0] * len(rows) + [1])
    return res.value <= 0


def _dfs(A: Arrangement, prefix: list[int], sample, fixed: Mapping[int, int], out: list,
         max_regions: Optional[int] = None) -> None:
    k = len(prefix)
    if k == len(A):
        out.append((tuple(prefix), sample))
        if max_regions is not None and len(out) > max_regions:
            raise BudgetExceeded(f"more than {max_regions} regions")
        return
    val = A[k].value(sample)
    for s in (1, -1):
        if k in fixed and fixed[k] != s:
            continue
        if val * s > 0:
            point = sample
        else:
            point = strict_feasible(A, prefix + [s])
        if point is not None:
            prefix.append(s)
            _dfs(A, prefix, point, fixed, out, max_regions)
            prefix.pop()


def _subtree(args):
    A, prefix, sample, fixed = args
    out: list = []
    _dfs(A, list(prefix), sample, fixed, out)
    return out


def enumerate_regions(A: Arrangement, max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES,
                      within: Optional[Mapping[int, int]] = None, workers: int = 1,
                      max_regions: Optional[int] = None) -> list[Region]:
    """All regions, by depth-first search over sign prefixes pruned by strict feasibility.

    ``within`` fixes some signs, restricting the search to regions inside that
    cell. Regions come back sorted by sign vector with ``+`` before ``-``.
    """
    if len(A) > max_hyperplanes:
        raise BudgetExceeded(f"{len(A)} hyperplanes exceeds region-enumeration budget {max_hyperplanes}")
    fixed = dict(within or {})
    root = strict_feasible(A, fixed)
    if root is None:
        return []
    found: list = []
    if workers > 1 and len(A) > 3:
        # expand three levels serially, then farm out the subtrees
        frontier = [([], root)]
        for k in range(3):
            nxt = []
            for prefix, sample in frontier:
                for s in (1, -1):
                    if k in fixed and fixed[k] != s:
                        continue
                    pt = sample if A[k].value(sample) * s > 0 else strict_feasible(A, prefix + [s])
                    if pt is not None:
                        nxt.append((prefix + [s], pt))
            frontier = nxt
        with ProcessPoolExecutor(workers) as ex:
            for chunk in ex.map(_subtree, [(A, p, s, fixed) for p, s in frontier]):
                found.extend(chunk)
    else:
        _dfs(A, [], root, fixed, found, max_regions)
    if max_regions is not None and len(found) > max_regions:
        raise BudgetExceeded(f"more than {max_regions} regions")
    found.sort(key=lambda item: [-s for s in item[0]])
    return [Region(signs, sample, is_relatively_bounded(A, signs)) for signs, sample in found]


def zaslavsky_counts(A: Arrangement) -> tuple[int, int]:
    """``(regions, relatively bounded regions)`` from the characteristic polynomial."""
    chi = chi_via_mobius(A)
    regions = (-1) ** A.dim * chi(-1)
    bounded = (-1) ** A.rank * chi(1)
    return int(regions), int(bounded)


def adjacency_and_distance(A: Arrangement, regions: Sequence[Region], base: SignVector):
    """Facet adjacency between regions and separation distance from ``base``.

    Returns ``(adjacency, distance)``: ``adjacency[i]`` lists ``(j, k)`` pairs
    meaning region ``j`` shares a facet with region ``i`` on hyperplane ``k``;
    ``distance[i]`` is the number of hyperplanes separating region ``i`` from
    the base region.
    """
    base = tuple(base)
    if strict_feasible(A, base) is None:
        raise BaseNotFound("base sign vector is not a region")
    where = {r.signs: i for i, r in enumerate(regions)}
    adjacency: dict[int, list[tuple[int, int]]] = {i: [] for i in range(len(regions))}
    for i, r in enumerate(regions):
        for k in range(len(A)):
            flipped = r.signs[:k] + (-r.signs[k],) + r.signs[k + 1:]
            j = where.get(flipped)
            if j is None or j < i:
                continue
            if _facet_point(A, r.signs, k) is not None:
                adjacency[i].append((j, k))
                adjacency[j].append((i, k))
    for lst in adjacency.values():
        lst.sort()
    distance = {i: sum(a != b for a, b in zip(r.signs, base)) for i, r in enumerate(regions)}
    return adjacency, distance


def distance_histogram(distance: Mapping[int, int]) -> dict[int, int]:
    return dict(sorted(Counter(distance.values()).items()))
