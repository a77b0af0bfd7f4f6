"""Graphs, parking functions, ballot sequences and labelled trees.

These are the combinatorial shadows of the braid, graphical, Catalan, Shi and
Linial arrangements. Each counting routine is a brute-force enumeration so it
can serve as an oracle for the arrangement-side computation.
"""
from __future__ import annotations

import heapq
from collections import Counter, deque
from functools import cmp_to_key, lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterable, Optional, Sequence

from .arrangement import Arrangement, graphical, shi
from .errors import BudgetExceeded, CrossCheckFailed, InconsistentLabel, NotInBaseChamber
from .exact_math import Polynomial
from .graph import Graph
from .poset import chi_via_mobius
from .regions import Region, adjacency_and_distance, enumerate_regions

Orientation = tuple[tuple[int, int], ...]


# ---------------------------------------------------------------------------
# graphs

def _canonical(n: int, edges: Iterable[tuple[int, int]]) -> tuple[int, tuple]:
    """Relabel vertices by (degree, old label) and return the sorted edge list.

    The result is a graph isomorphic to the input, so equal keys never lie.
    """
    edges = list(edges)
    verts = sorted({v for e in edges for v in e})
    deg = Counter(v for e in edges for v in e)
    order = sorted(verts, key=lambda v: (deg[v], v))
    relabel = {v: k for k, v in enumerate(order)}
    return n, tuple(sorted(tuple(sorted((relabel[a], relabel[b]))) for a, b in edges))


@lru_cache(maxsize=None)
def _chromatic_dc(n: int, edges: tuple) -> Polynomial:
    if not edges:
        return Polynomial.monomial(n)
    (u, v), rest = edges[-1], edges[:-1]
    deleted = _canonical(n, rest)
    merged = set()
    for a, b in rest:
        a, b = (u if a == v else a), (u if b == v else b)
        if a != b:
            merged.add((min(a, b), max(a, b)))
    contracted = _canonical(n - 1, merged)
    return _chromatic_dc(*deleted) - _chromatic_dc(*contracted)


def chromatic_deletion_contraction(G: Graph) -> Polynomial:
    """Chromatic polynomial from ``P(G) = P(G - e) - P(G / e)``, memoised on canonical forms."""
    return _chromatic_dc(*_canonical(G.n, G.edges))


def chromatic_polynomial(G: Graph) -> Polynomial:
    """Characteristic polynomial of the graphical arrangement, checked against deletion/contraction."""
    via_arrangement = chi_via_mobius(graphical(G))
    if via_arrangement != chromatic_deletion_contraction(G):
        raise CrossCheckFailed(f"chromatic polynomial mismatch for {G}")
    return via_arrangement


def count_proper_colorings(G: Graph, t: int) -> int:
    return sum(
        all(c[i - 1] != c[j - 1] for i, j in G.edges)
        for c in product(range(t), repeat=G.n)
    )


def is_acyclic(n: int, orientation: Orientation) -> bool:
    indeg = [0] * (n + 1)
    out: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for a, b in orientation:
        out[a].append(b)
        indeg[b] += 1
    queue = deque(v for v in range(1, n + 1) if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n


def acyclic_orientations(G: Graph, max_edges: int = 20) -> list[Orientation]:
    if len(G.edges) > max_edges:
        raise BudgetExceeded(f"{len(G.edges)} edges exceeds orientation budget {max_edges}")
    out = []
    for flips in product((False, True), repeat=len(G.edges)):
        o = tuple((j, i) if f else (i, j) for (i, j), f in zip(G.edges, flips))
        if is_acyclic(G.n, o):
            out.append(o)
    return out


def count_acyclic_orientations(G: Graph, max_edges: int = 20, check_regions: bool = True) -> int:
    """Brute-force count, checked against ``(-1)^n P(-1)`` and, optionally, the region count."""
    count = len(acyclic_orientations(G, max_edges))
    via_chi = (-1) ** G.n * chromatic_deletion_contraction(G)(-1)
    if via_chi != count:
        raise CrossCheckFailed(f"{count} acyclic orientations but (-1)^n P(-1) = {via_chi}")
    if check_regions and len(enumerate_regions(graphical(G))) != count:
        raise CrossCheckFailed("acyclic orientations and regions disagree")
    return count


def region_to_orientation(G: Graph, r: Region) -> Orientation:
    """Arrow ``i -> j`` on edge ``{i, j}`` when ``x_i < x_j`` in the region."""
    return tuple((i, j) if s < 0 else (j, i) for (i, j), s in zip(G.edges, r.signs))


def region_to_permutation(r: Region) -> tuple[int, ...]:
    """Coordinates of the braid region listed from smallest to largest (1-based)."""
    return tuple(k + 1 for k in sorted(range(len(r.sample)), key=lambda k: r.sample[k]))


# ---------------------------------------------------------------------------
# parking functions

def park(a: Sequence[int]) -> bool:
    """Run the parking process: each car takes the first free spot at or after its choice."""
    n = len(a)
    taken = [False] * (n + 2)
    for pref in a:
        spot = pref
        while spot <= n and taken[spot]:
            spot += 1
        if spot > n:
            return False
        taken[spot] = True
    return True


def parking_sorted_criterion(a: Sequence[int]) -> bool:
    """At least ``k`` entries are ``<= k`` for each ``k``."""
    return all(x <= k for k, x in enumerate(sorted(a), 1))


def is_parking_function(a: Sequence[int]) -> bool:
    if any(x < 1 for x in a):
        raise ValueError("parking preferences are positive integers")
    result = park(a)
    if result != parking_sorted_criterion(a):
        raise CrossCheckFailed(f"parking simulation and sorted criterion disagree on {tuple(a)}")
    return result


def enumerate_parking_functions(n: int, max_n: int = 7) -> list[tuple[int, ...]]:
    if n > max_n:
        raise BudgetExceeded(f"n = {n} exceeds parking enumeration budget {max_n}")
    return [a for a in product(range(1, n + 1), repeat=n) if park(a)]


def shi_base_region(n: int) -> tuple[int, ...]:
    """Signs of ``x_n < ... < x_2 < x_1 < x_n + 1`` on :func:`shi` hyperplanes."""
    signs = []
    for _ in combinations(range(n), 2):
        signs += [1, -1]  # x_i - x_j > 0 and x_i - x_j < 1
    return tuple(signs)


def _difference_data(A: Arrangement, k: int) -> tuple[int, int, int]:
    """``(i, j, a)`` with 1-based ``i < j`` for hyperplane ``x_i - x_j = a``."""
    v = A[k].normal
    i = next(c for c in range(A.dim) if v[c] == 1)
    j = next(c for c in range(A.dim) if v[c] == -1)
    return i + 1, j + 1, int(A[k].offset)


def pak_labeling(n: int, max_n: int = 4, regions: Optional[list[Region]] = None) -> dict[tuple, tuple]:
    """Label Shi regions by parking functions, spreading outward from the base region.

    Crossing ``x_i - x_j = 0`` away from the base adds ``e_i``; crossing
    ``x_i - x_j = 1`` adds ``e_j``. Every path must give the same label.
    """
    if n > max_n:
        raise BudgetExceeded(f"n = {n} exceeds Pak labelling budget {max_n}")
    A = shi(n)
    regions = regions if regions is not None else enumerate_regions(A)
    base = shi_base_region(n)
    adjacency, distance = adjacency_and_distance(A, regions, base)
    start = next(i for i, r in enumerate(regions) if r.signs == base)
    label = {start: (1,) * n}
    for i in sorted(range(len(regions)), key=lambda i: (distance[i], i)):
        if i not in label:
            raise InconsistentLabel(f"region {regions[i].sign_string()} unreachable from the base")
        for j, k in adjacency[i]:
            if distance[j] != distance[i] + 1:
                continue
            a, b, off = _difference_data(A, k)
            bump = a if off == 0 else b
            new = tuple(x + (c == bump - 1) for c, x in enumerate(label[i]))
            if label.setdefault(j, new) != new:
                raise InconsistentLabel(
                    f"region {regions[j].sign_string()} labelled both {label[j]} and {new}"
                )
    return {regions[i].signs: lab for i, lab in label.items()}


# ---------------------------------------------------------------------------
# Catalan numbers and ballot sequences

def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def catalan_recurrence(n: int) -> int:
    c = [1]
    for m in range(n):
        c.append(sum(c[k] * c[m - k] for k in range(m + 1)))
    return c[n]


def is_ballot(b: Sequence[int]) -> bool:
    s = 0
    for x in b:
        s += x
        if s < 0:
            return False
    return s == 0


def ballot_sequences(n: int) -> list[tuple[int, ...]]:
    return [b for b in product((1, -1), repeat=2 * n) if is_ballot(b)]


def strictly_positive_partial_sums(b: Sequence[int]) -> bool:
    s = 0
    for x in b[:-1]:
        s += x
        if s <= 0:
            return False
    return True


def catalan_chamber(n: int) -> dict[int, int]:
    """Signs fixing ``x_1 > x_2 > ... > x_n`` on the :func:`catalan` hyperplanes."""
    fixed = {}
    for p in range(n * (n - 1) // 2):
        fixed[3 * p] = 1      # x_i - x_j > -1
        fixed[3 * p + 1] = 1  # x_i - x_j > 0
    return fixed


def catalan_region_to_ballot(n: int, r: Region) -> tuple[int, ...]:
    """Read the order of ``x_1..x_n, x_1+1..x_n+1`` from the signs; ``x`` -> -1, ``x+1`` -> +1.

    Values are listed from largest to smallest.
    """
    pairs = list(combinations(range(n), 2))
    above = {}
    for p, (i, j) in enumerate(pairs):
        if r.signs[3 * p + 1] != 1 or r.signs[3 * p] != 1:
            raise NotInBaseChamber(f"region {r.sign_string()} is outside x_1 > ... > x_n")
        above[(i, j)] = r.signs[3 * p + 2] == 1  # x_i > x_j + 1

    def cmp(u, w):
        (ku, iu), (kw, iw) = u, w
        if ku == kw:
            return 0 if iu == iw else (-1 if iu < iw else 1)
        if iu == iw:
            return -1 if ku == "y" else 1
        # one x-value and one (x+1)-value on different coordinates
        (i, ki), (j, kj) = sorted([(iu, ku), (iw, kw)])
        if ki == "y":
            first_bigger = True  # x_i + 1 > x_i > x_j
        else:
            first_bigger = above[(i, j)]  # x_i vs x_j + 1
        bigger = (ki, i) if first_bigger else (kj, j)
        return -1 if u == bigger else 1

    values = [("x", i) for i in range(n)] + [("y", i) for i in range(n)]
    values.sort(key=cmp_to_key(cmp))
    return tuple(1 if k == "y" else -1 for k, _ in values)


def ballot_from_sample(r: Region) -> tuple[int, ...]:
    """Same map computed by sorting the sample point's values numerically."""
    vals = [(x, -1) for x in r.sample] + [(x + 1, 1) for x in r.sample]
    vals.sort(key=lambda t: t[0], reverse=True)
    return tuple(s for _, s in vals)


# ---------------------------------------------------------------------------
# labelled trees

def prufer_decode(seq: Sequence[int], vertices: Sequence[int]) -> list[tuple[int, int]]:
    """Edges of the labelled tree on ``vertices`` with Prüfer sequence ``seq``."""
    degree = {v: 1 for v in vertices}
    for v in seq:
        degree[v] += 1
    leaves = [v for v in vertices if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def labelled_trees(vertices: Sequence[int]):
    vertices = sorted(vertices)
    if len(vertices) == 1:
        yield []
        return
    for seq in product(vertices, repeat=len(vertices) - 2):
        yield prufer_decode(seq, vertices)


def _neighbours(edges) -> dict[int, list[int]]:
    nb: dict[int, list[int]] = {}
    for a, b in edges:
        nb.setdefault(a, []).append(b)
        nb.setdefault(b, []).append(a)
    return nb


def is_alternating(edges) -> bool:
    """Every vertex is larger than all its neighbours or smaller than all of them."""
    return all(
        all(w > v for w in ws) or all(w < v for w in ws)
        for v, ws in _neighbours(edges).items()
    )


def count_alternating_trees(n: int, max_n: int = 6) -> int:
    """Alternating trees on ``n + 1`` vertices, by Prüfer enumeration."""
    if n > max_n:
        raise BudgetExceeded(f"n = {n} exceeds alternating-tree budget {max_n}")
    return sum(is_alternating(t) for t in labelled_trees(range(1, n + 2)))


def tree_inversions(edges, root: int = 0) -> int:
    """Pairs ``i < j`` (both nonzero) with ``j`` on the path from ``i`` to the root."""
    nb = _neighbours(edges)
    parent = {root: None}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in nb.get(v, []):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    inv = 0
    for i in parent:
        if i == root:
            continue
        a = parent[i]
        while a != root:
            inv += a > i
            a = parent[a]
    return inv


def tree_inversion_histogram(n: int, max_n: int = 5) -> dict[int, int]:
    if n > max_n:
        raise BudgetExceeded(f"n = {n} exceeds tree enumeration budget {max_n}")
    hist = Counter(tree_inversions(t) for t in labelled_trees(range(n + 1)))
    return dict(sorted(hist.items()))


def kreweras_check(n: int, regions: Optional[list[Region]] = None) -> tuple[dict, dict]:
    """Return ``(regions at distance k, trees with C(n,2) - k inversions)`` keyed by ``k``."""
    A = shi(n)
    regions = regions if regions is not None else enumerate_regions(A)
    _, distance = adjacency_and_distance(A, regions, shi_base_region(n))
    by_distance = Counter(distance.values())
    trees = tree_inversion_histogram(n)
    top = comb(n, 2)
    ks = sorted(set(by_distance) | {top - i for i in trees})
    return ({k: by_distance.get(k, 0) for k in ks}, {k: trees.get(top - k, 0) for k in ks})
