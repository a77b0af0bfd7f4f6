"""Hyperplanes, arrangements, the classical families and deletion/contraction."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import DuplicateHyperplane, IndexOutOfRange, InvalidSpec
from .exact_math import frac, format_rational, rref
from .graph import Graph


@dataclass(frozen=True)
class Hyperplane:
    """The set ``{x : normal . x = offset}``, scaled so the first nonzero normal entry is 1."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    def __post_init__(self):
        v = tuple(frac(c) for c in self.normal)
        a = frac(self.offset)
        lead = next((c for c in v if c != 0), None)
        if lead is None:
            raise InvalidSpec("hyperplane normal must be nonzero")
        if lead != 1:
            v = tuple(c / lead for c in v)
            a = a / lead
        object.__setattr__(self, "normal", v)
        object.__setattr__(self, "offset", a)

    @property
    def dim(self) -> int:
        return len(self.normal)

    @property
    def pivot(self) -> int:
        return next(k for k, c in enumerate(self.normal) if c != 0)

    def row(self) -> list[Fraction]:
        """Augmented row ``[v | a]``."""
        return [*self.normal, self.offset]

    def value(self, x: Sequence) -> Fraction:
        """``v . x - a``; its sign tells the side of ``x``."""
        return sum((c * xi for c, xi in zip(self.normal, x)), Fraction(0)) - self.offset

    def label(self) -> str:
        terms = []
        for k, c in enumerate(self.normal):
            if c == 0:
                continue
            var = f"x{k + 1}"
            mag = abs(c)
            coef = "" if mag == 1 else (format_rational(mag) if mag.denominator == 1 else f"({format_rational(mag)})")
            sign = "-" if c < 0 else ("+" if terms else "")
            terms.append(f"{sign}{coef}{var}")
        return "".join(terms) + "=" + format_rational(self.offset)


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hyperplanes: tuple[Hyperplane, ...] = ()
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        hs = tuple(self.hyperplanes)
        for h in hs:
            if h.dim != self.dim:
                raise InvalidSpec(f"hyperplane {h.label()} has dimension {h.dim}, expected {self.dim}")
        seen = {}
        for i, h in enumerate(hs):
            if h in seen:
                raise DuplicateHyperplane(f"hyperplanes {seen[h]} and {i} coincide ({h.label()})")
            seen[h] = i
        labels = tuple(self.labels) or tuple(h.label() for h in hs)
        if len(labels) != len(hs):
            raise InvalidSpec("one label per hyperplane required")
        object.__setattr__(self, "hyperplanes", hs)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_rows(cls, dim: int, rows: Iterable[Sequence], labels: Sequence[str] = ()) -> "Arrangement":
        """Build from ``(v_1, ..., v_d, a)`` rows."""
        hs = [Hyperplane(tuple(r[:-1]), r[-1]) for r in rows]
        return cls(dim, tuple(hs), tuple(labels))

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def __iter__(self):
        return iter(self.hyperplanes)

    def __getitem__(self, i) -> Hyperplane:
        return self.hyperplanes[i]

    @property
    def rank(self) -> int:
        return rref([h.normal for h in self.hyperplanes])[1] if self.hyperplanes else 0

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for h in self for c in h.row())

    def key(self) -> tuple:
        """Order-independent identity used for memoisation."""
        return (self.dim, frozenset(self.hyperplanes))


# ---------------------------------------------------------------------------
# families

FAMILIES = ("generic", "braid", "graphical", "catalan", "shi", "linial")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int = 0
    d: Optional[int] = None
    graph: Optional[Graph] = field(default=None, compare=False)

    def describe(self) -> str:
        if self.family == "generic":
            return f"generic(n={self.n}, d={self.d})"
        if self.family == "graphical":
            return f"graphical({self.graph})"
        return f"{self.family}({self.n})"


def _difference_family(n: int, offsets: Sequence[int]) -> Arrangement:
    rows, labels = [], []
    for i, j in combinations(range(n), 2):
        for a in offsets:
            v = [0] * n
            v[i], v[j] = 1, -1
            rows.append(v + [a])
            labels.append(f"x{i + 1}-x{j + 1}={a}")
    return Arrangement.from_rows(n, rows, labels)


def braid(n: int) -> Arrangement:
    return make_family(FamilySpec("braid", n))


def catalan(n: int) -> Arrangement:
    return make_family(FamilySpec("catalan", n))


def shi(n: int) -> Arrangement:
    return make_family(FamilySpec("shi", n))


def linial(n: int) -> Arrangement:
    return make_family(FamilySpec("linial", n))


def generic(n: int, d: int) -> Arrangement:
    return make_family(FamilySpec("generic", n, d))


def graphical(g: Graph) -> Arrangement:
    return make_family(FamilySpec("graphical", g.n, graph=g))


def make_family(spec: FamilySpec) -> Arrangement:
    """Instantiate one of the classical families.

    Difference families list ``x_i - x_j = a`` for ``i < j`` lexicographically,
    then by offset. ``generic(n, d)`` puts hyperplane ``i`` on the moment curve:
    ``x . (1, i, ..., i^(d-1)) = i^d``.
    """
    fam, n = spec.family, spec.n
    if fam == "generic":
        d = spec.d
        if d is None or d < 1 or n < 0:
            raise InvalidSpec("generic family needs n >= 0 and d >= 1")
        rows = [[i ** k for k in range(d + 1)] for i in range(1, n + 1)]
        return Arrangement.from_rows(d, rows)
    if fam == "graphical":
        g = spec.graph
        if g is None:
            raise InvalidSpec("graphical family needs a graph")
        rows, labels = [], []
        for i, j in g.edges:
            if not (1 <= i < j <= g.n):
                raise InvalidSpec(f"edge {(i, j)} out of range for {g.n} vertices")
            v = [0] * g.n
            v[i - 1], v[j - 1] = 1, -1
            rows.append(v + [0])
            labels.append(f"x{i}-x{j}=0")
        if g.n < 1:
            raise InvalidSpec("graph needs at least one vertex")
        return Arrangement.from_rows(g.n, rows, labels)
    if n < 1:
        raise InvalidSpec(f"{fam} family needs n >= 1")
    offsets = {"braid": (0,), "catalan": (-1, 0, 1), "shi": (0, 1), "linial": (1,)}
    if fam not in offsets:
        raise InvalidSpec(f"unknown family {fam!r}")
    return _difference_family(n, offsets[fam])


# ---------------------------------------------------------------------------
# structural operations

def is_general_position(A: Arrangement) -> bool:
    """Every r <= d hyperplanes meet in dimension d - r; any d + 1 miss each other."""
    d, hs = A.dim, A.hyperplanes
    for r in range(1, min(d, len(hs)) + 1):
        for sub in combinations(hs, r):
            if rref([h.normal for h in sub])[1] != r:
                return False
    for sub in combinations(hs, d + 1):
        # coefficient rank is d by the loop above; empty iff augmented rank is d + 1
        if rref([h.row() for h in sub])[1] != d + 1:
            return False
    return True


def essentialize(A: Arrangement) -> tuple[Arrangement, int]:
    """Rewrite ``A`` in coordinates ``y = B x`` where ``B`` is the RREF basis of the normal span.

    Each normal is a combination of the basis rows whose coefficients are its
    entries at the pivot columns, so ``v . x = a`` becomes ``v[pivots] . y = a``.
    """
    if not A.hyperplanes:
        return Arrangement(0), 0
    _, r, pivots = rref([h.normal for h in A])
    rows = [[h.normal[c] for c in pivots] + [h.offset] for h in A]
    return Arrangement.from_rows(r, rows, A.labels), r


def essential_basis(A: Arrangement) -> list[list[Fraction]]:
    """Basis rows of the span of the normals (RREF, zero rows dropped)."""
    if not A.hyperplanes:
        return []
    m, r, _ = rref([h.normal for h in A])
    return m[:r]


def _check_index(A: Arrangement, i: int) -> None:
    if not 0 <= i < len(A):
        raise IndexOutOfRange(f"hyperplane index {i} out of range for {len(A)} hyperplanes")


def delete(A: Arrangement, i: int) -> Arrangement:
    _check_index(A, i)
    keep = [k for k in range(len(A)) if k != i]
    return Arrangement(A.dim, tuple(A[k] for k in keep), tuple(A.labels[k] for k in keep))


def contract(A: Arrangement, i: int) -> Arrangement:
    """Restrict the other hyperplanes to ``A[i]``.

    ``A[i]`` is parametrised by dropping its pivot coordinate ``x_k`` and
    solving ``x_k = a - sum_{j != k} v_j x_j``. Parallel hyperplanes vanish and
    hyperplanes that induce the same trace are kept once (first occurrence).
    """
    _check_index(A, i)
    H = A[i]
    k = H.pivot
    out: dict[Hyperplane, str] = {}
    for idx, G in enumerate(A):
        if idx == i:
            continue
        g = G.normal[k]
        normal = [G.normal[j] - g * H.normal[j] for j in range(A.dim) if j != k]
        offset = G.offset - g * H.offset
        if all(c == 0 for c in normal):
            continue  # parallel to H (coincidence is excluded by construction)
        h = Hyperplane(tuple(normal), offset)
        out.setdefault(h, A.labels[idx])
    return Arrangement(A.dim - 1, tuple(out), tuple(out.values()))


def lift_rows(H: Hyperplane, rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Lift an augmented system in the coordinates of :func:`contract` back to R^d.

    The result describes the same set inside ``H`` as a subset of R^d.
    """
    k = H.pivot
    lifted = [H.row()]
    for r in rows:
        r = [frac(c) for c in r]
        lifted.append(r[:k] + [Fraction(0)] + r[k:])
    return lifted
