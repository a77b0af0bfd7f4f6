"""Exit criteria for the library, runnable from pytest and from ``hyparr selftest``.

Every check is exact (integers, rationals, polynomial identity) except the
Linial root test, which uses a 1e-6 tolerance on real parts.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import Callable

from . import formulas
from .arrangement import (Arrangement, braid, catalan, contract, delete, essentialize, generic, graphical,
                          linial, shi)
from .combinatorics import (acyclic_orientations, ballot_sequences, catalan_chamber, catalan_number,
                            catalan_region_to_ballot, chromatic_deletion_contraction, count_alternating_trees,
                            count_proper_colorings, enumerate_parking_functions, kreweras_check, pak_labeling,
                            park, parking_sorted_criterion, region_to_permutation,
                            strictly_positive_partial_sums)
from .errors import BudgetExceeded
from .exact_math import T, poly_roots_numeric
from .graph import Graph, all_graphs
from .orlik_solomon import graded_dimensions, hilbert_from_chi
from .poset import (build_poset, chi_via_deletion_contraction, chi_via_finite_field, chi_via_mobius,
                    count_complement_points, good_primes)
from .regions import enumerate_regions, zaslavsky_counts

SEED = 20031


@dataclass
class Result:
    number: int
    title: str
    passed: bool
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.title} ({self.seconds:.1f}s)"


class _Checker:
    def __init__(self):
        self.ok = True
        self.details: list[str] = []

    def check(self, cond: bool, what: str) -> bool:
        if not cond:
            self.ok = False
            self.details.append("failed: " + what)
        return cond

    def note(self, what: str) -> None:
        self.details.append(what)


# ---------------------------------------------------------------------------
# instances

WORKED_EXAMPLE = Arrangement.from_rows(2, [[1, 0, 0], [0, 1, 0], [1, 1, 1]])
OS_EXAMPLE = Arrangement.from_rows(2, [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 1]])


def random_graph(rng: random.Random, max_n: int = 6) -> Graph:
    n = rng.randint(2, max_n)
    edges = tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < 0.5)
    return Graph(n, edges)


def random_graphs(count: int = 20, max_n: int = 6, seed: int = SEED) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, max_n) for _ in range(count)]


def random_arrangement(rng: random.Random, max_d: int = 3, max_n: int = 5, bound: int = 5) -> Arrangement:
    """Rational arrangement with numerators and denominators drawn from [-bound, bound]."""
    d = rng.randint(1, max_d)
    n = rng.randint(1, max_n)
    dens = [k for k in range(-bound, bound + 1) if k]
    hs: dict = {}
    while len(hs) < n:
        row = [Fraction(rng.randint(-bound, bound), rng.choice(dens)) for _ in range(d + 1)]
        if all(c == 0 for c in row[:d]):
            continue
        A1 = Arrangement.from_rows(d, [row])
        hs.setdefault(A1[0], row)
    return Arrangement.from_rows(d, list(hs.values()))


def random_arrangements(count: int = 20, seed: int = SEED) -> list[Arrangement]:
    rng = random.Random(seed)
    return [random_arrangement(rng) for _ in range(count)]


def family_instances() -> list[tuple[str, Arrangement]]:
    """Every arrangement instance named in the criteria."""
    out = [("worked example", WORKED_EXAMPLE), ("OS example", OS_EXAMPLE)]
    out += [(f"generic({n},2)", generic(n, 2)) for n in range(1, 9)]
    out += [(f"generic({n},3)", generic(n, 3)) for n in range(1, 7)]
    out += [(f"braid({n})", braid(n)) for n in range(2, 6)]
    out += [(f"catalan({n})", catalan(n)) for n in range(2, 5)]
    out += [(f"shi({n})", shi(n)) for n in range(2, 5)]
    out += [(f"linial({n})", linial(n)) for n in range(2, 6)]
    graphs = [g for n in range(1, 5) for g in all_graphs(n)] + random_graphs()
    out += [(f"graphical{g}", graphical(g)) for g in graphs]
    return out


# ---------------------------------------------------------------------------
# criteria

def criterion_generic(c: _Checker) -> None:
    for d, top in ((2, 8), (3, 6)):
        for n in range(1, top + 1):
            regs = enumerate_regions(generic(n, d))
            bounded = sum(r.relatively_bounded for r in regs)
            c.check(len(regs) == formulas.generic_regions(n, d), f"generic({n},{d}) regions {len(regs)}")
            c.check(bounded == formulas.generic_bounded(n, d), f"generic({n},{d}) bounded {bounded}")
    c.note("d=2, n=1..8 and d=3, n=1..6 match the closed forms")


def criterion_worked_example(c: _Checker) -> None:
    A = WORKED_EXAMPLE
    want = T ** 2 - 3 * T + 3
    for name, f in (("mobius", chi_via_mobius), ("delcon", chi_via_deletion_contraction),
                    ("finitefield", chi_via_finite_field)):
        c.check(f(A) == want, f"{name} chi")
    regs = enumerate_regions(A)
    c.check(len(regs) == 7, f"{len(regs)} regions")
    c.check(sum(r.relatively_bounded for r in regs) == 1, "bounded count")


def criterion_braid(c: _Checker) -> None:
    for n in range(2, 6):
        A = braid(n)
        c.check(chi_via_mobius(A) == formulas.braid_chi(n), f"braid({n}) chi")
        c.check(zaslavsky_counts(A) == (factorial(n), 0), f"braid({n}) Zaslavsky counts")
        if n <= 4:
            regs = enumerate_regions(A)
            c.check(len(regs) == factorial(n), f"braid({n}) enumerated {len(regs)}")
            c.check(not any(r.relatively_bounded for r in regs), f"braid({n}) bounded region found")
            perms = {region_to_permutation(r) for r in regs}
            c.check(perms == set(permutations(range(1, n + 1))), f"braid({n}) permutation map")


def criterion_graphical(c: _Checker) -> None:
    graphs = [g for n in range(1, 5) for g in all_graphs(n)] + random_graphs()
    for g in graphs:
        chi = chi_via_mobius(graphical(g))
        if not c.check(chi == chromatic_deletion_contraction(g), f"{g} chromatic"):
            continue
        for t in (2, 3, 4):
            c.check(count_proper_colorings(g, t) == chi(t), f"{g} colourings at t={t}")
        acyclic = len(acyclic_orientations(g))
        c.check(acyclic == (-1) ** g.n * chi(-1), f"{g} Stanley count")
        c.check(acyclic == len(enumerate_regions(graphical(g))), f"{g} region count")
    c.note(f"{len(graphs)} graphs checked")


def criterion_catalan(c: _Checker) -> None:
    for n in range(2, 5):
        A = catalan(n)
        c.check(chi_via_mobius(A) == formulas.catalan_chi(n), f"catalan({n}) chi")
        regions, bounded = zaslavsky_counts(A)
        c.check(regions == factorial(n) * catalan_number(n), f"catalan({n}) regions {regions}")
        c.check(bounded == factorial(n) * catalan_number(n - 1), f"catalan({n}) bounded {bounded}")
        chamber = enumerate_regions(A, within=catalan_chamber(n))
        ballots = [catalan_region_to_ballot(n, r) for r in chamber]
        c.check(sorted(ballots) == sorted(ballot_sequences(n)), f"catalan({n}) ballot bijection")
        for r, b in zip(chamber, ballots):
            c.check(r.relatively_bounded == strictly_positive_partial_sums(b),
                    f"catalan({n}) boundedness of {r.sign_string()}")
        c.note(f"catalan({n}): {regions} regions, {bounded} bounded, {len(chamber)} in the chamber")


def criterion_shi(c: _Checker) -> None:
    for n in range(2, 5):
        A = shi(n)
        c.check(chi_via_mobius(A) == formulas.shi_chi(n), f"shi({n}) chi")
        c.check(zaslavsky_counts(A) == ((n + 1) ** (n - 1), (n - 1) ** (n - 1)), f"shi({n}) counts")
        labels = pak_labeling(n)
        pfs = enumerate_parking_functions(n)
        c.check(len(pfs) == (n + 1) ** (n - 1), f"{len(pfs)} parking functions of length {n}")
        c.check(len(labels) == len(set(labels.values())) == len(pfs), f"shi({n}) Pak labels not injective")
        c.check(set(labels.values()) == set(pfs), f"shi({n}) Pak image")
    from itertools import product
    for n in range(1, 6):
        for a in product(range(1, n + 1), repeat=n):
            if park(a) != parking_sorted_criterion(a):
                c.check(False, f"parking criterion on {a}")
                break


def criterion_kreweras(c: _Checker) -> None:
    for n in range(2, 5):
        regions, trees = kreweras_check(n)
        c.check(regions == trees, f"shi({n}) distances {regions} vs trees {trees}")


def criterion_linial(c: _Checker) -> None:
    for n in range(2, 6):
        A = linial(n)
        c.check(formulas.linial_chi(n) == chi_via_mobius(A), f"linial({n}) chi")
        regions = zaslavsky_counts(A)[0]
        c.check(regions == count_alternating_trees(n), f"linial({n}) regions vs alternating trees")
        c.check(regions == formulas.linial_regions(n), f"linial({n}) region formula")
    worst = 0.0
    for n in range(2, 9):
        q, rem = formulas.linial_chi(n).divmod(T)
        c.check(rem.is_zero(), f"t does not divide chi(linial({n}))")
        for z in poly_roots_numeric(q):
            worst = max(worst, abs(z.real - n / 2))
    c.check(worst < 1e-6, f"max |Re - n/2| = {worst:.2e}")
    c.note(f"max |Re - n/2| over n<=8: {worst:.2e}")


def criterion_finite_field(c: _Checker, max_points: int = 10 ** 7) -> None:
    checked = skipped = 0
    for name, A in family_instances():
        try:
            primes = good_primes(A, 3, max_points)
        except BudgetExceeded:
            skipped += 1
            continue
        chi = chi_via_mobius(A)
        for p in primes:
            c.check(count_complement_points(A, p, max_points) == chi(p), f"{name} at p={p}")
        checked += 1
    c.note(f"{checked} instances checked, {skipped} skipped (p^d > {max_points})")


def criterion_orlik_solomon(c: _Checker) -> None:
    c.check(graded_dimensions(OS_EXAMPLE) == [1, 4, 5], "OS example graded dimensions")
    count = 0
    for name, A in family_instances():
        if len(A) > 10:
            continue
        dims = graded_dimensions(A)
        hilb = hilbert_from_chi(chi_via_mobius(A), A.dim)
        c.check(list(hilb.coeffs) == dims, f"{name} Hilbert polynomial {dims}")
        count += 1
    c.note(f"{count} instances checked")


def _enum_counts(A: Arrangement) -> tuple[int, int]:
    regs = enumerate_regions(A)
    return len(regs), sum(r.relatively_bounded for r in regs)


def criterion_deletion_contraction(c: _Checker) -> None:
    for k, A in enumerate(random_arrangements()):
        chi = chi_via_mobius(A)
        r, b = _enum_counts(A)
        for i in range(len(A)):
            Ad, Ac = delete(A, i), contract(A, i)
            c.check(chi == chi_via_mobius(Ad) - chi_via_mobius(Ac), f"random #{k} chi at H{i}")
            rd, bd = _enum_counts(Ad)
            rc, bc = _enum_counts(Ac)
            c.check(r == rd + rc, f"random #{k} regions at H{i}")
            tag = " (coloop)" if Ad.rank < A.rank else ""
            c.check(b == bd + bc, f"random #{k} bounded at H{i}{tag}: {b} vs {bd}+{bc}")


def criterion_essentialization(c: _Checker) -> None:
    cases = [(f"braid({n})", braid(n)) for n in range(1, 5)] + [(f"shi({n})", shi(n)) for n in range(1, 4)]
    for name, A in cases:
        E, r = essentialize(A)
        P, Q = build_poset(A), build_poset(E)
        shift = A.dim - r
        same = {(f.hyperplanes, f.dim - shift) for f in P.flats} == {(f.hyperplanes, f.dim) for f in Q.flats}
        c.check(same and len(P) == len(Q), f"{name} poset isomorphism")
        mu_p = {f.hyperplanes: m for f, m in zip(P.flats, P.mobius)}
        mu_q = {f.hyperplanes: m for f, m in zip(Q.flats, Q.mobius)}
        c.check(mu_p == mu_q, f"{name} Möbius values")
        c.check(_enum_counts(A) == _enum_counts(E), f"{name} region counts")


CRITERIA: list[tuple[int, str, Callable]] = [
    (1, "generic arrangements: region and bounded counts", criterion_generic),
    (2, "worked example: chi = t^2 - 3t + 3, 7 regions, 1 bounded", criterion_worked_example),
    (3, "braid: chi, n! regions, permutation bijection", criterion_braid),
    (4, "graphical: chromatic polynomial, colourings, acyclic orientations", criterion_graphical),
    (5, "catalan: chi, n!C_n regions, ballot bijection", criterion_catalan),
    (6, "shi: chi, counts, Pak labelling, parking criterion", criterion_shi),
    (7, "kreweras: distance histogram vs tree inversions", criterion_kreweras),
    (8, "linial: Postnikov chi, alternating trees, root real parts", criterion_linial),
    (9, "finite field: complement counts at 3 good primes", criterion_finite_field),
    (10, "orlik-solomon: graded dims and Hilbert identity", criterion_orlik_solomon),
    (11, "deletion/contraction identities on random arrangements", criterion_deletion_contraction),
    (12, "essentialization preserves poset and counts", criterion_essentialization),
]


def run_criterion(number: int) -> Result:
    num, title, fn = next(item for item in CRITERIA if item[0] == number)
    c = _Checker()
    start = time.perf_counter()
    try:
        fn(c)
    except Exception as exc:  # a crash is a failed criterion, reported with its cause
        c.ok = False
        c.details.append(f"error: {type(exc).__name__}: {exc}")
    return Result(num, title, c.ok, c.details, time.perf_counter() - start)


def run_all(numbers=None, echo: Callable[[str], None] | None = None) -> list[Result]:
    results = []
    for num, _, _ in CRITERIA:
        if numbers and num not in numbers:
            continue
        res = run_criterion(num)
        if echo:
            echo(res.line())
        results.append(res)
    return results
