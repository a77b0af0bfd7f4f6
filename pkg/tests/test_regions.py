from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import arrangements
from hyparr import formulas
from hyparr.arrangement import Arrangement, braid, catalan, contract, delete, essentialize, generic, linial, shi
from hyparr.errors import BaseNotFound, BudgetExceeded
from hyparr.lp import maximize_free, maximize_nonneg
from hyparr.regions import (adjacency_and_distance, distance_histogram, enumerate_regions, is_relatively_bounded,
                            strict_feasible, zaslavsky_counts)


def _counts(A):
    regs = enumerate_regions(A)
    return len(regs), sum(r.relatively_bounded for r in regs)


def test_lp_small_cases():
    res = maximize_nonneg([1, 1], [[1, 2], [3, 1]], [4, 6])
    assert res.status == "optimal" and res.value == Fraction(14, 5)
    assert maximize_nonneg([1], [[-1]], [0]).status == "unbounded"
    res = maximize_free([1], [[1], [-1]], [3, 2])
    assert res.value == 3 and res.x == [3]


def test_strict_point_in_interval():
    A = Arrangement.from_rows(1, [[1, 0], [1, 1]])
    x = strict_feasible(A, (1, -1))
    assert 0 < x[0] < 1
    assert strict_feasible(A, (-1, 1)) is None


def test_triangle_regions(triangle):
    regs = enumerate_regions(triangle)
    assert len(regs) == 7
    bounded = [r.signs for r in regs if r.relatively_bounded]
    assert bounded == [(1, 1, -1)]
    assert is_relatively_bounded(triangle, (1, 1, -1))


def test_named_counts():
    assert zaslavsky_counts(braid(3)) == (6, 0)
    assert not any(r.relatively_bounded for r in enumerate_regions(braid(3)))
    assert zaslavsky_counts(catalan(3)) == (30, 12)
    assert zaslavsky_counts(shi(3)) == (16, 4)
    assert zaslavsky_counts(linial(3))[0] == 7


@pytest.mark.parametrize("A", [braid(4), shi(3), linial(3), catalan(2), generic(6, 2), generic(5, 3)],
                         ids=["braid4", "shi3", "linial3", "catalan2", "generic62", "generic53"])
def test_enumeration_matches_zaslavsky(A):
    assert _counts(A) == zaslavsky_counts(A)


def test_generic_closed_forms():
    for n in range(1, 7):
        assert _counts(generic(n, 2)) == (formulas.generic_regions(n, 2), formulas.generic_bounded(n, 2))


def test_shi_and_catalan_closed_forms():
    assert zaslavsky_counts(shi(4)) == formulas.shi_regions(4)
    assert zaslavsky_counts(catalan(4)) == formulas.catalan_regions(4)
    assert zaslavsky_counts(linial(5))[0] == formulas.linial_regions(5)


@settings(max_examples=40, deadline=None)
@given(arrangements())
def test_samples_satisfy_signs(A):
    for r in enumerate_regions(A):
        assert all(s * h.value(r.sample) > 0 for h, s in zip(A, r.signs))


@settings(max_examples=40, deadline=None)
@given(arrangements())
def test_enumeration_agrees_with_zaslavsky(A):
    assert _counts(A) == zaslavsky_counts(A)


@settings(max_examples=25, deadline=None)
@given(arrangements(max_n=4))
def test_region_recurrence(A):
    r = _counts(A)[0]
    for i in range(len(A)):
        assert r == _counts(delete(A, i))[0] + _counts(contract(A, i))[0]


@settings(max_examples=25, deadline=None)
@given(arrangements(max_n=4))
def test_bounded_recurrence_away_from_coloops(A):
    b = _counts(A)[1]
    for i in range(len(A)):
        Ad = delete(A, i)
        if Ad.rank == A.rank:
            assert b == _counts(Ad)[1] + _counts(contract(A, i))[1]


def test_bounded_recurrence_fails_at_a_coloop():
    # one point on a line: no bounded region, but both deletion and contraction have one
    A = Arrangement.from_rows(1, [[1, 0]])
    assert _counts(A)[1] == 0
    assert _counts(delete(A, 0))[1] == 1 and _counts(contract(A, 0))[1] == 1


@settings(max_examples=30, deadline=None)
@given(arrangements())
def test_essentialization_keeps_counts(A):
    assert _counts(essentialize(A)[0]) == _counts(A)


def test_shi2_distances():
    A = shi(2)
    regs = enumerate_regions(A)
    end = next(r.signs for r in regs if r.signs == (1, 1))
    adj, dist = adjacency_and_distance(A, regs, end)
    assert sorted(dist.values()) == [0, 1, 2]
    _, dist = adjacency_and_distance(A, regs, (1, -1))
    assert distance_histogram(dist) == {0: 1, 1: 2}


def test_adjacency_degree_and_symmetry():
    A = catalan(2)
    regs = enumerate_regions(A)
    adj, dist = adjacency_and_distance(A, regs, regs[0].signs)
    assert dist[0] == 0
    for i, nbrs in adj.items():
        assert len(nbrs) <= len(A)
        for j, k in nbrs:
            assert (i, k) in adj[j]
            assert sum(a != b for a, b in zip(regs[i].signs, regs[j].signs)) == 1


def test_concurrent_lines_form_a_cycle():
    # six sectors, each sharing a ray with exactly two others
    A = Arrangement.from_rows(2, [[1, 0, 0], [0, 1, 0], [1, 1, 0]])
    regs = enumerate_regions(A)
    adj, _ = adjacency_and_distance(A, regs, regs[0].signs)
    assert all(len(v) == 2 for v in adj.values())


def test_base_must_be_a_region(triangle):
    with pytest.raises(BaseNotFound):
        adjacency_and_distance(triangle, enumerate_regions(triangle), (-1, -1, 1))


def test_budgets():
    with pytest.raises(BudgetExceeded):
        enumerate_regions(generic(6, 2), max_hyperplanes=5)
    with pytest.raises(BudgetExceeded):
        enumerate_regions(generic(6, 2), max_regions=10)


def test_parallel_enumeration_is_identical():
    A = shi(3)
    assert enumerate_regions(A, workers=2) == enumerate_regions(A)
