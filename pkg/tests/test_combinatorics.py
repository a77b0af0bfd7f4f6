from itertools import permutations, product
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from hyparr.arrangement import braid, catalan, graphical, linial, shi
from hyparr.combinatorics import (acyclic_orientations, ballot_from_sample, ballot_sequences, catalan_chamber,
                                  catalan_number, catalan_recurrence, catalan_region_to_ballot,
                                  chromatic_deletion_contraction, chromatic_polynomial, count_acyclic_orientations,
                                  count_alternating_trees, count_proper_colorings, enumerate_parking_functions,
                                  is_alternating, is_ballot, is_parking_function, kreweras_check, labelled_trees,
                                  pak_labeling, park, parking_sorted_criterion, prufer_decode,
                                  region_to_orientation, region_to_permutation, shi_base_region,
                                  strictly_positive_partial_sums, tree_inversion_histogram, tree_inversions)
from hyparr.errors import BudgetExceeded, NotInBaseChamber
from hyparr.exact_math import T
from hyparr.graph import Graph, all_graphs
from hyparr.regions import Region, enumerate_regions
from hyparr import formulas

graphs = st.integers(1, 5).flatmap(
    lambda n: st.sets(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] < e[1]))
    .map(lambda es: Graph(n, tuple(es))))


def test_chromatic_examples():
    assert chromatic_polynomial(Graph.complete(3)) == T * (T - 1) * (T - 2)
    assert chromatic_polynomial(Graph.path(3)) == T * (T - 1) ** 2
    assert count_acyclic_orientations(Graph.complete(3)) == 6
    assert count_acyclic_orientations(Graph.path(3)) == 4


@settings(max_examples=40, deadline=None)
@given(graphs)
def test_chromatic_counts_colourings(G):
    P = chromatic_deletion_contraction(G)
    assert P == chromatic_polynomial(G)
    for t in (2, 3):
        assert P(t) == count_proper_colorings(G, t)


def test_orientation_bijection_exhaustive():
    for n in range(1, 5):
        for G in all_graphs(n):
            image = [region_to_orientation(G, r) for r in enumerate_regions(graphical(G))]
            assert len(set(image)) == len(image)
            assert set(image) == set(acyclic_orientations(G))


def test_orientation_rule_on_path():
    G = Graph.path(3)
    r = Region((1, -1), (3, 1, 2), False)
    assert region_to_orientation(G, r) == ((2, 1), (2, 3))


def test_permutations_of_braid():
    for n in range(1, 5):
        perms = [region_to_permutation(r) for r in enumerate_regions(braid(n))]
        assert sorted(perms) == sorted(permutations(range(1, n + 1)))


def test_parking_examples():
    assert park((2, 1, 4, 1)) and is_parking_function((2, 1, 4, 1))
    assert not park((3, 1, 4, 3))
    assert enumerate_parking_functions(2) == [(1, 1), (1, 2), (2, 1)]
    assert [len(enumerate_parking_functions(n)) for n in range(1, 6)] == [1, 3, 16, 125, 1296]


def test_parking_criteria_agree_exhaustively():
    for n in range(1, 6):
        for a in product(range(1, n + 1), repeat=n):
            assert park(a) == parking_sorted_criterion(a)


def test_parking_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_parking_functions(8)


def test_pak_labelling():
    labels = pak_labeling(2)
    assert labels[shi_base_region(2)] == (1, 1)
    assert sorted(labels.values()) == [(1, 1), (1, 2), (2, 1)]
    lab3 = pak_labeling(3)
    assert sorted(lab3.values()) == enumerate_parking_functions(3)


def test_pak_labelling_is_order_independent():
    regs = enumerate_regions(shi(3))
    assert pak_labeling(3, regions=list(reversed(regs))) == pak_labeling(3, regions=regs)


def test_catalan_numbers():
    assert [catalan_number(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert all(catalan_recurrence(n) == catalan_number(n) for n in range(10))
    assert len(ballot_sequences(4)) == 14
    assert is_ballot((1, 1, -1, 1, -1, 1, -1, -1))
    assert not is_ballot((1, -1, -1, 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ballot_bijection(n):
    regs = enumerate_regions(catalan(n), within=catalan_chamber(n))
    assert len(regs) == catalan_number(n)
    assert factorial(n) * len(regs) == len(enumerate_regions(catalan(n)))
    seqs = [catalan_region_to_ballot(n, r) for r in regs]
    assert sorted(seqs) == sorted(ballot_sequences(n))
    for r, b in zip(regs, seqs):
        assert b == ballot_from_sample(r)
        assert strictly_positive_partial_sums(b) == r.relatively_bounded
    assert sum(r.relatively_bounded for r in regs) == catalan_number(n - 1)


def test_ballot_outside_chamber():
    r = next(r for r in enumerate_regions(catalan(2)) if r.signs[1] == -1)
    with pytest.raises(NotInBaseChamber):
        catalan_region_to_ballot(2, r)


def test_prufer_trees():
    assert prufer_decode([], [1, 2]) == [(1, 2)]
    trees = list(labelled_trees(range(4)))
    assert len(trees) == 16
    assert len({frozenset(frozenset(e) for e in t) for t in trees}) == 16


def test_alternating_trees_count_linial_regions():
    assert [count_alternating_trees(n) for n in range(1, 6)] == [formulas.linial_regions(n) for n in range(1, 6)]
    assert count_alternating_trees(3) == 7
    assert is_alternating([(1, 3), (2, 3)]) and not is_alternating([(1, 2), (2, 3)])


def test_tree_inversions():
    assert tree_inversions([(0, 2), (2, 1)]) == 1
    assert tree_inversions([(0, 1), (1, 2)]) == 0
    assert tree_inversion_histogram(2) == {0: 2, 1: 1}
    assert sum(tree_inversion_histogram(3).values()) == 16


@pytest.mark.parametrize("n", [1, 2, 3])
def test_kreweras(n):
    by_distance, trees = kreweras_check(n)
    assert by_distance == trees
    assert sum(by_distance.values()) == (n + 1) ** (n - 1)


def test_partial_sums():
    assert strictly_positive_partial_sums((1, 1, -1, -1))
    assert not strictly_positive_partial_sums((1, -1, 1, -1))


def test_ballot_of_an_explicit_order():
    # x1+1 > x2+1 > x1 > x3+1 > x2 > x4+1 > x3 > x4
    from fractions import Fraction as F
    x = (F(9, 5), F(6, 5), F(1, 2), F(0))
    A = catalan(4)
    signs = tuple(1 if h.value(x) > 0 else -1 for h in A)
    r = Region(signs, x, False)
    assert catalan_region_to_ballot(4, r) == (1, 1, -1, 1, -1, 1, -1, -1) == ballot_from_sample(r)
