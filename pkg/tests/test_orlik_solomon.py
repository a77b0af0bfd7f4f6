import random
from math import comb

import pytest
from hypothesis import given, settings

from conftest import arrangements
from hyparr.arrangement import Arrangement, braid, catalan, generic, linial, shi
from hyparr.errors import BudgetExceeded
from hyparr.orlik_solomon import (OrlikSolomon, boundary, element, graded_dimensions, hilbert_from_chi,
                                  hilbert_polynomial, ideal_generators, normalize, wedge)
from hyparr.exact_math import Polynomial
from hyparr.poset import chi_via_mobius
from hyparr.regions import zaslavsky_counts

A_, B_, C_, D_ = 0, 1, 2, 3


def test_exterior_sign_rules():
    assert normalize((1, 0)) == (-1, (0, 1))
    assert normalize((0, 0)) == (0, None)
    assert wedge({(0,): 1}, {(0,): 1}) == {}
    assert wedge({(1,): 1}, {(0,): 1}) == {(0, 1): -1}


def test_boundaries():
    assert boundary((A_, B_, C_)) == element([((B_, C_), -1), ((A_, C_), 1), ((A_, B_), -1)])
    assert boundary((A_, B_)) == element([((B_,), -1), ((A_,), 1)])


def test_os_example_ideal(os_example):
    os = OrlikSolomon(os_example)
    for m in [(A_, B_, D_), (A_, C_, D_), (B_, C_, D_)]:
        assert os.in_ideal({m: 1})
    assert os.in_ideal(boundary((A_, B_, C_)))
    assert not os.in_ideal({(A_, B_): 1})
    assert graded_dimensions(os_example) == [1, 4, 5]
    assert hilbert_polynomial(os_example) == Polynomial([1, 4, 5])
    assert sum(graded_dimensions(os_example)) == zaslavsky_counts(os_example)[0] == 10


def test_braid3():
    gens = ideal_generators(braid(3))
    assert boundary((0, 1, 2)) in gens
    assert graded_dimensions(braid(3)) == [1, 3, 2]


def test_exterior_algebra_size():
    os = OrlikSolomon(Arrangement(2))
    assert os.graded_dimensions() == [1]
    n = 4
    assert sum(comb(n, k) for k in range(n + 1)) == 2 ** n


def test_budget():
    with pytest.raises(BudgetExceeded):
        ideal_generators(catalan(3), max_hyperplanes=8)


@pytest.mark.parametrize("A", [braid(4), shi(3), linial(3), generic(5, 2), generic(4, 3), catalan(2)],
                         ids=["braid4", "shi3", "linial3", "generic52", "generic43", "catalan2"])
def test_hilbert_identity(A):
    chi = chi_via_mobius(A)
    dims = graded_dimensions(A)
    assert Polynomial(dims) == hilbert_from_chi(chi, A.dim)
    assert dims == [abs(chi.coefficient(A.dim - k)) for k in range(len(dims))]


@settings(max_examples=20, deadline=None)
@given(arrangements(max_n=5))
def test_hilbert_identity_random(A):
    assert hilbert_polynomial(A) == hilbert_from_chi(chi_via_mobius(A), A.dim)


@settings(max_examples=15, deadline=None)
@given(arrangements(max_n=5))
def test_generators_lie_in_ideal(A):
    os = OrlikSolomon(A)
    assert all(os.in_ideal(g) for g in os.generators)


@settings(max_examples=15, deadline=None)
@given(arrangements(max_n=5))
def test_reordering_keeps_dimensions(A):
    hs = list(A.hyperplanes)
    random.Random(len(hs)).shuffle(hs)
    assert graded_dimensions(Arrangement(A.dim, tuple(hs))) == graded_dimensions(A)
