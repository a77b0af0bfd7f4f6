from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hyparr.arrangement import Arrangement
from hyparr.errors import DuplicateHyperplane, InvalidSpec


@pytest.fixture
def triangle():
    """Lines x = 0, y = 0, x + y = 1."""
    return Arrangement.from_rows(2, [[1, 0, 0], [0, 1, 0], [1, 1, 1]])


@pytest.fixture
def os_example():
    """Lines x = 0, y = 0, x + y = 0, x - y = 1."""
    return Arrangement.from_rows(2, [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 1]])


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def arrangements(draw, max_d=3, max_n=5, integral=False):
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(0, max_n))
    entry = st.integers(-3, 3).map(Fraction) if integral else small_rationals
    rows = draw(st.lists(st.lists(entry, min_size=d + 1, max_size=d + 1), max_size=n))
    rows = [r for r in rows if any(c != 0 for c in r[:d])]
    try:
        return Arrangement.from_rows(d, rows)
    except (DuplicateHyperplane, InvalidSpec):
        # keep the first copy of each hyperplane
        seen, keep = set(), []
        for r in rows:
            h = Arrangement.from_rows(d, [r])[0]
            if h not in seen:
                seen.add(h)
                keep.append(r)
        return Arrangement.from_rows(d, keep)
