from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kostroot import linalg


def test_rref_pivots_and_rank():
    rows, pivots = linalg.rref([(1, 2, 3), (2, 4, 6), (0, 1, 1)])
    assert pivots == [0, 1]
    assert linalg.rank([(1, 2, 3), (2, 4, 6), (0, 1, 1)]) == 2
    assert rows[0][0] == 1 and rows[1][1] == 1


def test_inverse_and_singular():
    inv = linalg.inverse([(2, 1), (1, 1)])
    assert inv == ((1, -1), (-1, 2))
    with pytest.raises(ValueError):
        linalg.inverse([(1, 2), (2, 4)])


def test_nullspace_of_dependent_columns():
    null = linalg.nullspace([(1, 0), (0, 1), (1, 1)])
    assert len(null) == 1
    (n,) = null
    assert n[0] + n[2] == 0 and n[1] + n[2] == 0


def test_decomposer_rejects_outside_span():
    dec = linalg.Decomposer([(1, 0, 0), (0, 1, 0)])
    assert dec.coefficients((Q(1, 2), 3, 0)) == (Q(1, 2), 3)
    assert dec.coefficients((0, 0, 1)) is None


def test_fmt_and_parse_round_trip():
    assert linalg.fmt(Q(-3, 4)) == "-3/4"
    assert linalg.fmt(2) == "2/1"
    assert linalg.parse_rational("-3/4") == Q(-3, 4)


def test_ray_and_line_keys():
    assert linalg.ray_key((2, -4)) == linalg.ray_key((1, -2))
    assert linalg.ray_key((2, -4)) != linalg.ray_key((-1, 2))
    assert linalg.line_key((2, -4)) == linalg.line_key((-1, 2))
    assert linalg.multiple_of((2, 4), (1, 2)) == 2
    assert linalg.multiple_of((2, 5), (1, 2)) is None


small = st.integers(min_value=-4, max_value=4)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_is_two_sided(m):
    if linalg.rank(m) < 3:
        return
    inv = linalg.inverse(m)
    for i in range(3):
        for j in range(3):
            assert sum(Q(m[i][k]) * inv[k][j] for k in range(3)) == (1 if i == j else 0)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_nullity(rows):
    cols = [tuple(r[j] for r in rows) for j in range(4)]
    # nullspace takes columns of the matrix whose rows are ``rows``
    assert linalg.rank(rows) + len(linalg.nullspace(cols)) == 4
