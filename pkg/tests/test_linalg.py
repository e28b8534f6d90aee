"""Exact rational linear algebra."""

from fractions import Fraction

import pytest

from supervogan.linalg import (
    identity,
    invert,
    is_symmetric,
    mat_mul,
    matrix_rank,
    solve_exact,
)

Q = Fraction


def test_identity_and_mat_mul():
    a = [[Q(1), Q(2)], [Q(3), Q(4)]]
    assert mat_mul(a, identity(2)) == a
    assert mat_mul(identity(2), a) == a
    b = [[Q(0), Q(1)], [Q(1), Q(0)]]
    assert mat_mul(a, b) == [[Q(2), Q(1)], [Q(4), Q(3)]]


def test_invert_roundtrip():
    a = [[Q(2), Q(1), Q(0)], [Q(1), Q(3), Q(1)], [Q(0), Q(1), Q(-2)]]
    inv = invert(a)
    assert mat_mul(a, inv) == identity(3)
    assert mat_mul(inv, a) == identity(3)
    # entries stay exact fractions
    assert all(isinstance(x, Q) for row in inv for x in row)


def test_invert_singular():
    a = [[Q(1), Q(2)], [Q(2), Q(4)]]
    with pytest.raises(ValueError):
        invert(a)


def test_is_symmetric():
    assert is_symmetric([[Q(0), Q(5)], [Q(5), Q(2)]])
    assert not is_symmetric([[Q(0), Q(5)], [Q(-5), Q(2)]])


def test_solve_exact():
    a = [[Q(2), Q(1)], [Q(1), Q(3)]]
    x = solve_exact(a, [Q(5), Q(10)])
    assert x == [Q(1), Q(3)]


def test_solve_exact_underdetermined_sets_free_vars_to_zero():
    a = [[Q(1), Q(1)]]
    x = solve_exact(a, [Q(7)])
    assert len(x) == 2
    assert a[0][0] * x[0] + a[0][1] * x[1] == Q(7)
    assert x[1] == 0


def test_solve_exact_inconsistent():
    a = [[Q(1), Q(1)], [Q(2), Q(2)]]
    with pytest.raises(ValueError):
        solve_exact(a, [Q(1), Q(3)])


def test_matrix_rank():
    assert matrix_rank([[Q(1), Q(2)], [Q(2), Q(4)]]) == 1
    assert matrix_rank(identity(4)) == 4
    assert matrix_rank([[Q(0), Q(0)], [Q(0), Q(0)]]) == 0
