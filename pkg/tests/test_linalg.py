from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import leibniz_det
from thomschur.linalg import (Inconsistent, Underdetermined, det, det_bareiss, det_laplace,
                              rank, solve_unique)
from thomschur.polyring import Poly

square = st.integers(0, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))


@given(square)
def test_determinants_agree_with_leibniz(M):
    expected = leibniz_det(M) if M else 1
    assert det_laplace(M) == expected
    assert det_bareiss(M) == expected
    assert det(M) == expected


def test_polynomial_determinant():
    x, y = Poly.var("x"), Poly.var("y")
    M = [[x, y, 1], [y, x, 0], [1, 1, x + y]]
    expected = leibniz_det(M)
    assert det_laplace(M) == expected
    assert det_bareiss(M) == expected


def test_bareiss_needs_pivoting():
    M = [[0, 1, 2], [1, 0, 3], [4, -3, 8]]
    assert det_bareiss(M) == leibniz_det(M) == -2
    assert det_bareiss([[0, 0], [1, 1]]) == 0


def test_vandermonde_size_six():
    xs = [Poly.var(f"x{k}") for k in range(1, 7)]
    M = [[x ** e for e in range(6)] for x in xs]
    want = Poly.const(1)
    for i in range(6):
        for j in range(i + 1, 6):
            want = want * (xs[j] - xs[i])
    assert det(M) == want


def test_solve_unique():
    assert solve_unique([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    assert solve_unique([[2, 0], [0, 4], [2, 4]], [1, 1, 2]) == [Fraction(1, 2), Fraction(1, 4)]


def test_solve_inconsistent():
    with pytest.raises(Inconsistent):
        solve_unique([[1, 1], [1, 1]], [1, 2])


def test_solve_underdetermined_reports_nullity():
    with pytest.raises(Underdetermined) as info:
        solve_unique([[1, 1, 0], [2, 2, 0]], [1, 2])
    assert info.value.nullity == 2


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=5),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_solution_satisfies_system(A, x):
    b = [sum(a * v for a, v in zip(row, x)) for row in A]
    if rank(A) == 3:
        assert solve_unique(A, b) == x
    else:
        with pytest.raises(Underdetermined):
            solve_unique(A, b)
