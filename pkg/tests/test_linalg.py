from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hsrigid import linalg

small = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (-1) ** inv
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


@given(matrices())
def test_echelon_rank_matches_bareiss(m):
    assert linalg.rank(m) == linalg.bareiss_rank(m)


@given(matrices())
def test_nullspace_is_kernel_of_full_dimension(m):
    ncols = len(m[0])
    basis = linalg.nullspace(m)
    assert len(basis) == ncols - linalg.rank(m)
    for x in basis:
        assert all(sum(Fraction(a) * b for a, b in zip(row, x)) == 0 for row in m)
    assert linalg.rank([[v for v in x] for x in basis] or [[0] * ncols]) == len(basis)


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_determinant_matches_leibniz(m):
    assert linalg.bareiss_determinant(m) == leibniz_det(m)


@given(matrices(5, 5), st.lists(small, min_size=5, max_size=5))
def test_solve_consistent_systems(m, x0):
    x0 = x0[: len(m[0])]
    b = [sum(a * x for a, x in zip(row, x0)) for row in m]
    x = linalg.solve(m, b)
    assert x is not None
    assert [sum(Fraction(a) * v for a, v in zip(row, x)) for row in m] == b


def test_solve_reports_inconsistency():
    assert linalg.solve([[1, 1], [2, 2]], [1, 3]) is None


def test_solve_many_matches_solve():
    m = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    rhs = [[1, 0, 0], [0, 5, -2], [3, 3, 3]]
    many = linalg.solve_many(m, rhs)
    assert many == [linalg.solve(m, b) for b in rhs]


def test_inverse_roundtrip():
    m = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    inv = linalg.inverse(m)
    assert linalg.matmul(m, inv) == [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    with pytest.raises(ValueError):
        linalg.inverse([[1, 2], [2, 4]])


def test_echelon_membership_and_primitive_rows():
    ech = linalg.Echelon()
    assert ech.add({0: 2, 1: 4})
    assert not ech.add({0: 3, 1: 6})
    assert ech.contains({0: -1, 1: -2})
    assert not ech.contains({1: 1})
    assert ech.rows() == [{0: 1, 1: 2}]


def test_reduced_echelon_clears_pivot_columns():
    ech = linalg.Echelon(reduced=True)
    for row in ({0: 1, 1: 1, 2: 1}, {1: 1, 2: 2}, {2: 3}):
        ech.add(row)
    for pc, row in ech.pivots.items():
        for other, orow in ech.pivots.items():
            if other != pc:
                assert pc not in orow
