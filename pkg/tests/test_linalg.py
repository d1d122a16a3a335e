import pytest
from hypothesis import given, settings, strategies as st

from linecomplex.geometry import Complex, incidence_submatrix
from linecomplex.linalg import (
    ShapeError,
    SingularSystemError,
    determinant_exact,
    is_admissible_rank,
    nullspace_exact,
    rank_exact,
    solve_exact,
)

from oracles import cofactor_det, fraction_rank, leibniz_det

I8 = [[int(i == j) for j in range(8)] for i in range(8)]
STAR = Complex.from_pairs([(0, i) for i in range(1, 8)] + [(1, 2)])
CYCLE8 = Complex.from_pairs([(i, (i + 1) % 8) for i in range(8)])
OMITS_7 = Complex.from_pairs([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6), (0, 2)])


def test_determinant_examples():
    assert determinant_exact(I8) == 1
    dup = [row[:] for row in I8]
    dup[5] = dup[2][:]
    assert determinant_exact(dup) == 0
    m = incidence_submatrix(STAR)
    assert abs(cofactor_det(m)) == 2
    assert determinant_exact(m) == cofactor_det(m) == leibniz_det(m)


def test_rank_examples():
    assert rank_exact(I8) == 8
    assert rank_exact([[0] * 8 for _ in range(8)]) == 0
    m = incidence_submatrix(CYCLE8)
    assert rank_exact(m) == 7 == fraction_rank(m)
    assert determinant_exact(m) == 0


def test_admissible_rank_examples():
    assert is_admissible_rank(STAR)
    assert not is_admissible_rank(CYCLE8)
    assert not is_admissible_rank(OMITS_7)


def test_shape_errors():
    with pytest.raises(ShapeError):
        determinant_exact([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ShapeError):
        determinant_exact([[1] * 13 for _ in range(13)])
    with pytest.raises(ShapeError):
        rank_exact([[1, 2], [3]])


def square(n_max, lo=-4, hi=4):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n))


@given(square(6))
@settings(max_examples=300)
def test_determinant_matches_leibniz(m):
    assert determinant_exact(m) == leibniz_det(m)


@given(square(8, 0, 1))
@settings(max_examples=200)
def test_zero_one_determinant_matches_cofactor(m):
    assert determinant_exact(m) == cofactor_det(m)


@given(st.integers(1, 12), st.integers(1, 12), st.data())
@settings(max_examples=300)
def test_rank_matches_fraction_elimination(rows, cols, data):
    m = data.draw(st.lists(st.lists(st.integers(-2, 2), min_size=cols, max_size=cols),
                           min_size=rows, max_size=rows))
    r = rank_exact(m)
    assert r == fraction_rank(m)
    assert r <= min(rows, cols)


@given(square(8, -3, 3), st.permutations(range(8)))
def test_row_permutation(m, perm):
    n = len(m)
    perm = [p for p in perm if p < n]
    pm = [m[p] for p in perm]
    assert abs(determinant_exact(pm)) == abs(determinant_exact(m))
    assert rank_exact(pm) == rank_exact(m)


@given(square(8, -3, 3))
def test_full_rank_iff_nonzero_det(m):
    assert (rank_exact(m) == len(m)) == (determinant_exact(m) != 0)


@given(square(6, -5, 5), st.lists(st.integers(-9, 9), min_size=6, max_size=6))
def test_solve_and_nullspace(m, b):
    n = len(m)
    b = b[:n]
    basis = nullspace_exact(m)
    assert len(basis) == n - rank_exact(m)
    for v in basis:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in m)
    if determinant_exact(m):
        x = solve_exact(m, b)
        assert [sum(a * y for a, y in zip(row, x)) for row in m] == b
    else:
        with pytest.raises(SingularSystemError):
            solve_exact(m, b)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_against_sympy(m):
    sympy = pytest.importorskip("sympy")
    ref = sympy.Matrix(m)
    assert determinant_exact(m) == ref.det()
    assert rank_exact(m) == ref.rank()
