import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from linecomplex.checker import is_admissible_graph
from linecomplex.geometry import Complex, incidence_submatrix
from linecomplex.linalg import rank_exact
from linecomplex.transform import (
    LineSums,
    NotInvertibleError,
    PointFunction,
    kernel_basis,
    random_function,
    reconstruct,
    roundtrip_suite,
    sample_complexes,
    xray_forward,
)

CYCLE8 = Complex.from_pairs([(i, (i + 1) % 8) for i in range(8)])
STAR = Complex.from_pairs([(0, i) for i in range(1, 8)] + [(1, 2)])
STAR_ONLY = Complex.from_pairs([(0, i) for i in range(1, 8)] + [(3, 4)])
OMITS_7 = Complex.from_pairs([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6), (0, 2)])


def test_forward_examples():
    assert xray_forward([1] * 8, STAR).sums == (2,) * 8
    ind0 = [1, 0, 0, 0, 0, 0, 0, 0]
    # ascending LineId puts {1,2} (line 2) third
    assert xray_forward(ind0, STAR).sums == (1, 1, 0, 1, 1, 1, 1, 1)
    sums = xray_forward(ind0, STAR_ONLY).sums
    assert dict(zip(STAR_ONLY.pairs, sums)) == {p: int(p != (3, 4)) for p in STAR_ONLY.pairs}
    alt = [(-1) ** i for i in range(8)]
    assert xray_forward(alt, CYCLE8).sums == (0,) * 8


def test_forward_is_matrix_product():
    f = PointFunction([Fraction(i * i - 3, 7) for i in range(8)])
    m = incidence_submatrix(STAR)
    assert list(xray_forward(f, STAR).sums) == [sum(x * y for x, y in zip(row, f)) for row in m]


def test_reconstruct_examples():
    assert reconstruct(LineSums([0] * 8, STAR)) == PointFunction([0] * 8)
    with pytest.raises(NotInvertibleError) as info:
        reconstruct(LineSums([0] * 8, CYCLE8))
    assert info.value.verdict.bipartite_components == 1
    assert "bipartite" in str(info.value)


def test_reconstruct_random_rational_roundtrip():
    rng = random.Random(11)
    for c in sample_complexes(rng, 1000, admissible=True):
        f = random_function(rng, rational=True)
        assert reconstruct(xray_forward(f, c)) == f


def test_kernel_examples():
    assert kernel_basis(STAR) == []
    (v,) = kernel_basis(CYCLE8)
    assert all(v[i] == -v[(i + 1) % 8] != 0 for i in range(8))
    basis = kernel_basis(OMITS_7)
    assert PointFunction([0] * 7 + [1]) in basis
    assert len(basis) == 8 - rank_exact(incidence_submatrix(OMITS_7))


def test_point_function_rejects_floats():
    with pytest.raises(TypeError):
        PointFunction([0.5] * 8)
    with pytest.raises(ValueError):
        PointFunction([1] * 7)


@given(st.sets(st.integers(0, 27), min_size=8, max_size=8),
       st.lists(st.integers(-100, 100), min_size=8, max_size=8))
def test_transform_properties(lines, values):
    c = Complex.from_lines(lines)
    f = PointFunction(values)
    basis = kernel_basis(c)
    assert len(basis) == is_admissible_graph(c).bipartite_components
    for v in basis:
        assert not any(xray_forward(v, c).sums)
    if is_admissible_graph(c).admissible:
        assert reconstruct(xray_forward(f, c)) == f
    else:
        with pytest.raises(NotInvertibleError):
            reconstruct(xray_forward(f, c))


def test_roundtrip_suite_is_deterministic():
    a = roundtrip_suite(5, samples=50)
    assert a == roundtrip_suite(5, samples=50)
    assert a["ok"]
