import random

import pytest
from hypothesis import given, strategies as st

from linecomplex.geometry import (
    N_COMPLEXES,
    Complex,
    DegenerateLineError,
    InvalidComplexError,
    incidence_submatrix,
    iter_masks,
    line_endpoints,
    line_index,
    next_mask,
    rank_complex,
    unrank_complex,
)

from oracles import colex_pairs, colex_subsets

PAIRS = colex_pairs()
CYCLE8 = Complex.from_pairs([(i, (i + 1) % 8) for i in range(8)])
STAR = Complex.from_pairs([(0, i) for i in range(1, 8)] + [(1, 2)])


def test_counts():
    assert len(PAIRS) == 28
    assert N_COMPLEXES == 3_108_105


@pytest.mark.parametrize("pair, expected", [((0, 1), 0), ((6, 7), 27), ((0, 3), 3)])
def test_line_index_examples(pair, expected):
    assert line_index(*pair) == expected
    assert line_index(*reversed(pair)) == expected
    assert PAIRS.index(pair) == expected


@pytest.mark.parametrize("line, expected", [(0, (0, 1)), (27, (6, 7)), (1, (0, 2))])
def test_line_endpoints_examples(line, expected):
    assert line_endpoints(line) == expected == PAIRS[line]


def test_line_maps_are_inverse_everywhere():
    for l in range(28):
        assert line_index(*line_endpoints(l)) == l
    for i, j in PAIRS:
        assert line_endpoints(line_index(i, j)) == (i, j)


def test_line_errors():
    with pytest.raises(DegenerateLineError):
        line_index(3, 3)
    with pytest.raises(ValueError):
        line_endpoints(28)
    with pytest.raises(ValueError):
        line_index(0, 8)


def test_unrank_examples():
    assert unrank_complex(0).lines == tuple(range(8))
    assert unrank_complex(N_COMPLEXES - 1).lines == tuple(range(20, 28))
    assert unrank_complex(1).lines == (0, 1, 2, 3, 4, 5, 6, 8)
    assert rank_complex(Complex.from_lines(range(8))) == 0
    assert rank_complex(Complex.from_lines(range(20, 28))) == N_COMPLEXES - 1
    assert rank_complex(Complex.from_lines([0, 1, 2, 3, 4, 5, 6, 8])) == 1
    with pytest.raises(ValueError):
        unrank_complex(N_COMPLEXES)
    with pytest.raises(ValueError):
        unrank_complex(-1)


def test_unrank_matches_colex_enumeration_prefix():
    # colex ranks of subsets of {0..11} form a prefix of the colex order on {0..27}
    subsets = colex_subsets(12, 8)
    for r, s in enumerate(subsets):
        assert unrank_complex(r).lines == s
        assert rank_complex(Complex.from_lines(s)) == r


def test_successor_walk_is_rank_order():
    masks = list(iter_masks(0, 2000))
    assert masks == [unrank_complex(r).mask for r in range(2000)]
    assert all(a < b for a, b in zip(masks, masks[1:]))
    last = list(iter_masks(N_COMPLEXES - 3, N_COMPLEXES))
    assert last[-1] == unrank_complex(N_COMPLEXES - 1).mask


def test_rank_bijection_exhaustive():
    mask = unrank_complex(0).mask
    for r in range(N_COMPLEXES):
        if r:
            mask = next_mask(mask)
        assert rank_complex(Complex(mask)) == r


def test_unrank_of_random_complexes():
    rng = random.Random(7)
    for _ in range(10_000):
        c = Complex.from_lines(rng.sample(range(28), 8))
        assert unrank_complex(rank_complex(c)) == c


@given(st.integers(0, N_COMPLEXES - 2))
def test_unrank_strictly_monotone(r):
    assert unrank_complex(r).mask < unrank_complex(r + 1).mask


def test_incidence_examples():
    m = incidence_submatrix(STAR)
    # rows follow ascending LineId, so {1,2} (line 2) sits between {0,2} and {0,3}
    assert [row[0] for row in m] == [1, 1, 0, 1, 1, 1, 1, 1]
    assert m[2] == [0, 1, 1, 0, 0, 0, 0, 0]
    cyc = incidence_submatrix(CYCLE8)
    assert [sum(col) for col in zip(*cyc)] == [2] * 8


@given(st.sets(st.integers(0, 27), min_size=8, max_size=8))
def test_incidence_rows(lines):
    c = Complex.from_lines(lines)
    m = incidence_submatrix(c)
    assert len(m) == 8 and all(len(row) == 8 for row in m)
    assert all(sum(row) == 2 for row in m)
    assert sum(map(sum, m)) == 16
    for row, line in zip(m, sorted(lines)):
        a, b = line_endpoints(line)
        assert row[a] == row[b] == 1


def test_complex_validation():
    with pytest.raises(InvalidComplexError):
        Complex.from_lines(range(7))
    with pytest.raises(InvalidComplexError):
        Complex.from_lines([0, 0, 1, 2, 3, 4, 5, 6])
    with pytest.raises(InvalidComplexError):
        Complex.from_lines([0, 1, 2, 3, 4, 5, 6, 28])
    with pytest.raises(InvalidComplexError):
        Complex.from_pairs([(0, 0)] + PAIRS[:7])
    with pytest.raises(AttributeError):
        STAR.mask = 3


def test_complex_value_semantics():
    a = Complex.from_pairs([(1, 0), (2, 1), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7)])
    assert a == CYCLE8 and hash(a) == hash(CYCLE8)
    assert len(a) == 8 and 0 in a and 28 not in a
    assert eval(repr(a)) == a
