"""Points, lines and 8-line complexes on the 8-point space F_2^3.

Points are the integers 0..7 (bit i is coordinate i).  Lines are the 28
unordered point pairs, numbered in colexicographic order.  A complex is a
set of 8 distinct lines, stored as a 28-bit mask; because colex order on
k-subsets coincides with numeric order on their bitmasks, the colex rank of a
complex is also the position of its mask among all masks of popcount 8.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, Sequence

N_POINTS = 8
N_LINES = comb(N_POINTS, 2)          # 28
LINES_PER_COMPLEX = N_POINTS         # as many lines as points
N_COMPLEXES = comb(N_LINES, LINES_PER_COMPLEX)  # 3,108,105

ALL_POINTS_MASK = (1 << N_POINTS) - 1
ALL_LINES_MASK = (1 << N_LINES) - 1


class DegenerateLineError(ValueError):
    """Raised when a line is requested through a single point."""


def _check_point(p: int) -> int:
    if not 0 <= p < N_POINTS:
        raise ValueError(f"point {p!r} out of range 0..{N_POINTS - 1}")
    return p


def line_index(a: int, b: int) -> int:
    """Colex rank of the unordered pair {a, b}: j*(j-1)/2 + i for i < j."""
    _check_point(a)
    _check_point(b)
    if a == b:
        raise DegenerateLineError(f"a line needs two distinct points, got {a} twice")
    i, j = (a, b) if a < b else (b, a)
    return j * (j - 1) // 2 + i


_ENDPOINTS: tuple[tuple[int, int], ...] = tuple(
    (i, j) for j in range(N_POINTS) for i in range(j)
)


def line_endpoints(line: int) -> tuple[int, int]:
    if not 0 <= line < N_LINES:
        raise ValueError(f"line {line!r} out of range 0..{N_LINES - 1}")
    return _ENDPOINTS[line]


class InvalidComplexError(ValueError):
    """Raised for line lists that do not form an 8-line complex."""


class Complex:
    """An immutable set of exactly 8 distinct lines.

    >>> c = Complex.from_pairs([(0, 1), (1, 2), (0, 2), (2, 3), (4, 5), (5, 6), (4, 6), (6, 7)])
    >>> c.lines
    (0, 1, 2, 5, 10, 15, 19, 27)
    """

    __slots__ = ("mask",)

    def __init__(self, mask: int):
        if mask < 0 or mask > ALL_LINES_MASK:
            raise InvalidComplexError(f"mask {mask:#x} has bits outside the 28 lines")
        if mask.bit_count() != LINES_PER_COMPLEX:
            raise InvalidComplexError(
                f"a complex has exactly {LINES_PER_COMPLEX} lines, got {mask.bit_count()}"
            )
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("Complex is immutable")

    @classmethod
    def from_lines(cls, lines: Iterable[int]) -> "Complex":
        lines = list(lines)
        mask = 0
        for line in lines:
            if not isinstance(line, int) or not 0 <= line < N_LINES:
                raise InvalidComplexError(f"line {line!r} out of range 0..{N_LINES - 1}")
            if mask >> line & 1:
                raise InvalidComplexError(f"duplicate line {line}")
            mask |= 1 << line
        return cls(mask)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "Complex":
        lines = []
        for pair in pairs:
            if len(pair) != 2:
                raise InvalidComplexError(f"a line is a pair of points, got {tuple(pair)!r}")
            try:
                lines.append(line_index(int(pair[0]), int(pair[1])))
            except ValueError as exc:
                raise InvalidComplexError(str(exc)) from exc
        return cls.from_lines(lines)

    @property
    def lines(self) -> tuple[int, ...]:
        """Member lines in ascending LineId order."""
        m = self.mask
        return tuple(i for i in range(N_LINES) if m >> i & 1)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(_ENDPOINTS[i] for i in self.lines)

    def __iter__(self) -> Iterator[int]:
        return iter(self.lines)

    def __len__(self) -> int:
        return LINES_PER_COMPLEX

    def __contains__(self, line: object) -> bool:
        return isinstance(line, int) and 0 <= line < N_LINES and bool(self.mask >> line & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __lt__(self, other: "Complex") -> bool:
        return self.mask < other.mask

    def __repr__(self) -> str:
        return f"Complex.from_pairs({list(self.pairs)!r})"


def incidence_submatrix(c: Complex) -> list[list[int]]:
    """8x8 0/1 matrix: row k is the k-th smallest line, column p is point p."""
    rows = []
    for a, b in c.pairs:
        row = [0] * N_POINTS
        row[a] = row[b] = 1
        rows.append(row)
    return rows


def unrank_complex(r: int) -> Complex:
    """The r-th 8-subset of the 28 lines in colex order."""
    if not 0 <= r < N_COMPLEXES:
        raise ValueError(f"rank {r!r} out of range 0..{N_COMPLEXES - 1}")
    mask = 0
    # combinatorial number system: pick the largest element first
    for k in range(LINES_PER_COMPLEX, 0, -1):
        x = k - 1
        while comb(x + 1, k) <= r:
            x += 1
        r -= comb(x, k)
        mask |= 1 << x
    return Complex(mask)


def rank_complex(c: Complex) -> int:
    return sum(comb(line, k) for k, line in enumerate(c.lines, start=1))


def next_mask(mask: int) -> int:
    """Next integer with the same popcount (Gosper's hack): the colex successor."""
    low = mask & -mask
    ripple = mask + low
    return ripple | (((mask ^ ripple) >> 2) // low)


def iter_masks(start: int, stop: int) -> Iterator[int]:
    """Masks of the complexes with colex rank in [start, stop)."""
    if not 0 <= start <= stop <= N_COMPLEXES:
        raise ValueError(f"bad rank range [{start}, {stop})")
    if start == stop:
        return
    mask = unrank_complex(start).mask
    for _ in range(stop - start - 1):
        yield mask
        mask = next_mask(mask)
    yield mask


def iter_complexes(start: int = 0, stop: int = N_COMPLEXES) -> Iterator[Complex]:
    for mask in iter_masks(start, stop):
        yield Complex(mask)
