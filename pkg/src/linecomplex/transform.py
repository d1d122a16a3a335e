"""The finite X-ray transform restricted to a complex.

A function on the 8 points is sent to its 8 line sums f(a) + f(b).  On an
admissible complex the map is a bijection and ``reconstruct`` inverts it
exactly; on an inadmissible one ``kernel_basis`` describes what is lost.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .checker import AdmissibilityVerdict, is_admissible_graph
from .geometry import N_COMPLEXES, N_POINTS, Complex, incidence_submatrix, unrank_complex
from .linalg import SingularSystemError, nullspace_exact, solve_exact


class NotInvertibleError(ValueError):
    """Raised when line sums on an inadmissible complex are asked to be inverted."""

    def __init__(self, complex_: Complex, verdict: AdmissibilityVerdict):
        self.complex = complex_
        self.verdict = verdict
        super().__init__(f"{complex_!r} is {verdict.diagnosis()}")


def _as_values(values: Sequence) -> tuple[Fraction, ...]:
    if len(values) != N_POINTS:
        raise ValueError(f"a point function has {N_POINTS} values, got {len(values)}")
    out = []
    for v in values:
        if isinstance(v, float) or not isinstance(v, Rational):
            raise TypeError(f"point function values must be exact rationals, got {v!r}")
        out.append(Fraction(v))
    return tuple(out)


@dataclass(frozen=True)
class PointFunction:
    values: tuple[Fraction, ...]

    def __init__(self, values: Sequence):
        object.__setattr__(self, "values", _as_values(values))

    def __getitem__(self, p: int) -> Fraction:
        return self.values[p]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return N_POINTS


@dataclass(frozen=True)
class LineSums:
    sums: tuple[Fraction, ...]
    complex: Complex

    def __init__(self, sums: Sequence, complex: Complex):
        if len(sums) != len(complex):
            raise ValueError(f"expected {len(complex)} line sums, got {len(sums)}")
        object.__setattr__(self, "sums", tuple(Fraction(s) for s in sums))
        object.__setattr__(self, "complex", complex)


def xray_forward(f: PointFunction | Sequence, c: Complex) -> LineSums:
    if not isinstance(f, PointFunction):
        f = PointFunction(f)
    return LineSums([f[a] + f[b] for a, b in c.pairs], c)


def reconstruct(s: LineSums) -> PointFunction:
    c = s.complex
    verdict = is_admissible_graph(c)
    if not verdict.admissible:
        raise NotInvertibleError(c, verdict)
    try:
        values = solve_exact(incidence_submatrix(c), s.sums)
    except SingularSystemError:  # pragma: no cover - the graph verdict rules this out
        raise NotInvertibleError(c, verdict) from None
    return PointFunction(values)


def kernel_basis(c: Complex) -> list[PointFunction]:
    """Basis of the functions whose line sums on ``c`` all vanish."""
    return [PointFunction(v) for v in nullspace_exact(incidence_submatrix(c))]


def random_function(rng, lo: int = -100, hi: int = 100, rational: bool = False) -> PointFunction:
    if rational:
        return PointFunction([Fraction(rng.randint(lo, hi), rng.randint(1, 12)) for _ in range(N_POINTS)])
    return PointFunction([rng.randint(lo, hi) for _ in range(N_POINTS)])


def sample_complexes(rng, n: int, admissible: bool) -> list[Complex]:
    """``n`` uniformly drawn complexes (by rank) with the requested verdict."""
    out = []
    while len(out) < n:
        c = unrank_complex(rng.randrange(N_COMPLEXES))
        if is_admissible_graph(c).admissible == admissible:
            out.append(c)
    return out


def roundtrip_suite(seed: int, samples: int = 1000) -> dict:
    """Reconstruction and kernel checks on random complexes; returns failure tallies."""
    rng = random.Random(seed)
    result = {"seed": seed, "samples": samples, "roundtrip_failures": 0,
              "kernel_failures": 0, "kernel_dimension_failures": 0}
    for c in sample_complexes(rng, samples, admissible=True):
        f = random_function(rng)
        if reconstruct(xray_forward(f, c)) != f or kernel_basis(c):
            result["roundtrip_failures"] += 1
    for c in sample_complexes(rng, samples, admissible=False):
        basis = kernel_basis(c)
        if not basis or any(any(xray_forward(v, c).sums) for v in basis):
            result["kernel_failures"] += 1
        if len(basis) != is_admissible_graph(c).bipartite_components:
            result["kernel_dimension_failures"] += 1
    result["ok"] = not (result["roundtrip_failures"] or result["kernel_failures"]
                        or result["kernel_dimension_failures"])
    return result
