"""Classification of complexes and the closed-form counts that go with it.

Every complex gets exactly one label, decided in this order: omitted points,
then tree components, then (for proper complexes) the cycle structure.  The
formula ledger evaluates each hand count with exact integers, and
``verify_lemmas`` compares it with the corresponding tally of a full sweep.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional

from . import _layout
from .checker import ComponentKind, components, degrees, omitted_points
from .geometry import N_COMPLEXES, N_POINTS, Complex

TaxonomyLabel = enum.Enum(
    "TaxonomyLabel", [(name, i) for i, name in enumerate(_layout.LABEL_NAMES)],
    module=__name__,
)
TaxonomyLabel.__doc__ = "Mutually exclusive classes of 8-line complexes."


def label_from_name(name: str) -> TaxonomyLabel:
    try:
        return TaxonomyLabel[name]
    except KeyError:
        raise ValueError(f"unknown taxonomy label {name!r}") from None


_TREE_LABELS = {
    2: TaxonomyLabel.TREE_ISOLATED_LINE,
    3: TaxonomyLabel.TREE_3POINT,
    4: TaxonomyLabel.TREE_4POINT,
}


@dataclass(frozen=True)
class ComplexProfile:
    """The structural facts the classification and the sweep tallies need."""

    omitted: int
    isolated_lines: int
    tree_sizes: tuple[int, ...]
    cycle_lengths: tuple[int, ...]
    n_components: int
    multicyclic: int
    bipartite_components: int   # omitted points included
    four_cycles: int            # every 4-cycle of the graph, counted directly
    four_cycle_valence: Optional[int]
    label: TaxonomyLabel


def count_four_cycles(c: Complex) -> int:
    """Number of 4-cycles in the graph, by common neighbours of each vertex pair."""
    adj = [0] * N_POINTS
    for a, b in c.pairs:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    total = 0
    for a in range(N_POINTS):
        for b in range(a + 1, N_POINTS):
            total += comb((adj[a] & adj[b]).bit_count(), 2)
    # each 4-cycle has two diagonals
    return total // 2


def profile(c: Complex) -> ComplexProfile:
    comps = components(c)
    omitted = len(omitted_points(c))
    trees = tuple(sorted(comp.size for comp in comps if comp.kind is ComponentKind.TREE))
    cycles = tuple(sorted(comp.cycle_length for comp in comps if comp.cycle_length))
    multicyclic = sum(comp.kind is ComponentKind.MULTICYCLIC for comp in comps)
    bip = omitted + sum(comp.bipartite for comp in comps)

    valence = None
    if omitted:
        label = TaxonomyLabel[f"OMITS_POINTS_{min(omitted, 3)}"]
    elif trees:
        label = _TREE_LABELS.get(trees[0], TaxonomyLabel.TREE_4POINT)
    elif bip == 0:
        label = TaxonomyLabel.ADMISSIBLE
    elif 8 in cycles:
        label = TaxonomyLabel.CYCLE_8
    elif 6 in cycles:
        label = TaxonomyLabel.CYCLE_6
    elif cycles.count(4) >= 2:
        label = TaxonomyLabel.TWO_4CYCLES
    elif len(comps) > 1:
        label = TaxonomyLabel.UNIQUE_4CYCLE_DISCONNECTED
    else:
        cyc = next(comp for comp in comps if comp.cycle_length == 4)
        deg = degrees(c)
        ring = _cycle_vertices(c, cyc.vertices)
        valence = sum(deg[v] > 2 for v in ring)
        label = TaxonomyLabel[f"UNIQUE_4CYCLE_CONNECTED_{valence}"]

    return ComplexProfile(
        omitted=omitted,
        isolated_lines=trees.count(2),
        tree_sizes=trees,
        cycle_lengths=cycles,
        n_components=len(comps),
        multicyclic=multicyclic,
        bipartite_components=bip,
        four_cycles=count_four_cycles(c),
        four_cycle_valence=valence,
        label=label,
    )


def _cycle_vertices(c: Complex, vertices) -> frozenset[int]:
    """Vertices on the cycle of a unicyclic component (leaves stripped)."""
    alive = set(vertices)
    edges = [(a, b) for a, b in c.pairs if a in alive]
    while True:
        deg = {v: 0 for v in alive}
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        leaves = {v for v, d in deg.items() if d <= 1}
        if not leaves:
            return frozenset(alive)
        alive -= leaves
        edges = [(a, b) for a, b in edges if a in alive and b in alive]


def classify(c: Complex) -> TaxonomyLabel:
    return profile(c).label


# ---------------------------------------------------------------- formulas

@dataclass(frozen=True)
class FormulaResult:
    lemma_id: str
    expression: str
    value: int
    description: str = ""


def _integral(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"formula evaluated to non-integer {x}")
    return x.numerator


C = comb
half = Fraction(1, 2)

# ways to place an unoriented 4-cycle on 8 points: C(8,4) vertex sets x 3 cyclic orders
FOUR_CYCLE_PLACEMENTS = C(8, 4) * 3

# (lemma id, description, expression text, evaluator over earlier rows)
_FORMULAS: list[tuple[str, str, str, Callable[[dict], int | Fraction]]] = [
    ("L2.1", "omitted-point incidences (with multiplicity)",
     "C(21,8)*8", lambda r: C(21, 8) * 8),
    ("L2.2", "omitted-pair incidences (with multiplicity)",
     "28*C(15,8)", lambda r: 28 * C(15, 8)),
    ("L2.3", "complexes omitting exactly three points",
     "C(10,8)*C(8,3)", lambda r: C(10, 8) * C(8, 3)),
    ("L2.4", "complexes omitting at least one point",
     "[L2.1] - [L2.2] + [L2.3]", lambda r: r["L2.1"] - r["L2.2"] + r["L2.3"]),
    ("L3.1", "isolated-line incidences (with multiplicity)",
     "C(15,7)*28", lambda r: C(15, 7) * 28),
    ("L3.2", "complexes with exactly two isolated lines",
     "28*15/2", lambda r: Fraction(28 * 15, 2)),
    ("L3.3", "complexes with at least one isolated line",
     "[L3.1] - [L3.2]", lambda r: r["L3.1"] - r["L3.2"]),
    ("L4.1", "one isolated line and two omitted points",
     "C(C(4,2),7)", lambda r: C(C(4, 2), 7)),
    ("L4.2", "two isolated lines and an omitted point",
     "C(C(3,2),6)", lambda r: C(C(3, 2), 6)),
    ("L4.3", "one isolated line and one omitted point",
     "(8*21)*C(10,7)", lambda r: (8 * 21) * C(10, 7)),
    ("L5.1", "covering complexes with an isolated line",
     "C(8,2)*[C(15,7) - C(6,1)*C(10,7) - 1/2*C(6,2)*C(6,6)]",
     lambda r: C(8, 2) * (C(15, 7) - C(6, 1) * C(10, 7) - half * C(6, 2) * C(6, 6))),
    ("L5.2", "covering complexes with an isolated 3-point tree",
     "C(8,3)*C(3,1)*[C(10,6) - C(5,1)*C(6,6)]",
     lambda r: C(8, 3) * C(3, 1) * (C(10, 6) - C(5, 1) * C(6, 6))),
    ("L5.3", "complexes with an isolated 4-point tree",
     "C(8,4)*[4!/2 + C(4,1)]*C(6,5)",
     lambda r: C(8, 4) * (Fraction(factorial(4), 2) + C(4, 1)) * C(6, 5)),
    ("L5.0", "covering complexes with isolated trees",
     "[L5.1] + [L5.2] + [L5.3]", lambda r: r["L5.1"] + r["L5.2"] + r["L5.3"]),
    ("L6.0", "proper complexes",
     "(C(28,8) - [L2.4]) - [L5.0]", lambda r: (C(28, 8) - r["L2.4"]) - r["L5.0"]),
    ("L6.1", "proper complexes with an 8-cycle",
     "28*6!/8", lambda r: Fraction(28 * factorial(6), 8)),
    ("L6.2", "proper complexes with a 6-cycle",
     "C(8,6)*6!/(2*6)*[(1+2)*C(6,1) + 2*C(6,2)]",
     lambda r: C(8, 6) * Fraction(factorial(6), 2 * 6) * ((1 + 2) * C(6, 1) + 2 * C(6, 2))),
    ("L6.3", "proper complexes with two 4-cycles",
     "C(8,4)*(4!/(4*2))*(4!/(4*2))*(1/2)",
     lambda r: C(8, 4) * Fraction(factorial(4), 8) ** 2 * half),
    ("L6.4", "disconnected proper complexes with a unique 4-cycle",
     "C(8,4)*(4!/(4*2))*C(4,1)*C(7,1)",
     lambda r: C(8, 4) * Fraction(factorial(4), 8) * C(4, 1) * C(7, 1)),
    ("L6.5", "connected, unique 4-cycle fixed, 1 vertex of valence > 2",
     "C(4,1)*[C(4,4) + C(4,3)*3 + C(4,2)*(C(5,2)-2) + C(4,1)*(C(6,3)-4)]",
     lambda r: C(4, 1) * (C(4, 4) + C(4, 3) * 3 + C(4, 2) * (C(5, 2) - 2) + C(4, 1) * (C(6, 3) - 4))),
    ("L6.6", "connected, unique 4-cycle fixed, 2 vertices of valence > 2",
     "C(4,2)*[2*4 + C(4,2) + C(4,2)*2*3*2 + 4*3*(C(5,2)-2)]",
     lambda r: C(4, 2) * (2 * 4 + C(4, 2) + C(4, 2) * 2 * 3 * 2 + 4 * 3 * (C(5, 2) - 2))),
    ("L6.7", "connected, unique 4-cycle fixed, 3 vertices of valence > 2",
     "C(4,1)*C(4,1)*3!*3 + C(4,1)*C(3,1)*C(4,2)*2",
     lambda r: C(4, 1) * C(4, 1) * factorial(3) * 3 + C(4, 1) * C(3, 1) * C(4, 2) * 2),
    ("L6.8", "connected, unique 4-cycle fixed, 4 vertices of valence > 2",
     "4!", lambda r: factorial(4)),
    ("L7", "admissible complexes",
     "[L6.0] - [210*([L6.8]+[L6.7]+[L6.6]+[L6.5]) + [L6.4] + [L6.3] + [L6.2] + [L6.1]]",
     lambda r: r["L6.0"] - (FOUR_CYCLE_PLACEMENTS * (r["L6.8"] + r["L6.7"] + r["L6.6"] + r["L6.5"])
                           + r["L6.4"] + r["L6.3"] + r["L6.2"] + r["L6.1"])),
]

PAPER_VALUES = {
    "L2.1": 1_627_920, "L2.2": 180_180, "L2.3": 2_520, "L2.4": 1_450_260,
    "L3.1": 180_180, "L3.2": 210, "L3.3": 179_970,
    "L4.1": 0, "L4.2": 0, "L4.3": 20_160,
    "L5.0": 200_970, "L5.1": 159_810, "L5.2": 34_440, "L5.3": 6_720,
    "L6.0": 1_456_875, "L6.1": 2_520, "L6.2": 80_640, "L6.3": 315, "L6.4": 5_880,
    "L6.5": 500, "L6.6": 1_092, "L6.7": 432, "L6.8": 24,
    "L7": 937_440,
}


def formula_ledger() -> list[FormulaResult]:
    values: dict[str, int] = {}
    out = []
    for lemma_id, desc, text, fn in _FORMULAS:
        v = fn(values)
        v = _integral(Fraction(v))
        if v < 0:
            raise ArithmeticError(f"{lemma_id} evaluated to negative {v}")
        values[lemma_id] = v
        out.append(FormulaResult(lemma_id, text, v, desc))
    return out


# --------------------------------------------------------- sweep cross-check

def _labels(ledger, *names: str) -> int:
    return sum(ledger.per_label[n] for n in names)


_OMITS = ("OMITS_POINTS_1", "OMITS_POINTS_2", "OMITS_POINTS_3")
_TREES = ("TREE_ISOLATED_LINE", "TREE_3POINT", "TREE_4POINT")

# lemma id -> (sweep statistic, multiplier applied to the formula value)
_SWEEP_STATISTIC: dict[str, tuple[Callable, int]] = {
    "L2.1": (lambda L: L.stats["omitted_point_incidences"], 1),
    "L2.2": (lambda L: L.stats["omitted_pair_incidences"], 1),
    "L2.3": (lambda L: L.per_label["OMITS_POINTS_3"], 1),
    "L2.4": (lambda L: _labels(L, *_OMITS), 1),
    "L3.1": (lambda L: L.stats["isolated_line_incidences"], 1),
    "L3.2": (lambda L: L.stats["with_two_isolated_lines"], 1),
    "L3.3": (lambda L: L.stats["with_isolated_line"], 1),
    "L4.1": (lambda L: L.stats["isolated_line_and_two_omitted_points"], 1),
    "L4.2": (lambda L: L.stats["two_isolated_lines_and_omitted_point"], 1),
    "L4.3": (lambda L: L.stats["isolated_line_and_omitted_point"], 1),
    "L5.0": (lambda L: _labels(L, *_TREES), 1),
    "L5.1": (lambda L: L.per_label["TREE_ISOLATED_LINE"], 1),
    "L5.2": (lambda L: L.per_label["TREE_3POINT"], 1),
    "L5.3": (lambda L: L.per_label["TREE_4POINT"], 1),
    "L6.0": (lambda L: L.total - _labels(L, *_OMITS, *_TREES), 1),
    "L6.1": (lambda L: L.per_label["CYCLE_8"], 1),
    "L6.2": (lambda L: L.per_label["CYCLE_6"], 1),
    "L6.3": (lambda L: L.per_label["TWO_4CYCLES"], 1),
    "L6.4": (lambda L: L.per_label["UNIQUE_4CYCLE_DISCONNECTED"], 1),
    "L6.5": (lambda L: L.per_label["UNIQUE_4CYCLE_CONNECTED_1"], FOUR_CYCLE_PLACEMENTS),
    "L6.6": (lambda L: L.per_label["UNIQUE_4CYCLE_CONNECTED_2"], FOUR_CYCLE_PLACEMENTS),
    "L6.7": (lambda L: L.per_label["UNIQUE_4CYCLE_CONNECTED_3"], FOUR_CYCLE_PLACEMENTS),
    "L6.8": (lambda L: L.per_label["UNIQUE_4CYCLE_CONNECTED_4"], FOUR_CYCLE_PLACEMENTS),
    "L7": (lambda L: L.per_label["ADMISSIBLE"], 1),
}


@dataclass(frozen=True)
class LemmaCheck:
    lemma_id: str
    description: str
    expected: int         # formula value times multiplier
    paper: Optional[int]  # printed value times multiplier
    observed: int

    @property
    def ok(self) -> bool:
        return self.expected == self.observed and (self.paper is None or self.paper == self.expected)


@dataclass(frozen=True)
class LemmaReport:
    checks: tuple[LemmaCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[LemmaCheck]:
        return [c for c in self.checks if not c.ok]


def exact_omission_splits() -> dict[str, int]:
    """Counts of complexes omitting exactly 1, 2, 3 points, by inclusion-exclusion.

    With N_k complexes omitting exactly k points: N_1 + 2N_2 + 3N_3 = [L2.1],
    N_2 + 3N_3 = [L2.2], N_3 = [L2.3].
    """
    v = {f.lemma_id: f.value for f in formula_ledger()}
    n3 = v["L2.3"]
    n2 = v["L2.2"] - 3 * n3
    n1 = v["L2.1"] - 2 * n2 - 3 * n3
    return {"OMITS_POINTS_1": n1, "OMITS_POINTS_2": n2, "OMITS_POINTS_3": n3}


def verify_lemmas(ledger) -> LemmaReport:
    """Compare formula values, printed values and sweep tallies lemma by lemma.

    Besides the formula rows this also checks the exact omission splits, the
    total, the admissible count against both oracles and every invariant slot.
    """
    checks = []
    for f in formula_ledger():
        stat, mult = _SWEEP_STATISTIC[f.lemma_id]
        paper = PAPER_VALUES.get(f.lemma_id)
        checks.append(LemmaCheck(
            f.lemma_id, f.description, f.value * mult,
            None if paper is None else paper * mult, stat(ledger),
        ))
    for name, n in exact_omission_splits().items():
        checks.append(LemmaCheck(f"split:{name}", f"complexes labelled {name}",
                                 n, None, ledger.per_label[name]))
    checks.append(LemmaCheck("total", "complexes enumerated", N_COMPLEXES, N_COMPLEXES,
                             ledger.total))
    checks.append(LemmaCheck("partition", "sum of per-label counts", ledger.total, None,
                             sum(ledger.per_label.values())))
    checks.append(LemmaCheck("admissible:graph", "graph-criterion admissible count",
                             PAPER_VALUES["L7"], PAPER_VALUES["L7"],
                             ledger.stats["admissible_graph"]))
    checks.append(LemmaCheck("admissible:det", "nonzero-determinant count",
                             PAPER_VALUES["L7"], PAPER_VALUES["L7"],
                             ledger.stats["admissible_det"]))
    checks.append(LemmaCheck("determinants_checked", "complexes checked by determinant",
                             ledger.total, None, ledger.stats["determinants_checked"]))
    for slot in _layout.INVARIANT_SLOTS:
        checks.append(LemmaCheck(f"invariant:{slot}", slot.replace("_", " "), 0, None,
                                 ledger.stats[slot]))
    return LemmaReport(tuple(checks))
