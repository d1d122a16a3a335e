"""Admissible line complexes for the X-ray transform on the 8-point space F_2^3.

Exhaustive enumeration of all 3,108,105 eight-line complexes with two
independent admissibility tests (graph structure, exact determinant), a
classification of the inadmissible ones, closed-form counts for each class,
exact reconstruction on admissible complexes, and figure export.
"""

from .checker import AdmissibilityVerdict, ComponentKind, ComponentSummary, components, covered_points, is_admissible_graph
from .enumerator import BACKEND, CountLedger, SweepPartition, count_admissible, merge, sweep, sweep_all
from .geometry import (
    N_COMPLEXES,
    Complex,
    DegenerateLineError,
    incidence_submatrix,
    line_endpoints,
    line_index,
    rank_complex,
    unrank_complex,
)
from .linalg import determinant_exact, is_admissible_rank, rank_exact
from .scrapbook import ScrapbookEntry, build_scrapbook, export_dot, export_tikz, representative
from .taxonomy import FormulaResult, TaxonomyLabel, classify, formula_ledger, verify_lemmas
from .transform import LineSums, NotInvertibleError, PointFunction, kernel_basis, reconstruct, xray_forward

__version__ = "0.1.0"
