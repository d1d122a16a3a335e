"""Pure-Python sweep kernel.

Built entirely from the public checker, linalg and taxonomy functions, so it
doubles as the reference the compiled kernel is tested against.  It is about
two orders of magnitude slower.
"""

from __future__ import annotations

from . import _layout
from .checker import is_admissible_graph
from .geometry import Complex, incidence_submatrix, next_mask
from .linalg import _bareiss
from .taxonomy import TaxonomyLabel, profile

BACKEND = "python"

_S = _layout.SLOT
# 4-cycles a proper complex of each class must contain, counted over the whole graph
_PROPER_FOUR_CYCLES = {
    TaxonomyLabel.ADMISSIBLE: 0,
    TaxonomyLabel.CYCLE_8: 0,
    TaxonomyLabel.CYCLE_6: 0,
    TaxonomyLabel.TWO_4CYCLES: 2,
    TaxonomyLabel.UNIQUE_4CYCLE_DISCONNECTED: 1,
    TaxonomyLabel.UNIQUE_4CYCLE_CONNECTED_1: 1,
    TaxonomyLabel.UNIQUE_4CYCLE_CONNECTED_2: 1,
    TaxonomyLabel.UNIQUE_4CYCLE_CONNECTED_3: 1,
    TaxonomyLabel.UNIQUE_4CYCLE_CONNECTED_4: 1,
}


def accumulate(c: Complex, labels: list[int], slots: list[int], check_det: bool) -> None:
    p = profile(c)
    verdict = is_admissible_graph(c)
    labels[p.label.value] += 1
    slots[_S["complexes"]] += 1
    slots[_S["admissible_graph"]] += verdict.admissible

    if check_det:
        rank, last = _bareiss(incidence_submatrix(c))
        det = last if rank == 8 else 0
        slots[_S["determinants_checked"]] += 1
        slots[_S["admissible_det"]] += det != 0
        slots[_S["oracle_disagreements"]] += (det != 0) != verdict.admissible
        if verdict.admissible and abs(det) != 2 ** p.n_components:
            slots[_S["det_power_violations"]] += 1
        if rank != 8 - p.bipartite_components:
            slots[_S["rank_violations"]] += 1

    k = p.omitted
    iso = p.isolated_lines
    slots[_S["omitted_point_incidences"]] += k
    slots[_S["omitted_pair_incidences"]] += k * (k - 1) // 2
    slots[_S["isolated_line_incidences"]] += iso
    slots[_S["omits_four_or_more"]] += k >= 4
    slots[_S["with_isolated_line"]] += iso >= 1
    slots[_S["with_two_isolated_lines"]] += iso == 2
    slots[_S["with_three_isolated_lines"]] += iso >= 3
    slots[_S["isolated_line_and_omitted_point"]] += iso >= 1 and k >= 1
    slots[_S["isolated_line_and_two_omitted_points"]] += iso >= 1 and k >= 2
    slots[_S["two_isolated_lines_and_omitted_point"]] += iso >= 2 and k >= 1

    if k == 0:
        if p.tree_sizes:
            slots[_S["tree_class_conflicts"]] += len(set(p.tree_sizes)) > 1
            slots[_S["large_tree_components"]] += max(p.tree_sizes) > 4
        else:
            slots[_S["non_unicyclic_proper"]] += p.multicyclic > 0
            if p.four_cycles != _PROPER_FOUR_CYCLES[p.label]:
                slots[_S["four_cycle_lemma_violations"]] += 1


def sweep_counts(start_mask: int, count: int, check_det: bool = True) -> tuple[list[int], list[int]]:
    labels = [0] * _layout.N_LABELS
    slots = [0] * _layout.N_SLOTS
    mask = start_mask
    for i in range(count):
        if i:
            mask = next_mask(mask)
        accumulate(Complex(mask), labels, slots, check_det)
    return labels, slots


def label_codes(start_mask: int, count: int) -> bytearray:
    out = bytearray(count)
    mask = start_mask
    for i in range(count):
        if i:
            mask = next_mask(mask)
        out[i] = profile(Complex(mask)).label.value
    return out
