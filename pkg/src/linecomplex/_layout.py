"""Counter layout shared by the compiled and pure-Python sweep kernels.

Both kernels return ``(label_counts, slot_counts)`` as flat integer lists in
exactly this order; ``tests/test_kernels.py`` pins the compiled module to it.
"""

LABEL_NAMES = (
    "ADMISSIBLE",
    "OMITS_POINTS_1",
    "OMITS_POINTS_2",
    "OMITS_POINTS_3",
    "TREE_ISOLATED_LINE",
    "TREE_3POINT",
    "TREE_4POINT",
    "CYCLE_8",
    "CYCLE_6",
    "TWO_4CYCLES",
    "UNIQUE_4CYCLE_DISCONNECTED",
    "UNIQUE_4CYCLE_CONNECTED_1",
    "UNIQUE_4CYCLE_CONNECTED_2",
    "UNIQUE_4CYCLE_CONNECTED_3",
    "UNIQUE_4CYCLE_CONNECTED_4",
)

SLOT_NAMES = (
    "complexes",
    "admissible_graph",
    "admissible_det",
    "determinants_checked",
    "oracle_disagreements",
    # multiplicity-weighted tallies
    "omitted_point_incidences",
    "omitted_pair_incidences",
    "isolated_line_incidences",
    # distinct-complex tallies
    "omits_four_or_more",
    "with_isolated_line",
    "with_two_isolated_lines",
    "with_three_isolated_lines",
    "isolated_line_and_omitted_point",
    "isolated_line_and_two_omitted_points",
    "two_isolated_lines_and_omitted_point",
    # structural invariants; all must stay zero
    "tree_class_conflicts",
    "large_tree_components",
    "non_unicyclic_proper",
    "four_cycle_lemma_violations",
    "det_power_violations",
    "rank_violations",
)

N_LABELS = len(LABEL_NAMES)
N_SLOTS = len(SLOT_NAMES)
SLOT = {name: i for i, name in enumerate(SLOT_NAMES)}

INVARIANT_SLOTS = (
    "oracle_disagreements",
    "omits_four_or_more",
    "with_three_isolated_lines",
    "isolated_line_and_two_omitted_points",
    "two_isolated_lines_and_omitted_point",
    "tree_class_conflicts",
    "large_tree_components",
    "non_unicyclic_proper",
    "four_cycle_lemma_violations",
    "det_power_violations",
    "rank_violations",
)
