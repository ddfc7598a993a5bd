"""Graph families and their closed-form defect results."""

from .bipartite import independent_degree_sums, two_color_bad_spectrum
from .formulas import (
    complete_defect_number,
    complete_feasible_set,
    cycle_defect_number,
    cycle_defect_poly,
    integer_partitions,
    kn_infeasible_set,
    kn_interval_bound,
    kn_intervals,
    tree_defect_number,
    tree_defect_poly,
    wheel_defect_number,
    wheel_min_bad_2col,
    wheel_printed_zero_interval,
    wheel_zero_window,
)
from .generators import (
    all_labeled_graphs,
    all_labeled_trees,
    complete_bipartite_graph,
    complete_graph,
    corpus,
    cycle_graph,
    generate,
    parse_family,
    path_graph,
    prufer_decode,
    random_tree,
    star_graph,
    wheel_graph,
)

__all__ = [
    "parse_family",
    "generate",
    "corpus",
    "path_graph",
    "star_graph",
    "cycle_graph",
    "wheel_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "random_tree",
    "prufer_decode",
    "all_labeled_graphs",
    "all_labeled_trees",
    "tree_defect_poly",
    "cycle_defect_poly",
    "tree_defect_number",
    "cycle_defect_number",
    "wheel_defect_number",
    "wheel_min_bad_2col",
    "wheel_printed_zero_interval",
    "wheel_zero_window",
    "kn_infeasible_set",
    "integer_partitions",
    "kn_intervals",
    "kn_interval_bound",
    "complete_defect_number",
    "complete_feasible_set",
    "independent_degree_sums",
    "two_color_bad_spectrum",
]
