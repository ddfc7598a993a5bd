"""k-defect polynomial and number engines."""

from .cache import RecursionCache
from .flats import (
    Flat,
    all_flats,
    bell_number,
    defect_number_by_flats,
    defect_poly_flats,
    feasible_k,
    flats_of_size,
    is_closed,
)
from .oracle import (
    Coloring,
    bad_count_spectrum,
    bad_edges,
    brute_force_vector,
    defect_vector_oracle,
    find_coloring,
    min_bad_edges,
    oracle_defect_number,
)
from .recursion import DefectVector, chromatic_poly, defect_vector_dc
from .subset import defect_vector_subset
from .table import (
    DefectRow,
    DefectTable,
    defect_number,
    defect_table,
    defect_vector,
    number_from_poly,
)
from .witness import witness_coloring

__all__ = [
    "RecursionCache",
    "DefectVector",
    "DefectRow",
    "DefectTable",
    "Flat",
    "Coloring",
    "chromatic_poly",
    "defect_vector_dc",
    "defect_vector_subset",
    "defect_vector_oracle",
    "defect_vector",
    "defect_poly_flats",
    "defect_number",
    "defect_number_by_flats",
    "defect_table",
    "number_from_poly",
    "brute_force_vector",
    "bad_edges",
    "bad_count_spectrum",
    "find_coloring",
    "min_bad_edges",
    "oracle_defect_number",
    "witness_coloring",
    "flats_of_size",
    "all_flats",
    "bell_number",
    "feasible_k",
    "is_closed",
]
