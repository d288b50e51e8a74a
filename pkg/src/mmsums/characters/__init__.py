"""Classical group characters, principal specialisations and tableaux."""

from .bialternant import KINDS, CharFamily, NonGenericPoint, char_eval, char_ratio
from .cfunctions import (
    c_minus_cells, c_minus_rows, c_plus_cells, c_plus_rows, c_zero_cells, c_zero_rows, conjugate_partition,
)
from .okada import (
    SPECIALISED_SUMS, RECTANGLE_SUMS, char_reduce_check, specialised_sum_sides, specialised_sum_check,
    rectangle_sum_check, rectangle_sum_sides, reduction_sides,
)
from .partitions import GPartition, ShapeError, partitions_in_box
from .specializations import SPEC_IDS, char_principal_spec, principal_spec_product, spec_formula
from .tableaux import (
    TABLEAU_KINDS, WEIGHTINGS, Tableau, infinity_histogram, shape_breakdown, tableau_character,
    tableau_count_closed, tableaux, weighted_count,
)

__all__ = [
    "KINDS", "CharFamily", "NonGenericPoint", "char_eval", "char_ratio",
    "c_minus_cells", "c_minus_rows", "c_plus_cells", "c_plus_rows", "c_zero_cells", "c_zero_rows",
    "conjugate_partition",
    "SPECIALISED_SUMS", "RECTANGLE_SUMS", "char_reduce_check", "specialised_sum_sides", "specialised_sum_check",
    "rectangle_sum_check", "rectangle_sum_sides", "reduction_sides",
    "GPartition", "ShapeError", "partitions_in_box",
    "SPEC_IDS", "char_principal_spec", "principal_spec_product", "spec_formula",
    "TABLEAU_KINDS", "WEIGHTINGS", "Tableau", "infinity_histogram", "shape_breakdown",
    "tableau_character", "tableau_count_closed", "tableaux", "weighted_count",
]
