"""Exact enumeration of non-bonding domino placements on rectangular boards.

Dominoes are non-bonding when no two of them share an edge: every pair of
squares from distinct dominoes is at L1 distance at least two (corner
contact is allowed).  The package counts such placements, derives the
bivariate generating function of each board width as an exact rational
function, and checks the published tables, closed forms and conjectures
against the counts.
"""

from .words import (
    StateSpace,
    compatible,
    enumerate_states,
    expected_state_count,
    is_valid_word,
    successors,
    word_weight,
)
from .counting import (
    CountTable,
    brute_force_enumerate,
    count_placements_by_d,
    count_table,
    max_fill,
    max_fill_table,
    symmetry_check,
)
from .polys import BiPoly, RationalGF, reduce_gf, series_x, series_y, specialize_y
from .gf import (
    TransferMatrix,
    build_transfer,
    cached_gf,
    gf_by_elimination,
    gf_by_series_fit,
    merge_mirror_states,
    verify_gf,
)
from .analysis import (
    ConjectureReport,
    SliceVerdict,
    check_d0_closed_form,
    check_d1_closed_form,
    check_d2_formula,
    check_maxfill_conjectures,
    check_narrow_max_fill,
    column_slice,
    diagonal_slice,
    published_slice_report,
    row_sum_gf,
    slice_value,
)
from .io_export import (
    parse_svg_placement,
    read_gf_file,
    read_table_csv,
    render_svg,
    write_gf_file,
    write_table_csv,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "ConjectureReport",
    "CountTable",
    "RationalGF",
    "SliceVerdict",
    "StateSpace",
    "TransferMatrix",
    "__version__",
    "brute_force_enumerate",
    "build_transfer",
    "cached_gf",
    "check_d0_closed_form",
    "check_d1_closed_form",
    "check_d2_formula",
    "check_maxfill_conjectures",
    "check_narrow_max_fill",
    "column_slice",
    "compatible",
    "count_placements_by_d",
    "count_table",
    "diagonal_slice",
    "enumerate_states",
    "expected_state_count",
    "gf_by_elimination",
    "gf_by_series_fit",
    "is_valid_word",
    "max_fill",
    "max_fill_table",
    "merge_mirror_states",
    "parse_svg_placement",
    "published_slice_report",
    "read_gf_file",
    "read_table_csv",
    "reduce_gf",
    "render_svg",
    "row_sum_gf",
    "series_x",
    "series_y",
    "slice_value",
    "specialize_y",
    "successors",
    "symmetry_check",
    "verify_gf",
    "word_weight",
    "write_gf_file",
    "write_table_csv",
]
