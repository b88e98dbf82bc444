"""Exact counting of height-bounded Dyck paths with random-walk cross-checks."""

from .genfunc import (
    CountTable,
    DivisibilityError,
    count_table,
    series_coeffs,
    series_denominator,
    series_numerator,
)
from .heightpoly import height_poly, height_poly_coeff, power_diff, power_diff_ratio
from .oracle import (
    BRUTEFORCE_MAX_ORDER,
    catalan,
    count_by_contfrac,
    count_paths_bruteforce,
    count_paths_dp,
)
from .walk import (
    WalkConfig,
    WalkStats,
    conditional_hit_time,
    hit_probability,
    path_series_closed,
    renewal_identity_holds,
    simulate,
    walk_length_to_order,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTEFORCE_MAX_ORDER",
    "CountTable",
    "DivisibilityError",
    "WalkConfig",
    "WalkStats",
    "catalan",
    "conditional_hit_time",
    "count_by_contfrac",
    "count_paths_bruteforce",
    "count_paths_dp",
    "count_table",
    "height_poly",
    "height_poly_coeff",
    "hit_probability",
    "path_series_closed",
    "power_diff",
    "power_diff_ratio",
    "renewal_identity_holds",
    "series_coeffs",
    "series_denominator",
    "series_numerator",
    "simulate",
    "walk_length_to_order",
    "__version__",
]
