"""Distinct squares, FS-double squares, and their counting bounds."""

from .bounds import check_bounds, delta, exhaustive_verify, sigma_search
from .core import Factor, is_primitive, lcp, lcs, occurrences, primitive_root
from .doublesq import DoubleSquare, Factorization, factorize, find_fs_double_squares
from .families import Family, decompose_family, family_size_bound
from .inversion import find_inversion_factors, intervals, natural_inversion_factor
from .mates import MateKind, classify_mate, gamma_type, gap_tail
from .squares import distinct_square_count, enumerate_squares, rightmost_table

__version__ = "0.1.0"

__all__ = [
    "DoubleSquare",
    "Factor",
    "Factorization",
    "Family",
    "MateKind",
    "check_bounds",
    "classify_mate",
    "decompose_family",
    "delta",
    "distinct_square_count",
    "enumerate_squares",
    "exhaustive_verify",
    "factorize",
    "family_size_bound",
    "find_fs_double_squares",
    "find_inversion_factors",
    "gamma_type",
    "gap_tail",
    "intervals",
    "is_primitive",
    "lcp",
    "lcs",
    "natural_inversion_factor",
    "occurrences",
    "primitive_root",
    "rightmost_table",
    "sigma_search",
]
