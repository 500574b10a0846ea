"""Exact computations in the framed diagram quotient algebra.

Thin re-export of the compiled extension: combinatorial enumeration
(partitions, patterns, weight census), product and restriction
multiplicities, the framed monomial basis, and the structural
verification bundle.
"""

from ._core import (
    catalan,
    dimension_formula,
    dimension_sum_squares,
    ideal_rank,
    lr_coefficient,
    monomial_block_size,
    partitions,
    pattern_to_permutation,
    patterns,
    permutation_to_pattern,
    pieri_summands,
    quotient_basis,
    restriction_multiplicities,
    standard_d_tableaux_count,
    standard_tableaux_count,
    surviving_shapes,
    verify,
    z_row,
)

__version__ = "0.1.0"

__all__ = [
    "catalan",
    "dimension_formula",
    "dimension_sum_squares",
    "ideal_rank",
    "lr_coefficient",
    "monomial_block_size",
    "partitions",
    "pattern_to_permutation",
    "patterns",
    "permutation_to_pattern",
    "pieri_summands",
    "quotient_basis",
    "restriction_multiplicities",
    "standard_d_tableaux_count",
    "standard_tableaux_count",
    "surviving_shapes",
    "verify",
    "z_row",
]
