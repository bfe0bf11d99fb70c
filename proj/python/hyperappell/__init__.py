"""Exact hypergeometric Appell polynomials A_n^(k)(m, x).

Rationals cross the boundary as ``fractions.Fraction``; inputs may be
``int``, ``Fraction`` or ``"p/q"`` strings.
"""

from ._core import (
    ConnectionDirection,
    Error,
    FamilySpec,
    IdentityReport,
    LaurentPoly,
    ReductionKind,
    appell_laurent_form,
    appell_poly,
    apply_diff_operator,
    check_addition,
    check_appell_derivative,
    check_composed_derivative,
    check_convolution,
    check_corollary1,
    check_index_interchange,
    check_multiplication,
    check_parity,
    composed_poly,
    connection_coefficients,
    falling_factorial,
    gamma_ratio,
    generating_series,
    gf_coefficient_poly,
    gould_hopper,
    hermite_probabilists,
    pochhammer,
    reduce_spec,
)

__all__ = [
    "ConnectionDirection",
    "Error",
    "FamilySpec",
    "IdentityReport",
    "LaurentPoly",
    "ReductionKind",
    "appell_laurent_form",
    "appell_poly",
    "apply_diff_operator",
    "check_addition",
    "check_appell_derivative",
    "check_composed_derivative",
    "check_convolution",
    "check_corollary1",
    "check_index_interchange",
    "check_multiplication",
    "check_parity",
    "composed_poly",
    "connection_coefficients",
    "falling_factorial",
    "gamma_ratio",
    "generating_series",
    "gf_coefficient_poly",
    "gould_hopper",
    "hermite_probabilists",
    "pochhammer",
    "reduce_spec",
]
