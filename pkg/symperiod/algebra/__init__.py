"""
Symperiod Algebra -- exact polynomial and truncated series arithmetic.
"""

from .series import (
    IntPolynomial,
    PoincarePolynomial,
    poly_mul,
    poly_div_exact,
    truncate,
    is_palindromic,
    quotient_of_factors,
)

__all__ = [
    "IntPolynomial",
    "PoincarePolynomial",
    "poly_mul",
    "poly_div_exact",
    "truncate",
    "is_palindromic",
    "quotient_of_factors",
]
