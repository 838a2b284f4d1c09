"""
Symperiod Topology -- Betti vectors, the 4-periodicity checker and the
classification tables built on them.
"""

from .betti import (
    BettiVector,
    betti_vector,
    connected_sum_betti,
    convolve,
    euler_characteristic_check,
    poincare_equal_rank,
    poincare_polynomial,
    product_betti,
)
from .periodicity import (
    Branch,
    BettiPattern,
    Obstruction,
    PeriodicityReport,
    Verdict,
    cheeger_sums,
    check_4periodic,
    classify_irreducibles,
    gap_survey,
    low_degree_gap,
    obstruction_string,
    pattern_classify,
    product_factor_analysis,
)
from .shapes import ShapeKind, ShapeVerdict, shape_verdict, soundness_sweep

__all__ = [
    "BettiVector",
    "betti_vector",
    "connected_sum_betti",
    "convolve",
    "euler_characteristic_check",
    "poincare_equal_rank",
    "poincare_polynomial",
    "product_betti",
    "Branch",
    "BettiPattern",
    "Obstruction",
    "PeriodicityReport",
    "Verdict",
    "cheeger_sums",
    "check_4periodic",
    "classify_irreducibles",
    "gap_survey",
    "low_degree_gap",
    "obstruction_string",
    "pattern_classify",
    "product_factor_analysis",
    "ShapeKind",
    "ShapeVerdict",
    "shape_verdict",
    "soundness_sweep",
]
