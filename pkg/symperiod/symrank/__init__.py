"""
Symperiod Symrank -- symmetry-rank threshold arithmetic.
"""

from .thresholds import (
    HypothesisReport,
    ThresholdQuery,
    delta,
    f_c,
    hypothesis_report,
    low_dimension_base_case,
    max_symrank,
    meets_log_threshold,
    minimal_rank,
)

__all__ = [
    "HypothesisReport",
    "ThresholdQuery",
    "delta",
    "f_c",
    "hypothesis_report",
    "low_dimension_base_case",
    "max_symrank",
    "meets_log_threshold",
    "minimal_rank",
]
