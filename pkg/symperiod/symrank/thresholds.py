"""
Symperiod Thresholds -- symmetry-rank thresholds of the form a*log2(N) + q.

Decisions are exact: rank >= a*log2(N) + q with q = p/s rational holds iff
rank - q < 0 is false and 2^(s*(rank - q)) >= N^(a*s).
"""

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, List, Union

from symperiod.core.errors import InvalidParameter, PreconditionViolation

Number = Union[int, Fraction]

LINEAR_BOUND_DIMENSION = 6000


def delta(n: int) -> int:
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    return n % 2


def f_c(n: int, c: int) -> float:
    """2 log2 n + c/2 - 1 - delta(n)."""
    if n < 2:
        raise InvalidParameter(f"n must be >= 2, got {n}")
    return 2 * math.log2(n) + c / 2 - 1 - delta(n)


def max_symrank(n: int) -> int:
    """Largest torus rank acting effectively and isometrically on a positively curved n-manifold."""
    if n < 1:
        raise InvalidParameter(f"n must be >= 1, got {n}")
    return (n + 1) // 2


def meets_log_threshold(rank: int, a: int, big_n: int, q: Number) -> bool:
    """Exact test of rank >= a * log2(big_n) + q for a >= 0 and big_n >= 1."""
    if a < 0 or big_n < 1:
        raise InvalidParameter(f"need a >= 0 and N >= 1, got a={a}, N={big_n}")
    d = Fraction(rank) - Fraction(q)
    if d < 0:
        return False
    p, s = d.numerator, d.denominator
    return 2**p >= big_n ** (a * s)


def minimal_rank(a: int, big_n: int, q: Number) -> int:
    """Least integer rank >= 0 meeting a * log2(big_n) + q."""
    estimate = max(0, math.floor(a * math.log2(big_n) + float(q)) - 1)
    while not meets_log_threshold(estimate, a, big_n, q):
        estimate += 1
    return estimate


# ─────────────────────────────────────────────────────────────
# Hypothesis report
# ─────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class ThresholdQuery:
    n: int
    c: int
    rank: int

    def __post_init__(self):
        if not self.n >= self.c >= 2:
            raise PreconditionViolation(f"need n >= c >= 2, got n={self.n}, c={self.c}")
        if self.rank < 0:
            raise PreconditionViolation(f"rank must be >= 0, got {self.rank}")


@dataclass(frozen=True)
class ThresholdCheck:
    name: str
    formula: str
    value: float
    rank: int
    minimal_rank: int
    met: bool
    vacuous: bool
    applicable: bool = True


@dataclass
class HypothesisReport:
    query: ThresholdQuery
    delta: int
    max_symrank: int
    berger_rank: int
    checks: List[ThresholdCheck] = field(default_factory=list)
    informational: List[ThresholdCheck] = field(default_factory=list)

    @property
    def vacuous(self) -> bool:
        return any(check.vacuous for check in self.checks)

    def check(self, name: str) -> ThresholdCheck:
        for item in self.checks + self.informational:
            if item.name == name:
                return item
        raise KeyError(name)

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.query.n,
            "c": self.query.c,
            "rank": self.query.rank,
            "delta": self.delta,
            "max_symrank": self.max_symrank,
            "berger_rank": self.berger_rank,
            "vacuous": self.vacuous,
            "checks": [asdict(c) for c in self.checks],
            "informational": [asdict(c) for c in self.informational],
        }


def _log_check(
    name: str,
    formula: str,
    rank: int,
    a: int,
    big_n: int,
    q: Number,
    ceiling: int,
    applicable: bool = True,
) -> ThresholdCheck:
    least = minimal_rank(a, big_n, q)
    return ThresholdCheck(
        name=name,
        formula=formula,
        value=a * math.log2(big_n) + float(q),
        rank=rank,
        minimal_rank=least,
        met=meets_log_threshold(rank, a, big_n, q),
        vacuous=least > ceiling,
        applicable=applicable,
    )


def hypothesis_report(q: ThresholdQuery) -> HypothesisReport:
    n, c, rank = q.n, q.c, q.rank
    d = delta(n)
    ceiling = max_symrank(n)
    half_c = Fraction(c, 2)
    berger = rank - d

    checks = [
        _log_check("periodicity", "2log2(n) + c/2 - 1", rank, 2, n, half_c - 1, ceiling),
        _log_check("degree_16", "2log2(n) + 7", rank, 2, n, 7, ceiling),
        _log_check("berger", "rank - delta(n) >= f_c(n)", berger, 2, n, half_c - 1 - d, ceiling - d),
        _log_check("involution_sigma", "2log2(n) + c/2 - 1 - delta(n)", rank, 2, n, half_c - 1 - d, ceiling),
        _log_check("involution_tau", "log2(3n) + c/2 + 1 - delta(n)", rank, 1, 3 * n, half_c + 1 - d, ceiling),
    ]

    informational = [
        _log_check("connected_sum", "2log2(n) + 4", rank, 2, n, 4, ceiling),
        _log_check("chern", "2log2(n), n = 1 mod 4", rank, 2, n, 0, ceiling, applicable=n % 4 == 1),
    ]
    linear = Fraction(n, 6) + 1
    informational.append(
        ThresholdCheck(
            name="linear",
            formula="n/6 + 1",
            value=float(linear),
            rank=rank,
            minimal_rank=math.ceil(linear),
            met=rank >= linear,
            vacuous=math.ceil(linear) > ceiling,
            applicable=n >= LINEAR_BOUND_DIMENSION,
        )
    )
    return HypothesisReport(q, d, ceiling, berger, checks, informational)


def low_dimension_base_case(n: int, c: int) -> bool:
    """f_c(n) >= floor((n+1)/2), the statement that settles dimensions 2 through 5."""
    if not 2 <= n <= 5 or c < 2:
        raise InvalidParameter(f"the base case covers 2 <= n <= 5 and c >= 2, got n={n}, c={c}")
    # 2 log2 n >= M - q  <=>  n^(2s) >= 2^p  with M - q = p/s
    d = Fraction(max_symrank(n)) - (Fraction(c, 2) - 1 - delta(n))
    if d <= 0:
        return True
    return n ** (2 * d.denominator) >= 2**d.numerator

