"""
Symperiod Periodicity -- Betti-level 4-periodicity up to degree c.

A space whose rational cohomology is 4-periodic up to degree c satisfies one
of two sets of Betti conditions:

    connected branch   b_4 = 0 and b_j = 0 for 0 < j < c
    periodic branch    b_4 = 1, b_i = b_(i+4) for 0 < i < c - 4,
                       and b_(c-4) <= b_c

The checker decides each condition on interval bounds. A verdict of
Periodic means "not obstructed at Betti level".
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from symperiod.catalog.spaces import IrreducibleSpace, SpaceKind, enumerate_spaces
from symperiod.core.config import load_settings
from symperiod.core.errors import (
    InsufficientData,
    InvalidParameter,
    NotFailing,
    PreconditionViolation,
)
from symperiod.core.logging import TimedOperation, get_logger
from symperiod.core.parallel import parallel_map

from .betti import BettiVector, betti_vector, connected_sum_betti, convolve

logger = get_logger(__name__)

MIN_DEGREE = 8


class Verdict(str, Enum):
    PERIODIC = "Periodic"
    FAILS = "Fails"
    UNDETERMINED = "Undetermined"


class Branch(str, Enum):
    CONNECTED = "ConnectedBranch"
    PERIODIC = "PeriodicBranch"


class ObstructionKind(str, Enum):
    B4_EXCEEDS_ONE = "b4_exceeds_one"
    SHIFT_LESS = "shift_less"
    SHIFT_GREATER = "shift_greater"
    POSITIVE = "positive"


@dataclass(frozen=True)
class Obstruction:
    """A violated Betti inequality, rendered the way the classification tables write it."""

    kind: ObstructionKind
    degree: int

    @property
    def upper_degree(self) -> int:
        if self.kind in (ObstructionKind.SHIFT_LESS, ObstructionKind.SHIFT_GREATER):
            return self.degree + 4
        if self.kind is ObstructionKind.B4_EXCEEDS_ONE:
            return 4
        return self.degree

    def render(self) -> str:
        i = self.degree
        if self.kind is ObstructionKind.B4_EXCEEDS_ONE:
            return "1<b_4"
        if self.kind is ObstructionKind.SHIFT_LESS:
            return f"b_{i}<b_{i + 4}"
        if self.kind is ObstructionKind.SHIFT_GREATER:
            return f"b_{i}>b_{i + 4}"
        return f"b_{i}>0"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class PeriodicityReport:
    verdict: Verdict
    c: int
    obstruction: Optional[Obstruction] = None
    branch: Optional[Branch] = None
    violations: Tuple[Obstruction, ...] = ()
    label: Optional[str] = None

    def __post_init__(self):
        if (self.verdict is Verdict.FAILS) != (self.obstruction is not None):
            raise InvalidParameter("a report carries an obstruction exactly when it fails")

    @property
    def rendered_violations(self) -> List[str]:
        return [v.render() for v in self.violations]

    def to_dict(self) -> Dict[str, object]:
        return {
            "space": self.label,
            "c": self.c,
            "verdict": self.verdict.value,
            "branch": self.branch.value if self.branch else None,
            "obstruction": self.obstruction.render() if self.obstruction else None,
            "violations": self.rendered_violations,
        }


# ─────────────────────────────────────────────────────────────
# Tri-state comparisons on bounds
# ─────────────────────────────────────────────────────────────


def _zero(b: BettiVector, j: int) -> Optional[bool]:
    lo, hi = b.bounds(j)
    if lo > 0:
        return False
    return True if hi == 0 else None


def _equals(b: BettiVector, i: int, value: int) -> Optional[bool]:
    lo, hi = b.bounds(i)
    if lo > value or (hi is not None and hi < value):
        return False
    return True if lo == hi == value else None


def _shift_equal(b: BettiVector, i: int) -> Optional[bool]:
    lo_i, hi_i = b.bounds(i)
    lo_j, hi_j = b.bounds(i + 4)
    if (hi_i is not None and hi_i < lo_j) or (hi_j is not None and hi_j < lo_i):
        return False
    return True if lo_i == hi_i == lo_j == hi_j else None


def _at_most(b: BettiVector, i: int, j: int) -> Optional[bool]:
    lo_i, hi_i = b.bounds(i)
    lo_j, hi_j = b.bounds(j)
    if hi_j is not None and lo_i > hi_j:
        return False
    return True if hi_i is not None and hi_i <= lo_j else None


def _combine(states: Sequence[Optional[bool]]) -> Optional[bool]:
    if any(s is False for s in states):
        return False
    if all(s is True for s in states):
        return True
    return None


def _shift_violation(b: BettiVector, i: int) -> Obstruction:
    lo_i, _ = b.bounds(i)
    _, hi_j = b.bounds(i + 4)
    if hi_j is not None and lo_i > hi_j:
        return Obstruction(ObstructionKind.SHIFT_GREATER, i)
    return Obstruction(ObstructionKind.SHIFT_LESS, i)


# ─────────────────────────────────────────────────────────────
# Checker
# ─────────────────────────────────────────────────────────────


def check_4periodic(b: BettiVector, c: int) -> PeriodicityReport:
    if c < MIN_DEGREE:
        raise InvalidParameter(f"the periodicity conditions degenerate for c < {MIN_DEGREE}, got {c}")

    connected = _combine([_zero(b, j) for j in range(1, c)])
    shift_states = {i: _shift_equal(b, i) for i in range(1, c - 4)}
    injection = _at_most(b, c - 4, c)
    periodic = _combine([_equals(b, 4, 1), *shift_states.values(), injection])

    violations: List[Obstruction] = []
    lo4, hi4 = b.bounds(4)
    if lo4 >= 2:
        violations.append(Obstruction(ObstructionKind.B4_EXCEEDS_ONE, 4))
    for i, state in shift_states.items():
        if state is False:
            violations.append(_shift_violation(b, i))
    if injection is False:
        violations.append(Obstruction(ObstructionKind.SHIFT_GREATER, c - 4))
    positive = [j for j in range(1, c) if j != 4 and b.bounds(j)[0] > 0]
    violations.extend(Obstruction(ObstructionKind.POSITIVE, j) for j in positive)

    branch: Optional[Branch] = None
    if hi4 == 0:
        branch = Branch.CONNECTED
    elif lo4 >= 1:
        branch = Branch.PERIODIC

    if connected is True or periodic is True:
        verdict = Verdict.PERIODIC
        branch = Branch.CONNECTED if connected is True else Branch.PERIODIC
        return PeriodicityReport(verdict, c, None, branch, (), b.label)
    if connected is None or periodic is None:
        return PeriodicityReport(Verdict.UNDETERMINED, c, None, branch, tuple(violations), b.label)

    obstruction = _select_obstruction(b, c, shift_states, injection, positive)
    return PeriodicityReport(Verdict.FAILS, c, obstruction, branch, tuple(violations), b.label)


def _select_obstruction(
    b: BettiVector,
    c: int,
    shift_states: Dict[int, Optional[bool]],
    injection: Optional[bool],
    positive: List[int],
) -> Obstruction:
    lo4, _ = b.bounds(4)
    if lo4 >= 2:
        return Obstruction(ObstructionKind.B4_EXCEEDS_ONE, 4)
    if lo4 >= 1:
        for i, state in shift_states.items():
            if state is False:
                return _shift_violation(b, i)
        if injection is False:
            return Obstruction(ObstructionKind.SHIFT_GREATER, c - 4)
    if positive:
        j = positive[0]
        if j % 4 == 0 and j >= 8:
            _, hi_prev = b.bounds(j - 4)
            if hi_prev is not None and hi_prev < b.bounds(j)[0]:
                return Obstruction(ObstructionKind.SHIFT_LESS, j - 4)
        return Obstruction(ObstructionKind.POSITIVE, j)
    for i, state in shift_states.items():
        if state is False:
            return _shift_violation(b, i)
    return Obstruction(ObstructionKind.SHIFT_GREATER, c - 4)


def obstruction_string(report: PeriodicityReport) -> str:
    if report.verdict is not Verdict.FAILS or report.obstruction is None:
        raise NotFailing(f"verdict is {report.verdict.value}, there is no obstruction to render")
    return report.obstruction.render()


# ─────────────────────────────────────────────────────────────
# Sweeps over the catalog
# ─────────────────────────────────────────────────────────────

CLASSIFICATION_MIN_DIM = 16


def classify_irreducibles(
    c: int,
    max_dim: int,
    max_param: int,
    workers: Optional[int] = None,
) -> List[Tuple[IrreducibleSpace, PeriodicityReport]]:
    """Run the checker over every catalog space with 16 <= dim <= max_dim."""
    if c < 16:
        raise InvalidParameter(f"classification needs c >= 16, got {c}")
    workers = workers or load_settings(dotenv=False).workers
    spaces = [s for s in enumerate_spaces(max_dim, max_param) if s.dim >= CLASSIFICATION_MIN_DIM]

    def run(s: IrreducibleSpace) -> Tuple[IrreducibleSpace, PeriodicityReport]:
        return s, check_4periodic(betti_vector(s, c), c)

    with TimedOperation(logger, "classify_irreducibles", degree=c, cases=len(spaces), workers=workers):
        results = parallel_map(run, spaces, workers)
    for s, report in results:
        logger.debug("classified", extra={"space": s.label, "verdict": report.verdict.value})
    return sorted(results, key=lambda pair: pair[0].sort_key())


def low_degree_gap(b: BettiVector) -> bool:
    """True iff b_i = 0 for every 3 < i < 16."""
    unknown = False
    for i in range(4, 16):
        state = _zero(b, i)
        if state is False:
            return False
        if state is None:
            unknown = True
    if unknown:
        raise InsufficientData("Betti numbers through degree 15 are not all determined")
    return True


def gap_survey(max_dim: int, max_param: int) -> List[IrreducibleSpace]:
    """Catalog spaces with no Betti numbers in degrees 4 through 15."""
    members = []
    for s in enumerate_spaces(max_dim, max_param):
        try:
            if low_degree_gap(betti_vector(s, 15)):
                members.append(s)
        except InsufficientData:
            logger.debug("gap undetermined", extra={"space": s.label})
    return members


# ─────────────────────────────────────────────────────────────
# Products
# ─────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class ProductFactorReport:
    """Which alternative of the product lemma holds, and which conclusions were checked."""

    c: int
    connected: bool
    conclusions: Dict[str, bool] = field(default_factory=dict)

    @property
    def branch(self) -> str:
        return "connected" if self.connected else "periodic_factor"

    @property
    def failures(self) -> List[str]:
        return [name for name, ok in self.conclusions.items() if not ok]

    @property
    def holds(self) -> bool:
        return not self.failures


def product_factor_analysis(b1: BettiVector, b2: BettiVector, c: int) -> ProductFactorReport:
    if c < 9:
        raise PreconditionViolation(f"the product lemma needs c >= 9, got {c}")
    product = convolve(b1, b2).truncated(c)
    try:
        if b1[4] < b2[4]:
            raise PreconditionViolation("the first factor must carry the larger b_4")
        if product[1] != 0:
            raise PreconditionViolation("the product must have b_1 = 0")
    except LookupError as exc:
        raise PreconditionViolation(str(exc)) from exc
    report = check_4periodic(product, c)
    if report.verdict is not Verdict.PERIODIC:
        raise PreconditionViolation(f"the product is not 4-periodic up to degree {c}: {report.verdict.value}")

    if all(_zero(product, i) is True for i in range(1, c)):
        return ProductFactorReport(c, True, {})

    conclusions = {
        "b4_first_is_one": _equals(b1, 4, 1) is True,
        "first_factor_periodic": check_4periodic(b1, c).verdict is Verdict.PERIODIC,
        "second_factor_gap": all(_zero(b2, i) is True for i in range(4, c)),
    }
    low = [b1.bounds(2)[0], b1.bounds(3)[0]]
    if any(low):
        conclusions["low_degrees_split"] = _zero(b2, 2) is True and _zero(b2, 3) is True
    return ProductFactorReport(c, False, conclusions)


class BettiPattern(str, Enum):
    SPHERE_LIKE = "SphereLike"
    CP_LIKE = "CPLike"
    HP_LIKE = "HPLike"
    S2_X_HP_LIKE = "S2xHPLike"
    S3_X_HP_LIKE = "S3xHPLike"


def _pattern(n: int, degrees: Sequence[int]) -> Tuple[int, ...]:
    values = [0] * (n + 1)
    for d in degrees:
        values[d] += 1
    return tuple(values)


def _hp_degrees(top: int, shift: int = 0) -> List[int]:
    return [shift + 4 * i for i in range(top // 4 + 1)]


def pattern_classify(b: BettiVector, n: int) -> Optional[BettiPattern]:
    """Match a complete Betti vector of dimension n against the closed-form patterns."""
    if not b.is_fully_exact() or b.dimension != n:
        return None
    values = b.values()
    candidates: List[Tuple[BettiPattern, Tuple[int, ...]]] = [
        (BettiPattern.SPHERE_LIKE, _pattern(n, [0, n]) if n > 0 else (1,)),
    ]
    if n % 2 == 0:
        candidates.append((BettiPattern.CP_LIKE, _pattern(n, range(0, n + 1, 2))))
    if n % 4 == 0:
        candidates.append((BettiPattern.HP_LIKE, _pattern(n, _hp_degrees(n))))
    if n % 4 == 2 and n >= 2:
        candidates.append((BettiPattern.S2_X_HP_LIKE, _pattern(n, _hp_degrees(n - 2) + _hp_degrees(n - 2, 2))))
    if n % 4 == 3 and n >= 3:
        candidates.append((BettiPattern.S3_X_HP_LIKE, _pattern(n, _hp_degrees(n - 3) + _hp_degrees(n - 3, 3))))
    for label, expected in candidates:
        if values == expected:
            return label
    return None


# ─────────────────────────────────────────────────────────────
# Connected sums of rank-one spaces
# ─────────────────────────────────────────────────────────────

CONNECTED_SUM_DEGREE = 10

_CONNECTED_SUMS = (
    (("CP", 5), ("CP", 5)),
    (("HP", 3), ("HP", 3)),
    (("HP", 4), ("CaP2", None)),
    (("CaP2", None), ("CaP2", None)),
)


def _rank_one(kind: str, q: Optional[int]) -> IrreducibleSpace:
    return IrreducibleSpace(SpaceKind(kind), () if q is None else (q,))


def cheeger_sums(c: int = CONNECTED_SUM_DEGREE) -> List[PeriodicityReport]:
    """Connected sums of projective spaces checked at degree c (all are expected to fail)."""
    reports = []
    for left, right in _CONNECTED_SUMS:
        a, b = _rank_one(*left), _rank_one(*right)
        n = a.dim
        summed = connected_sum_betti(betti_vector(a, n), betti_vector(b, n), n)
        reports.append(check_4periodic(summed, c))
    return reports
