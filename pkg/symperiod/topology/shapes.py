"""
Symperiod Shapes -- which products of symmetric spaces admit the symmetry-rank
bound, and the sweep that checks every periodic catalog product has one of them.

Allowed shapes, with S a (possibly trivial) product of spheres of dimension >= c:

    SpheresOnly                   S
    SpheresTimesCPorGr2           S x R,      R in {CP^q, GrR(2,q)}
    SpheresTimesHPorGr3TimesQ     S x R x Q,  R in {HP^q, GrR(3,q)}, Q in {pt, S^2, S^3}
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Tuple

from symperiod.catalog.spaces import IrreducibleSpace, ProductSpace, SpaceKind, enumerate_spaces, rational_type
from symperiod.core.errors import InvalidParameter, PreconditionViolation
from symperiod.core.logging import TimedOperation, get_logger

from .betti import BettiVector, betti_vector, convolve
from .periodicity import Verdict, check_4periodic, product_factor_analysis

logger = get_logger(__name__)


class ShapeKind(str, Enum):
    SPHERES_ONLY = "SpheresOnly"
    SPHERES_TIMES_CP_OR_GR2 = "SpheresTimesCPorGr2"
    SPHERES_TIMES_HP_OR_GR3_TIMES_Q = "SpheresTimesHPorGr3TimesQ"
    NOT_LISTED = "NotListed"


@dataclass(frozen=True)
class ShapeVerdict:
    shape: ShapeKind
    spheres: Tuple[IrreducibleSpace, ...] = ()
    r: Optional[IrreducibleSpace] = None
    q: Optional[IrreducibleSpace] = None

    @property
    def allowed(self) -> bool:
        return self.shape is not ShapeKind.NOT_LISTED

    def to_dict(self) -> Dict[str, object]:
        return {
            "allowed": self.allowed,
            "shape": self.shape.value,
            "S": [s.label for s in self.spheres],
            "R": self.r.label if self.r else None,
            "Q": self.q.label if self.q else None,
        }


def _is_cp_role(s: IrreducibleSpace) -> bool:
    if s.kind is SpaceKind.CP:
        return True
    return s.kind is SpaceKind.REAL_GR and s.params[0] == 2


def _is_hp_role(s: IrreducibleSpace) -> bool:
    if s.kind is SpaceKind.HP:
        return True
    return s.kind is SpaceKind.REAL_GR and s.params[0] == 3


def _is_q_role(s: IrreducibleSpace) -> bool:
    return s.kind is SpaceKind.SPHERE and s.params[0] in (2, 3)


def shape_verdict(p: ProductSpace, c: int) -> ShapeVerdict:
    """
    Match a product against the allowed shapes after reducing every factor
    to its canonical rational type. CP^1 and HP^1 reduce to spheres, so an
    S^2 factor only ever plays the Q role.
    """
    if c < 16:
        raise InvalidParameter(f"shape verdicts are stated for c >= 16, got {c}")

    atoms: List[IrreducibleSpace] = []
    for factor in p.factors:
        atoms.extend(rational_type(factor))
    spheres = tuple(a for a in atoms if a.kind is SpaceKind.SPHERE and a.params[0] >= c)
    rest = [a for a in atoms if a not in spheres]
    not_listed = ShapeVerdict(ShapeKind.NOT_LISTED)

    if not rest:
        return ShapeVerdict(ShapeKind.SPHERES_ONLY, spheres)
    if len(rest) == 1 and _is_cp_role(rest[0]):
        return ShapeVerdict(ShapeKind.SPHERES_TIMES_CP_OR_GR2, spheres, rest[0])

    hp = [a for a in rest if _is_hp_role(a)]
    if len(hp) != 1:
        return not_listed
    others = [a for a in rest if a is not hp[0]]
    if not others:
        return ShapeVerdict(ShapeKind.SPHERES_TIMES_HP_OR_GR3_TIMES_Q, spheres, hp[0])
    if len(others) == 1 and _is_q_role(others[0]):
        return ShapeVerdict(ShapeKind.SPHERES_TIMES_HP_OR_GR3_TIMES_Q, spheres, hp[0], others[0])
    return not_listed


# ─────────────────────────────────────────────────────────────
# Soundness sweep
# ─────────────────────────────────────────────────────────────


@dataclass
class SweepReport:
    """
    Products that pass the Betti-level check split into those consistent with
    the product lemma and those whose factors contradict it (Betti-level
    look-alikes such as HP^2 x S^12). A counterexample is a product that
    passes both and still has no allowed shape.
    """

    c: int
    max_dim: int
    max_param: int
    products: int = 0
    periodic: int = 0
    undetermined: int = 0
    lemma_rejected: List[str] = field(default_factory=list)
    counterexamples: List[str] = field(default_factory=list)

    @property
    def sound(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> Dict[str, object]:
        return {
            "c": self.c,
            "max_dim": self.max_dim,
            "max_param": self.max_param,
            "products": self.products,
            "periodic": self.periodic,
            "undetermined": self.undetermined,
            "lemma_rejected": self.lemma_rejected,
            "counterexamples": self.counterexamples,
        }


def _lemma_consistent(vectors: Tuple[BettiVector, ...], c: int) -> bool:
    if len(vectors) == 1:
        return True
    first, second = vectors
    if first.bounds(4)[0] < second.bounds(4)[0]:
        first, second = second, first
    try:
        return product_factor_analysis(first, second, c).holds
    except (PreconditionViolation, LookupError):
        return False


def soundness_sweep(
    c: int = 16,
    max_dim: int = 64,
    max_param: int = 20,
    max_factors: int = 2,
    min_dim: int = 16,
) -> SweepReport:
    """Check every product of up to ``max_factors`` catalog spaces with min_dim <= dim <= max_dim."""
    if max_factors not in (1, 2):
        raise InvalidParameter(f"max_factors must be 1 or 2, got {max_factors}")
    report = SweepReport(c, max_dim, max_param)
    spaces = enumerate_spaces(max_dim, max_param)

    @lru_cache(maxsize=None)
    def vector(s: IrreducibleSpace) -> BettiVector:
        return betti_vector(s, c)

    candidates: List[Tuple[IrreducibleSpace, ...]] = [(s,) for s in spaces]
    if max_factors == 2:
        candidates.extend(combinations_with_replacement(spaces, 2))

    with TimedOperation(logger, "soundness_sweep", degree=c, workers=1) as op:
        for factors in candidates:
            dim = sum(f.dim for f in factors)
            if not min_dim <= dim <= max_dim:
                continue
            report.products += 1
            vectors = tuple(vector(f) for f in factors)
            product = vectors[0] if len(vectors) == 1 else convolve(*vectors).truncated(c)
            verdict = check_4periodic(product, c).verdict
            if verdict is Verdict.UNDETERMINED:
                report.undetermined += 1
                continue
            if verdict is not Verdict.PERIODIC:
                continue
            report.periodic += 1
            space = ProductSpace(factors)
            if shape_verdict(space, c).allowed:
                continue
            if _lemma_consistent(vectors, c):
                report.counterexamples.append(space.label)
            else:
                report.lemma_rejected.append(space.label)
        op.extra["cases"] = report.products

    if report.counterexamples:
        logger.warning(
            "Shape verdict counterexamples found",
            extra={"degree": c, "cases": len(report.counterexamples)},
        )
    return report
