"""
Symperiod Betti -- rational Betti vectors of catalog spaces.

Equal-rank quotients use the Borel formula
    P(t) = prod(1 - t^(n_i + 1)) / prod(1 - t^(m_j + 1)),
rank-one spaces and Lie groups use closed forms, and the remaining spaces
carry interval bounds built from their recorded witnesses. Every degree of a
BettiVector holds a [lower, upper] bound; exact degrees have lower == upper.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, List, Optional, Sequence, Tuple

from symperiod.algebra.series import (
    MAX_DEGREE,
    PoincarePolynomial,
    poly_mul,
    quotient_of_factors,
)
from symperiod.catalog.groups import GroupDescriptor, group_spheres
from symperiod.catalog.loader import register_catalog_cache
from symperiod.catalog.spaces import (
    BettiSource,
    IrreducibleSpace,
    Relation,
    SpaceKind,
    betti_source,
    has_closed_form,
    is_equal_rank,
    rational_type,
    sphere_lists,
    witnesses_for,
)
from symperiod.core.errors import (
    CatalogSchemaError,
    DegreeCapExceeded,
    InvalidParameter,
    NotApplicable,
    RankMismatch,
    UnknownBetti,
)

Bound = Tuple[int, Optional[int]]


# ─────────────────────────────────────────────────────────────
# BettiVector
# ─────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class BettiVector:
    """
    Per-degree bounds on b_i for i = 0..horizon. Beyond the horizon every
    b_i is 0 when ``complete`` is set and unknown otherwise. ``upper`` of
    None means unbounded.
    """

    lower: Tuple[int, ...]
    upper: Tuple[Optional[int], ...]
    complete: bool = True
    label: Optional[str] = None

    def __post_init__(self):
        lower = [int(x) for x in self.lower]
        upper = [None if x is None else int(x) for x in self.upper]
        if len(lower) != len(upper):
            raise InvalidParameter("lower and upper bounds must have the same length")
        for i, (lo, hi) in enumerate(zip(lower, upper)):
            if lo < 0 or (hi is not None and hi < lo):
                raise InvalidParameter(f"inconsistent bounds at degree {i}: [{lo}, {hi}]")
        if self.complete:
            while lower and lower[-1] == 0 and upper[-1] == 0:
                lower.pop()
                upper.pop()
        if len(lower) - 1 > MAX_DEGREE:
            raise DegreeCapExceeded(f"Betti vector reaches degree {len(lower) - 1}")
        object.__setattr__(self, "lower", tuple(lower))
        object.__setattr__(self, "upper", tuple(upper))

    @classmethod
    def exact(cls, values: Sequence[int], complete: bool = True, label: Optional[str] = None):
        values = tuple(values)
        return cls(values, values, complete, label)

    @classmethod
    def from_polynomial(cls, p: PoincarePolynomial, label: Optional[str] = None):
        values = list(p.coeffs)
        if p.truncation is not None:
            values += [0] * (p.truncation + 1 - len(values))
        return cls.exact(values, p.complete, label)

    @property
    def horizon(self) -> int:
        return len(self.lower) - 1

    @property
    def known_up_to(self) -> Optional[int]:
        """None for complete vectors, otherwise the last degree with stored bounds."""
        return None if self.complete else self.horizon

    @property
    def dimension(self) -> int:
        """Top degree of a complete vector."""
        if not self.complete:
            raise UnknownBetti(self.horizon + 1, self.label)
        return self.horizon

    def bounds(self, degree: int) -> Bound:
        if degree < 0:
            return 0, 0
        if degree <= self.horizon:
            return self.lower[degree], self.upper[degree]
        return (0, 0) if self.complete else (0, None)

    def is_exact(self, degree: int) -> bool:
        lo, hi = self.bounds(degree)
        return lo == hi

    def is_fully_exact(self) -> bool:
        return self.complete and self.lower == self.upper

    def __getitem__(self, degree: int) -> int:
        lo, hi = self.bounds(degree)
        if lo != hi:
            raise UnknownBetti(degree, self.label)
        return lo

    def values(self, up_to: Optional[int] = None) -> Tuple[int, ...]:
        top = self.horizon if up_to is None else up_to
        return tuple(self[i] for i in range(top + 1))

    def truncated(self, degree: int) -> "BettiVector":
        """Forget everything above ``degree``; complete vectors already inside stay complete."""
        if degree < 0:
            raise InvalidParameter(f"degree must be >= 0, got {degree}")
        if self.complete and self.horizon <= degree:
            return self
        pairs = [self.bounds(i) for i in range(degree + 1)]
        return BettiVector(
            tuple(lo for lo, _ in pairs),
            tuple(hi for _, hi in pairs),
            complete=False,
            label=self.label,
        )

    def to_polynomial(self) -> PoincarePolynomial:
        values = self.values()
        if self.complete:
            return PoincarePolynomial(values)
        return PoincarePolynomial(values, self.horizon)

    def __str__(self) -> str:
        parts = []
        for lo, hi in zip(self.lower, self.upper):
            if lo == hi:
                parts.append(str(lo))
            elif hi is None:
                parts.append(f">={lo}")
            else:
                parts.append(f"{lo}..{hi}")
        tail = "" if self.complete else ", ?"
        return f"({', '.join(parts)}{tail})"


def _mul_upper(x: Optional[int], y: Optional[int]) -> Optional[int]:
    if x == 0 or y == 0:
        return 0
    if x is None or y is None:
        return None
    return x * y


def convolve(a: BettiVector, b: BettiVector) -> BettiVector:
    """Künneth product of two Betti vectors, carried out on bounds."""
    if a.complete and b.complete:
        top = a.horizon + b.horizon
    else:
        top = min(v.horizon for v in (a, b) if not v.complete)
    if top > MAX_DEGREE:
        raise DegreeCapExceeded(f"product reaches degree {top}")

    lower: List[int] = []
    upper: List[Optional[int]] = []
    for k in range(top + 1):
        lo_sum = 0
        hi_sum: Optional[int] = 0
        for i in range(k + 1):
            a_lo, a_hi = a.bounds(i)
            b_lo, b_hi = b.bounds(k - i)
            lo_sum += a_lo * b_lo
            term = _mul_upper(a_hi, b_hi)
            hi_sum = None if hi_sum is None or term is None else hi_sum + term
        lower.append(lo_sum)
        upper.append(hi_sum)

    label = f"{a.label} x {b.label}" if a.label and b.label else None
    return BettiVector(tuple(lower), tuple(upper), a.complete and b.complete, label)


# ─────────────────────────────────────────────────────────────
# Poincaré polynomials
# ─────────────────────────────────────────────────────────────


def poincare_equal_rank(g: GroupDescriptor, h: Sequence[GroupDescriptor]) -> PoincarePolynomial:
    g_spheres = group_spheres(g)
    h_spheres: Tuple[int, ...] = ()
    for factor in h:
        h_spheres += group_spheres(factor)
    return _borel(g_spheres, h_spheres)


def _borel(g_spheres: Sequence[int], h_spheres: Sequence[int]) -> PoincarePolynomial:
    if len(g_spheres) != len(h_spheres):
        raise RankMismatch(f"rank {len(g_spheres)} of G differs from rank {len(h_spheres)} of H")
    return quotient_of_factors([n + 1 for n in g_spheres], [m + 1 for m in h_spheres])


def _geometric(step: int, count: int) -> PoincarePolynomial:
    coeffs = [0] * (step * count + 1)
    for i in range(count + 1):
        coeffs[step * i] = 1
    return PoincarePolynomial(tuple(coeffs))


def closed_form_polynomial(s: IrreducibleSpace) -> PoincarePolynomial:
    """Closed forms for spheres, projective spaces and Lie groups."""
    kind = s.kind
    if kind is SpaceKind.SPHERE:
        n = s.params[0]
        return PoincarePolynomial.from_terms({0: 1, n: 1})
    if kind is SpaceKind.CP:
        return _geometric(2, s.params[0])
    if kind is SpaceKind.HP:
        return _geometric(4, s.params[0])
    if kind is SpaceKind.CAP2:
        return _geometric(8, 2)
    if kind is SpaceKind.LIE_GROUP:
        out = PoincarePolynomial((1,))
        for n in group_spheres(s.group):  # type: ignore[arg-type]
            out = poly_mul(out, PoincarePolynomial.from_terms({0: 1, n: 1}))
        return out
    raise NotApplicable(f"{s.label} has no closed form")


def borel_polynomial(s: IrreducibleSpace) -> PoincarePolynomial:
    if not is_equal_rank(s):
        raise NotApplicable(f"{s.label} is not an equal-rank quotient")
    g_spheres, h_spheres = sphere_lists(s)
    return _borel(g_spheres, h_spheres)


@lru_cache(maxsize=4096)
def poincare_polynomial(s: IrreducibleSpace) -> PoincarePolynomial:
    """Complete Poincaré polynomial of a computed space."""
    if has_closed_form(s):
        return closed_form_polynomial(s)
    if is_equal_rank(s):
        return borel_polynomial(s)
    canonical = rational_type(s)
    if canonical != (s,) and betti_source(s) is BettiSource.COMPUTED:
        out = PoincarePolynomial((1,))
        for factor in canonical:
            out = poly_mul(out, poincare_polynomial(factor))
        return out
    raise NotApplicable(f"{s.label} has no computed Poincaré polynomial")


# ─────────────────────────────────────────────────────────────
# Betti vectors of spaces
# ─────────────────────────────────────────────────────────────


@lru_cache(maxsize=1024)
def _witness_vector(s: IrreducibleSpace) -> BettiVector:
    dim = s.dim
    lower: List[int] = [0] * (dim + 1)
    upper: List[Optional[int]] = [None] * (dim + 1)
    for degree in {0, dim}:
        lower[degree] = upper[degree] = 1
    if dim > 1:
        lower[1] = upper[1] = 0

    for w in witnesses_for(s):
        if w.degree > dim:
            continue
        if w.relation is Relation.EQUAL:
            lower[w.degree] = max(lower[w.degree], w.value)
            hi = upper[w.degree]
            upper[w.degree] = w.value if hi is None else min(hi, w.value)
        else:
            lower[w.degree] = max(lower[w.degree], w.value)

    # Poincaré duality for the closed orientable manifold
    for i in range(dim + 1):
        j = dim - i
        lo = max(lower[i], lower[j])
        his = [h for h in (upper[i], upper[j]) if h is not None]
        hi = min(his) if his else None
        lower[i] = lower[j] = lo
        upper[i] = upper[j] = hi

    for i, (lo, hi) in enumerate(zip(lower, upper)):
        if hi is not None and hi < lo:
            raise CatalogSchemaError(f"witnesses for {s.label} contradict each other at degree {i}")
    return BettiVector(tuple(lower), tuple(upper), True, s.label)


register_catalog_cache(poincare_polynomial.cache_clear)
register_catalog_cache(_witness_vector.cache_clear)


def betti_vector(s: IrreducibleSpace, degree: int) -> BettiVector:
    """
    Betti vector of ``s`` through ``degree``. Computed sources are exact;
    witness sources leave undetermined degrees open.
    """
    if degree < 0:
        raise InvalidParameter(f"degree must be >= 0, got {degree}")
    if betti_source(s) is BettiSource.COMPUTED:
        full = BettiVector.from_polynomial(poincare_polynomial(s), s.label)
    else:
        full = _witness_vector(s)
    return full.truncated(degree)


def product_betti(factors: Iterable[IrreducibleSpace], degree: int) -> BettiVector:
    out: Optional[BettiVector] = None
    for factor in factors:
        vector = betti_vector(factor, degree)
        out = vector if out is None else convolve(out, vector)
    if out is None:
        raise InvalidParameter("a product needs at least one factor")
    return out.truncated(degree)


def connected_sum_betti(a: BettiVector, b: BettiVector, n: int) -> BettiVector:
    """b_i(a # b) = b_i(a) + b_i(b) for 0 < i < n, with b_0 = b_n = 1."""
    if not (a.is_fully_exact() and b.is_fully_exact()):
        raise InvalidParameter("connected sums need complete, exact Betti vectors")
    if a.dimension != n or b.dimension != n:
        raise InvalidParameter(
            f"connected sum of dimensions {a.dimension} and {b.dimension} at n = {n}"
        )
    values = [1] + [a[i] + b[i] for i in range(1, n)] + [1]
    label = f"{a.label} # {b.label}" if a.label and b.label else None
    return BettiVector.exact(values, True, label)


def euler_characteristic_check(s: IrreducibleSpace) -> bool:
    """Sum of Betti numbers against prod(n_i + 1) / prod(m_j + 1)."""
    if not is_equal_rank(s):
        raise NotApplicable(f"{s.label} is not an equal-rank quotient")
    g_spheres, h_spheres = sphere_lists(s)
    expected = Fraction(prod(n + 1 for n in g_spheres), prod(m + 1 for m in h_spheres))
    return poincare_polynomial(s).value_at_one() == expected
