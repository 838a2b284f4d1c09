"""
Symperiod Series -- exact integer polynomials and truncated power series.

Coefficients are Python ints checked against the signed 64-bit range, and
degrees are capped at MAX_DEGREE. Truncation is explicit metadata: a
polynomial with ``truncation = D`` says nothing about degrees above D.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from symperiod.core.errors import (
    CoefficientOverflow,
    DegreeCapExceeded,
    InvalidParameter,
    NegativeCoefficient,
    NonExactDivision,
    PolynomialTruncated,
)

MAX_DEGREE = 1024
COEFFICIENT_LIMIT = 2**63


# ─────────────────────────────────────────────────────────────
# Types
# ─────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class IntPolynomial:
    """Signed integer polynomial; coeffs[i] is the coefficient of t^i."""

    coeffs: Tuple[int, ...] = ()
    truncation: Optional[int] = None

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        if self.truncation is not None:
            if self.truncation < 0:
                raise InvalidParameter(f"truncation degree must be >= 0, got {self.truncation}")
            if self.truncation > MAX_DEGREE:
                raise DegreeCapExceeded(f"truncation {self.truncation} exceeds cap {MAX_DEGREE}")
            del coeffs[self.truncation + 1 :]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) - 1 > MAX_DEGREE:
            raise DegreeCapExceeded(f"degree {len(coeffs) - 1} exceeds cap {MAX_DEGREE}")
        for c in coeffs:
            if not -COEFFICIENT_LIMIT < c < COEFFICIENT_LIMIT:
                raise CoefficientOverflow(f"coefficient {c} outside the 64-bit range")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_terms(cls, terms: Dict[int, int], truncation: Optional[int] = None):
        if not terms:
            return cls((), truncation)
        top = max(terms)
        if top > MAX_DEGREE:
            raise DegreeCapExceeded(f"degree {top} exceeds cap {MAX_DEGREE}")
        coeffs = [0] * (top + 1)
        for degree, value in terms.items():
            if degree < 0:
                raise InvalidParameter(f"negative degree {degree}")
            coeffs[degree] += value
        return cls(tuple(coeffs), truncation)

    @classmethod
    def one(cls):
        return cls((1,))

    @property
    def complete(self) -> bool:
        return self.truncation is None

    @property
    def degree(self) -> int:
        """Degree of the stored part; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, degree: int) -> int:
        if degree < 0:
            return 0
        if self.truncation is not None and degree > self.truncation:
            raise PolynomialTruncated(f"degree {degree} lies beyond truncation {self.truncation}")
        return self.coeffs[degree] if degree < len(self.coeffs) else 0

    def terms(self) -> Iterator[Tuple[int, int]]:
        for degree, value in enumerate(self.coeffs):
            if value:
                yield degree, value

    def value_at_one(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        text = format_terms(self.terms()) or "0"
        if self.truncation is not None:
            text += f" + O(t^{self.truncation + 1})"
        return text


@dataclass(frozen=True)
class PoincarePolynomial(IntPolynomial):
    """Nonnegative polynomial whose coefficients are Betti numbers."""

    def __post_init__(self):
        super().__post_init__()
        for degree, c in enumerate(self.coeffs):
            if c < 0:
                raise NegativeCoefficient(f"coefficient of t^{degree} is {c}")

    @property
    def betti(self) -> Tuple[int, ...]:
        return self.coeffs


# ─────────────────────────────────────────────────────────────
# Rendering
# ─────────────────────────────────────────────────────────────


def format_term(degree: int, value: int) -> str:
    if degree == 0:
        return str(value)
    power = "t" if degree == 1 else f"t^{degree}"
    if value == 1:
        return power
    if value == -1:
        return f"-{power}"
    return f"{value}{power}"


def format_terms(terms: Iterable[Tuple[int, int]]) -> str:
    """Render (degree, coefficient) pairs as '1 + t^2 + 2t^6'."""
    out = ""
    for degree, value in terms:
        piece = format_term(degree, abs(value) if out else value)
        if not out:
            out = piece
        elif value < 0:
            out += f" - {piece}"
        else:
            out += f" + {piece}"
    return out


# ─────────────────────────────────────────────────────────────
# Operations
# ─────────────────────────────────────────────────────────────


def _min_truncation(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """
    Coefficient-wise convolution. The result is truncated at the smaller of
    the input truncations, and is a PoincarePolynomial when both inputs are.
    """
    cls = PoincarePolynomial if isinstance(a, PoincarePolynomial) and isinstance(b, PoincarePolynomial) else IntPolynomial
    truncation = _min_truncation(a.truncation, b.truncation)
    if a.is_zero() or b.is_zero():
        return cls((), truncation)

    top = a.degree + b.degree
    if truncation is not None:
        top = min(top, truncation)
    elif top > MAX_DEGREE:
        raise DegreeCapExceeded(f"product degree {top} exceeds cap {MAX_DEGREE}")

    out = [0] * (top + 1)
    for i, x in enumerate(a.coeffs):
        if i > top:
            break
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if i + j > top:
                break
            out[i + j] += x * y
    return cls(tuple(out), truncation)


def poly_div_exact(num: IntPolynomial, den: IntPolynomial) -> PoincarePolynomial:
    """
    Exact quotient by synthetic ascending division.

    Raises NonExactDivision when the remainder is nonzero and
    NegativeCoefficient when the quotient is not a Poincaré polynomial.
    """
    if not num.complete or not den.complete:
        raise PolynomialTruncated("exact division needs complete operands")
    if den.is_zero() or den.coeffs[0] not in (1, -1):
        raise InvalidParameter("divisor must have constant term +1 or -1")
    if num.is_zero():
        return PoincarePolynomial(())
    if num.degree < den.degree:
        raise NonExactDivision(f"{num} is not divisible by {den}")

    lead = den.coeffs[0]
    n_q = num.degree - den.degree + 1
    quotient: List[int] = [0] * n_q
    work = list(num.coeffs)
    for k in range(n_q):
        q_k = work[k] * lead
        quotient[k] = q_k
        if q_k:
            for j, d in enumerate(den.coeffs):
                work[k + j] -= q_k * d
    if any(work):
        raise NonExactDivision(f"{num} is not divisible by {den}")
    for degree, c in enumerate(quotient):
        if c < 0:
            raise NegativeCoefficient(f"quotient coefficient of t^{degree} is {c}")
    return PoincarePolynomial(tuple(quotient))


def truncate(p: IntPolynomial, degree: int) -> IntPolynomial:
    if degree < 0:
        raise InvalidParameter(f"truncation degree must be >= 0, got {degree}")
    return type(p)(p.coeffs, _min_truncation(p.truncation, degree))


def is_palindromic(p: IntPolynomial) -> bool:
    if not p.complete:
        raise PolynomialTruncated("palindromicity needs a complete polynomial")
    return p.coeffs == p.coeffs[::-1]


# ─────────────────────────────────────────────────────────────
# Quotients of products of (1 - t^k)
# ─────────────────────────────────────────────────────────────


def one_minus_power(k: int) -> IntPolynomial:
    if k < 1:
        raise InvalidParameter(f"exponent must be positive, got {k}")
    if k > MAX_DEGREE:
        raise DegreeCapExceeded(f"degree {k} exceeds cap {MAX_DEGREE}")
    coeffs = [0] * (k + 1)
    coeffs[0] = 1
    coeffs[k] = -1
    return IntPolynomial(tuple(coeffs))


def product_of_factors(exponents: Iterable[int]) -> IntPolynomial:
    out = IntPolynomial.one()
    for k in sorted(exponents):
        out = poly_mul(out, one_minus_power(k))
    return out


def cancel_common(num: Sequence[int], den: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Remove the common (1 - t^k) factors of numerator and denominator."""
    rest = sorted(den)
    kept = []
    for k in sorted(num):
        if k in rest:
            rest.remove(k)
        else:
            kept.append(k)
    return kept, rest


def quotient_of_factors(num: Sequence[int], den: Sequence[int]) -> PoincarePolynomial:
    """prod(1 - t^a for a in num) / prod(1 - t^b for b in den), exactly."""
    num_left, den_left = cancel_common(num, den)
    return poly_div_exact(product_of_factors(num_left), product_of_factors(den_left))
