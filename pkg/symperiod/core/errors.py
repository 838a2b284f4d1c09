"""
Symperiod error hierarchy.

Input-shaped errors also derive from ValueError so callers that only know
the builtin can still catch them.
"""

from typing import Optional


class SymperiodError(Exception):
    """Base class for every error raised by the package."""


# ─────────────────────────────────────────────────────────────
# Series
# ─────────────────────────────────────────────────────────────


class DegreeCapExceeded(SymperiodError, ValueError):
    pass


class CoefficientOverflow(SymperiodError, ArithmeticError):
    pass


class NonExactDivision(SymperiodError, ArithmeticError):
    pass


class NegativeCoefficient(SymperiodError, ArithmeticError):
    pass


class PolynomialTruncated(SymperiodError):
    pass


# ─────────────────────────────────────────────────────────────
# Catalog / Betti data
# ─────────────────────────────────────────────────────────────


class InvalidParameter(SymperiodError, ValueError):
    pass


class RankMismatch(SymperiodError, ValueError):
    pass


class CatalogSchemaError(SymperiodError):
    pass


class UnknownBetti(SymperiodError, LookupError):
    def __init__(self, degree: int, space: Optional[str] = None):
        self.degree = degree
        self.space = space
        where = f" of {space}" if space else ""
        super().__init__(f"b_{degree}{where} is not determined by the available data")


class NotApplicable(SymperiodError):
    pass


class InsufficientData(SymperiodError):
    pass


# ─────────────────────────────────────────────────────────────
# Periodicity
# ─────────────────────────────────────────────────────────────


class NotFailing(SymperiodError):
    pass


class PreconditionViolation(SymperiodError, ValueError):
    pass


# ─────────────────────────────────────────────────────────────
# Codes
# ─────────────────────────────────────────────────────────────


class RankDeficient(SymperiodError, ValueError):
    pass


class NoEvenSubspace(SymperiodError):
    pass


class SubspaceTooSmall(SymperiodError):
    pass


class NoSupport(SymperiodError):
    pass


# ─────────────────────────────────────────────────────────────
# Surface syntax
# ─────────────────────────────────────────────────────────────


class MatrixFormatError(SymperiodError, ValueError):
    pass


class ExpressionSyntaxError(SymperiodError, ValueError):
    pass
