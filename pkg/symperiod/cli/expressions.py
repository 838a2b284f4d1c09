"""
Space expressions: products of catalog factors joined by ``x``, optionally
two such products joined by the connected-sum operator ``#``.

    S^17 x S^20
    group:E8 x HP^3
    CaP2 # CaP2
"""

import re
from dataclasses import dataclass
from typing import List, Optional, Union

from symperiod.catalog.spaces import IrreducibleSpace, ProductSpace, SpaceKind
from symperiod.core.errors import ExpressionSyntaxError, InvalidParameter
from symperiod.topology.betti import BettiVector, connected_sum_betti, product_betti

_FACTOR = re.compile(
    r"""
      (?P<group>group:(?P<gname>[A-Z][A-Za-z]*\d*(?:\(\d+\))?))
    | (?P<proj>S|CP|HP)\^(?P<pdim>\d+)
    | (?P<cap>CaP2|FII)
    | Gr(?P<gr>[RCH])\(\s*(?P<p>\d+)\s*,\s*(?P<q>\d+)\s*\)
    | (?P<cartan>AII|AI|CI|DIII)\(\s*(?P<n>\d+)\s*\)
    | (?P<exc>EVIII|EVII|EVI|EV|EIX|EIV|EIII|EII|EI|FI)(?![A-Za-z0-9(])
    | (?P<g2>G)(?![A-Za-z0-9(])
    """,
    re.VERBOSE,
)
_OPERATOR = re.compile(r"[x×#]")

_PROJECTIVE = {"S": SpaceKind.SPHERE, "CP": SpaceKind.CP, "HP": SpaceKind.HP}
_GRASSMANNIAN = {"R": SpaceKind.REAL_GR, "C": SpaceKind.COMPLEX_GR, "H": SpaceKind.QUAT_GR}
_CARTAN = {
    "AI": SpaceKind.SU_MOD_SO,
    "AII": SpaceKind.SU_MOD_SP,
    "CI": SpaceKind.SP_MOD_U,
    "DIII": SpaceKind.SO_MOD_U,
}


@dataclass(frozen=True)
class SpaceExpression:
    """A product, or the connected sum of two products."""

    left: ProductSpace
    right: Optional[ProductSpace] = None

    @property
    def is_connected_sum(self) -> bool:
        return self.right is not None

    @property
    def label(self) -> str:
        if self.right is None:
            return self.left.label
        return f"{self.left.label} # {self.right.label}"

    @property
    def dim(self) -> int:
        return self.left.dim

    def betti(self, degree: int) -> BettiVector:
        if self.right is None:
            vector = product_betti(self.left.factors, degree)
        else:
            n = self.left.dim
            vector = connected_sum_betti(
                product_betti(self.left.factors, n),
                product_betti(self.right.factors, self.right.dim),
                n,
            ).truncated(degree)
        return BettiVector(vector.lower, vector.upper, vector.complete, self.label)


def _factor(match: "re.Match[str]") -> IrreducibleSpace:
    if match.group("group"):
        return IrreducibleSpace.lie_group(match.group("gname"))
    if match.group("proj"):
        return IrreducibleSpace(_PROJECTIVE[match.group("proj")], (int(match.group("pdim")),))
    if match.group("cap"):
        return IrreducibleSpace(SpaceKind.CAP2)
    if match.group("gr"):
        params = (int(match.group("p")), int(match.group("q")))
        return IrreducibleSpace(_GRASSMANNIAN[match.group("gr")], params)
    if match.group("cartan"):
        return IrreducibleSpace(_CARTAN[match.group("cartan")], (int(match.group("n")),))
    if match.group("exc"):
        return IrreducibleSpace(SpaceKind(match.group("exc")))
    return IrreducibleSpace(SpaceKind.G2SO4)


def _tokens(text: str) -> List[Union[str, IrreducibleSpace]]:
    out: List[Union[str, IrreducibleSpace]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        op = _OPERATOR.match(text, pos)
        if op:
            out.append("#" if op.group() == "#" else "x")
            pos = op.end()
            continue
        factor = _FACTOR.match(text, pos)
        if not factor:
            raise ExpressionSyntaxError(f"unexpected input at column {pos + 1}: {text[pos:]!r}")
        try:
            out.append(_factor(factor))
        except InvalidParameter as exc:
            raise ExpressionSyntaxError(f"{factor.group()!r}: {exc}") from exc
        pos = factor.end()
    return out


def _product(tokens: List[Union[str, IrreducibleSpace]], text: str) -> ProductSpace:
    if not tokens:
        raise ExpressionSyntaxError(f"empty product in {text!r}")
    factors = tokens[0::2]
    separators = tokens[1::2]
    if any(not isinstance(f, IrreducibleSpace) for f in factors) or any(s != "x" for s in separators):
        raise ExpressionSyntaxError(f"factors must be joined by 'x' in {text!r}")
    if len(tokens) % 2 == 0:
        raise ExpressionSyntaxError(f"dangling 'x' in {text!r}")
    return ProductSpace(tuple(factors))  # type: ignore[arg-type]


def parse_expression(text: str) -> SpaceExpression:
    tokens = _tokens(text)
    sums = [i for i, t in enumerate(tokens) if t == "#"]
    if len(sums) > 1:
        raise ExpressionSyntaxError("the connected sum '#' is binary")
    if not sums:
        return SpaceExpression(_product(tokens, text))
    i = sums[0]
    left, right = _product(tokens[:i], text), _product(tokens[i + 1 :], text)
    if left.dim != right.dim:
        raise ExpressionSyntaxError(f"connected sum of dimensions {left.dim} and {right.dim}")
    return SpaceExpression(left, right)
