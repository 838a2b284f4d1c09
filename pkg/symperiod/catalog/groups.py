"""
Compact simple (and unitary) Lie groups and their rational sphere dimensions.

SO(k) is resolved to the rational type of Spin(k); Spin(2) is the circle.
"""

import re
from functools import lru_cache
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from symperiod.core.errors import InvalidParameter

from .loader import load_catalog, register_catalog_cache


class GroupFamily(str, Enum):
    SP = "Sp"
    SPIN = "Spin"
    SO = "SO"
    U = "U"
    SU = "SU"
    G2 = "G2"
    F4 = "F4"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"


EXCEPTIONAL = (GroupFamily.G2, GroupFamily.F4, GroupFamily.E6, GroupFamily.E7, GroupFamily.E8)

_MIN_PARAM = {
    GroupFamily.SP: 1,
    GroupFamily.SPIN: 2,
    GroupFamily.SO: 2,
    GroupFamily.U: 1,
    GroupFamily.SU: 2,
}

_CLASSICAL_RE = re.compile(r"^(Sp|Spin|SO|SU|U)\((\d+)\)$")


@dataclass(frozen=True)
class GroupDescriptor:
    family: GroupFamily
    param: Optional[int] = None

    def __post_init__(self):
        family = GroupFamily(self.family)
        object.__setattr__(self, "family", family)
        if family in EXCEPTIONAL:
            if self.param is not None:
                raise InvalidParameter(f"{family.value} takes no parameter")
            return
        if self.param is None or self.param < _MIN_PARAM[family]:
            raise InvalidParameter(
                f"{family.value}(k) needs k >= {_MIN_PARAM[family]}, got {self.param}"
            )

    @classmethod
    def parse(cls, text: str) -> "GroupDescriptor":
        text = text.strip()
        match = _CLASSICAL_RE.match(text)
        if match:
            return cls(GroupFamily(match.group(1)), int(match.group(2)))
        try:
            return cls(GroupFamily(text))
        except ValueError:
            raise InvalidParameter(f"unknown group {text!r}") from None

    @property
    def name(self) -> str:
        if self.param is None:
            return self.family.value
        return f"{self.family.value}({self.param})"

    @property
    def rank(self) -> int:
        return len(group_spheres(self))

    @property
    def dimension(self) -> int:
        return sum(group_spheres(self))

    def sort_key(self) -> Tuple[int, int]:
        return (list(GroupFamily).index(self.family), self.param or 0)

    def __str__(self) -> str:
        return self.name


# ─────────────────────────────────────────────────────────────
# Sphere dimensions
# ─────────────────────────────────────────────────────────────

_FORMULAS: Dict[str, Callable[[int], Tuple[int, ...]]] = {
    "symplectic": lambda n: tuple(4 * i - 1 for i in range(1, n + 1)),
    "spin_odd": lambda n: tuple(4 * i - 1 for i in range(1, n + 1)),
    "spin_even": lambda n: tuple(4 * i - 1 for i in range(1, n)) + (2 * n - 1,),
    "unitary": lambda n: tuple(2 * i - 1 for i in range(1, n + 1)),
    "special_unitary": lambda n: tuple(2 * i - 1 for i in range(2, n + 1)),
}


@lru_cache(maxsize=None)
def group_spheres(g: GroupDescriptor) -> Tuple[int, ...]:
    """Rational sphere dimensions n_1, ..., n_s of g, in table order."""
    catalog = load_catalog()
    family = g.family
    if family in EXCEPTIONAL:
        record = catalog.group(family.value)
        return tuple(record.spheres or ())

    k = g.param or 0
    if family in (GroupFamily.SPIN, GroupFamily.SO):
        parity = "odd" if k % 2 else "even"
        record = catalog.group("Spin", parity)
        n = (k - 1) // 2 if k % 2 else k // 2
    else:
        record = catalog.group(family.value)
        n = k
    return _FORMULAS[record.formula or ""](n)


register_catalog_cache(group_spheres.cache_clear)


def sphere_table() -> List[Tuple[str, str, Optional[Tuple[int, ...]]]]:
    """Rows of the sphere-dimension table: (group label, display text, explicit list)."""
    rows = []
    for record in load_catalog().groups:
        if record.spheres is not None:
            text = " ".join(str(d) for d in record.spheres)
        else:
            text = (record.display or "").replace(", ", " ")
        rows.append((record.label, text, record.spheres))
    return rows
