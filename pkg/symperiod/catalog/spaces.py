"""
Simply connected compact irreducible symmetric spaces.

Each space is a family tag plus parameters. Its (G, H) pair, dimension,
equal-rank flag and Betti source are derived from the group data, so the
registry itself stores no numbers beyond the sphere table and witnesses.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from symperiod.core.errors import InvalidParameter

from .groups import GroupDescriptor, GroupFamily, group_spheres
from .loader import WitnessRule, load_catalog


class SpaceKind(str, Enum):
    SPHERE = "Sphere"
    CP = "CP"
    HP = "HP"
    CAP2 = "CaP2"
    REAL_GR = "RealGr"
    COMPLEX_GR = "ComplexGr"
    QUAT_GR = "QuatGr"
    SP_MOD_U = "SpModU"
    SO_MOD_U = "SOModU"
    SU_MOD_SO = "SUModSO"
    SU_MOD_SP = "SUModSp"
    EI = "EI"
    EII = "EII"
    EIII = "EIII"
    EIV = "EIV"
    EV = "EV"
    EVI = "EVI"
    EVII = "EVII"
    EVIII = "EVIII"
    EIX = "EIX"
    FI = "FI"
    G2SO4 = "G2SO4"
    LIE_GROUP = "LieGroup"


class BettiSource(str, Enum):
    COMPUTED = "Computed"
    WITNESS = "Witness"


class Relation(str, Enum):
    EQUAL = "Equal"
    AT_LEAST = "AtLeast"


@dataclass(frozen=True)
class BettiWitness:
    degree: int
    relation: Relation
    value: int
    citation: str


_ARITY = {
    SpaceKind.SPHERE: 1,
    SpaceKind.CP: 1,
    SpaceKind.HP: 1,
    SpaceKind.REAL_GR: 2,
    SpaceKind.COMPLEX_GR: 2,
    SpaceKind.QUAT_GR: 2,
    SpaceKind.SP_MOD_U: 1,
    SpaceKind.SO_MOD_U: 1,
    SpaceKind.SU_MOD_SO: 1,
    SpaceKind.SU_MOD_SP: 1,
}

_MIN_PARAM = {
    SpaceKind.SPHERE: 1,
    SpaceKind.CP: 1,
    SpaceKind.HP: 1,
    SpaceKind.SP_MOD_U: 1,
    SpaceKind.SO_MOD_U: 2,
    SpaceKind.SU_MOD_SO: 2,
    SpaceKind.SU_MOD_SP: 2,
}

_GRASSMANNIANS = (SpaceKind.REAL_GR, SpaceKind.COMPLEX_GR, SpaceKind.QUAT_GR)


def _g(family: GroupFamily, param: Optional[int] = None) -> GroupDescriptor:
    return GroupDescriptor(family, param)


_EXCEPTIONAL_PAIRS: Dict[SpaceKind, Tuple[GroupDescriptor, Tuple[GroupDescriptor, ...]]] = {
    SpaceKind.EI: (_g(GroupFamily.E6), (_g(GroupFamily.SP, 4),)),
    SpaceKind.EII: (_g(GroupFamily.E6), (_g(GroupFamily.SU, 6), _g(GroupFamily.SU, 2))),
    SpaceKind.EIII: (_g(GroupFamily.E6), (_g(GroupFamily.SO, 10), _g(GroupFamily.SO, 2))),
    SpaceKind.EIV: (_g(GroupFamily.E6), (_g(GroupFamily.F4),)),
    SpaceKind.EV: (_g(GroupFamily.E7), (_g(GroupFamily.SU, 8),)),
    SpaceKind.EVI: (_g(GroupFamily.E7), (_g(GroupFamily.SO, 12), _g(GroupFamily.SU, 2))),
    SpaceKind.EVII: (_g(GroupFamily.E7), (_g(GroupFamily.E6), _g(GroupFamily.SO, 2))),
    SpaceKind.EVIII: (_g(GroupFamily.E8), (_g(GroupFamily.SO, 16),)),
    SpaceKind.EIX: (_g(GroupFamily.E8), (_g(GroupFamily.E7), _g(GroupFamily.SU, 2))),
    SpaceKind.FI: (_g(GroupFamily.F4), (_g(GroupFamily.SP, 3), _g(GroupFamily.SU, 2))),
    SpaceKind.CAP2: (_g(GroupFamily.F4), (_g(GroupFamily.SPIN, 9),)),
    SpaceKind.G2SO4: (_g(GroupFamily.G2), (_g(GroupFamily.SO, 4),)),
}


# ─────────────────────────────────────────────────────────────
# Space descriptor
# ─────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class IrreducibleSpace:
    kind: SpaceKind
    params: Tuple[int, ...] = ()
    group: Optional[GroupDescriptor] = None

    def __post_init__(self):
        kind = SpaceKind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

        if kind is SpaceKind.LIE_GROUP:
            if self.group is None or self.params:
                raise InvalidParameter("LieGroup spaces take a group descriptor and no parameters")
            return
        if self.group is not None:
            raise InvalidParameter(f"{kind.value} takes no group descriptor")

        arity = _ARITY.get(kind, 0)
        if len(self.params) != arity:
            raise InvalidParameter(f"{kind.value} takes {arity} parameter(s), got {self.params}")
        if kind in _GRASSMANNIANS:
            p, q = self.params
            if not 1 <= p <= q:
                raise InvalidParameter(f"{kind.value}(p,q) needs 1 <= p <= q, got ({p},{q})")
        elif arity == 1 and self.params[0] < _MIN_PARAM[kind]:
            raise InvalidParameter(
                f"{kind.value}(n) needs n >= {_MIN_PARAM[kind]}, got {self.params[0]}"
            )

    # Convenience constructors

    @classmethod
    def sphere(cls, n: int) -> "IrreducibleSpace":
        return cls(SpaceKind.SPHERE, (n,))

    @classmethod
    def lie_group(cls, name: str) -> "IrreducibleSpace":
        return cls(SpaceKind.LIE_GROUP, (), GroupDescriptor.parse(name))

    # Derived data

    @property
    def pair(self) -> Optional[Tuple[GroupDescriptor, Tuple[GroupDescriptor, ...]]]:
        return quotient_pair(self)

    @property
    def dim(self) -> int:
        return space_dimension(self)

    @property
    def equal_rank(self) -> bool:
        return is_equal_rank(self)

    @property
    def source(self) -> BettiSource:
        return betti_source(self)

    @property
    def label(self) -> str:
        return space_label(self)

    @property
    def quotient_label(self) -> str:
        pair = self.pair
        if pair is None:
            return self.group.name if self.group else self.kind.value
        g, hs = pair
        return f"{g.name}/{'x'.join(h.name for h in hs) or '1'}"

    def sort_key(self) -> Tuple:
        group_key = self.group.sort_key() if self.group else (0, 0)
        return (list(SpaceKind).index(self.kind), self.params, group_key)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class ProductSpace:
    """A product of irreducible factors, as written by the user."""

    factors: Tuple[IrreducibleSpace, ...]

    def __post_init__(self):
        if not self.factors:
            raise InvalidParameter("a product needs at least one factor")
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    @property
    def label(self) -> str:
        return " x ".join(f.label for f in self.factors)

    def __str__(self) -> str:
        return self.label


# ─────────────────────────────────────────────────────────────
# Derived data
# ─────────────────────────────────────────────────────────────


def quotient_pair(s: IrreducibleSpace) -> Optional[Tuple[GroupDescriptor, Tuple[GroupDescriptor, ...]]]:
    """(G, [H_1, ...]) with M = G/H; None for Lie groups. Trivial Spin(1) factors are dropped."""
    kind, p = s.kind, s.params
    if kind is SpaceKind.LIE_GROUP:
        return None
    if kind in _EXCEPTIONAL_PAIRS:
        return _EXCEPTIONAL_PAIRS[kind]

    def spin(k: int) -> Tuple[GroupDescriptor, ...]:
        return (_g(GroupFamily.SPIN, k),) if k >= 2 else ()

    if kind is SpaceKind.SPHERE:
        return _g(GroupFamily.SPIN, p[0] + 1), spin(p[0])
    if kind is SpaceKind.CP:
        return _g(GroupFamily.U, p[0] + 1), (_g(GroupFamily.U, 1), _g(GroupFamily.U, p[0]))
    if kind is SpaceKind.HP:
        return _g(GroupFamily.SP, p[0] + 1), (_g(GroupFamily.SP, 1), _g(GroupFamily.SP, p[0]))
    if kind is SpaceKind.REAL_GR:
        return _g(GroupFamily.SPIN, p[0] + p[1]), spin(p[0]) + spin(p[1])
    if kind is SpaceKind.COMPLEX_GR:
        return _g(GroupFamily.U, p[0] + p[1]), (_g(GroupFamily.U, p[0]), _g(GroupFamily.U, p[1]))
    if kind is SpaceKind.QUAT_GR:
        return _g(GroupFamily.SP, p[0] + p[1]), (_g(GroupFamily.SP, p[0]), _g(GroupFamily.SP, p[1]))
    if kind is SpaceKind.SP_MOD_U:
        return _g(GroupFamily.SP, p[0]), (_g(GroupFamily.U, p[0]),)
    if kind is SpaceKind.SO_MOD_U:
        return _g(GroupFamily.SO, 2 * p[0]), (_g(GroupFamily.U, p[0]),)
    if kind is SpaceKind.SU_MOD_SO:
        return _g(GroupFamily.SU, p[0]), (_g(GroupFamily.SO, p[0]),)
    if kind is SpaceKind.SU_MOD_SP:
        return _g(GroupFamily.SU, 2 * p[0]), (_g(GroupFamily.SP, p[0]),)
    raise InvalidParameter(f"no quotient data for {kind.value}")


def sphere_lists(s: IrreducibleSpace) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Sphere dimensions of G and of H (concatenated over the factors of H)."""
    pair = quotient_pair(s)
    if pair is None:
        return group_spheres(s.group), ()  # type: ignore[arg-type]
    g, hs = pair
    h_spheres: Tuple[int, ...] = ()
    for h in hs:
        h_spheres += group_spheres(h)
    return group_spheres(g), h_spheres


def space_dimension(s: IrreducibleSpace) -> int:
    g_spheres, h_spheres = sphere_lists(s)
    return sum(g_spheres) - sum(h_spheres)


def is_equal_rank(s: IrreducibleSpace) -> bool:
    if s.kind is SpaceKind.LIE_GROUP:
        return False
    g_spheres, h_spheres = sphere_lists(s)
    return len(g_spheres) == len(h_spheres)


_CLOSED_FORMS = (SpaceKind.SPHERE, SpaceKind.CP, SpaceKind.HP, SpaceKind.CAP2, SpaceKind.LIE_GROUP)


def has_closed_form(s: IrreducibleSpace) -> bool:
    return s.kind in _CLOSED_FORMS


def betti_source(s: IrreducibleSpace) -> BettiSource:
    if has_closed_form(s) or is_equal_rank(s):
        return BettiSource.COMPUTED
    canonical = rational_type(s)
    if canonical != (s,) and all(betti_source(f) is BettiSource.COMPUTED for f in canonical):
        return BettiSource.COMPUTED
    return BettiSource.WITNESS


# ─────────────────────────────────────────────────────────────
# Witnesses
# ─────────────────────────────────────────────────────────────


def _rule_applies(rule: WitnessRule, params: Tuple[int, ...]) -> bool:
    if rule.when == "always":
        return True
    if rule.when == "param_at_least":
        return params[0] >= rule.threshold
    p, q = params
    if rule.when == "both_odd_p_at_least":
        return p % 2 == 1 and q % 2 == 1 and p >= rule.threshold
    if rule.when == "p_fixed_q_odd":
        return p == rule.threshold and q % 2 == 1
    return False


def witnesses_for(s: IrreducibleSpace) -> List[BettiWitness]:
    """Betti constraints recorded for a space whose polynomial is not computed."""
    if is_equal_rank(s) or has_closed_form(s):
        return []
    try:
        record = load_catalog().family(s.kind.value)
    except KeyError:
        return []
    out: List[BettiWitness] = []
    for rule in record.witnesses:
        if not _rule_applies(rule, s.params):
            continue
        if rule.pattern == "HP":
            limit = min(s.params[-1], rule.pattern_limit or 0)
            for degree in range(limit + 1):
                value = 1 if degree % 4 == 0 else 0
                out.append(BettiWitness(degree, Relation.EQUAL, value, rule.citation))
        else:
            out.append(BettiWitness(rule.degree or 0, Relation(rule.relation), rule.value, rule.citation))
    return out


# ─────────────────────────────────────────────────────────────
# Labels and rational types
# ─────────────────────────────────────────────────────────────

_PREFIX = {
    SpaceKind.REAL_GR: "GrR",
    SpaceKind.COMPLEX_GR: "GrC",
    SpaceKind.QUAT_GR: "GrH",
    SpaceKind.SU_MOD_SO: "AI",
    SpaceKind.SU_MOD_SP: "AII",
    SpaceKind.SP_MOD_U: "CI",
    SpaceKind.SO_MOD_U: "DIII",
}


def space_label(s: IrreducibleSpace) -> str:
    kind = s.kind
    if kind is SpaceKind.SPHERE:
        return f"S^{s.params[0]}"
    if kind is SpaceKind.CP:
        return f"CP^{s.params[0]}"
    if kind is SpaceKind.HP:
        return f"HP^{s.params[0]}"
    if kind is SpaceKind.LIE_GROUP:
        return f"group:{s.group.name}"  # type: ignore[union-attr]
    if kind is SpaceKind.G2SO4:
        return "G"
    if kind in _PREFIX:
        return f"{_PREFIX[kind]}({','.join(str(p) for p in s.params)})"
    return kind.value


def rational_type(s: IrreducibleSpace) -> Tuple[IrreducibleSpace, ...]:
    """
    Canonical factors under the low-dimensional coincidences of symmetric
    spaces (CP^1 = S^2, HP^1 = S^4, SU(4)/Sp(2) = S^5, ...). Spaces with no
    coincidence map to themselves.
    """
    kind, p = s.kind, s.params
    S = IrreducibleSpace.sphere
    if kind is SpaceKind.CP and p[0] == 1:
        return (S(2),)
    if kind is SpaceKind.HP and p[0] == 1:
        return (S(4),)
    if kind is SpaceKind.SP_MOD_U and p[0] == 1:
        return (S(2),)
    if kind is SpaceKind.SP_MOD_U and p[0] == 2:
        return (IrreducibleSpace(SpaceKind.REAL_GR, (2, 3)),)
    if kind is SpaceKind.SO_MOD_U and p[0] == 2:
        return (S(2),)
    if kind is SpaceKind.SO_MOD_U and p[0] == 3:
        return (IrreducibleSpace(SpaceKind.CP, (3,)),)
    if kind is SpaceKind.SO_MOD_U and p[0] == 4:
        return (IrreducibleSpace(SpaceKind.REAL_GR, (2, 6)),)
    if kind is SpaceKind.SU_MOD_SO and p[0] == 2:
        return (S(2),)
    if kind is SpaceKind.SU_MOD_SP and p[0] == 2:
        return (S(5),)
    if kind is SpaceKind.COMPLEX_GR and p == (2, 2):
        return (IrreducibleSpace(SpaceKind.REAL_GR, (2, 4)),)
    if kind is SpaceKind.REAL_GR and p == (2, 2):
        return (S(2), S(2))
    if kind is SpaceKind.REAL_GR and p[0] == 1:
        return (S(p[1]),)
    if kind is SpaceKind.COMPLEX_GR and p[0] == 1:
        return rational_type(IrreducibleSpace(SpaceKind.CP, (p[1],)))
    if kind is SpaceKind.QUAT_GR and p[0] == 1:
        return rational_type(IrreducibleSpace(SpaceKind.HP, (p[1],)))
    if kind is SpaceKind.LIE_GROUP:
        spheres = group_spheres(s.group)  # type: ignore[arg-type]
        if len(spheres) == 1:
            return (S(spheres[0]),)
    return (s,)


# ─────────────────────────────────────────────────────────────
# Enumeration
# ─────────────────────────────────────────────────────────────

_EXCEPTIONAL_KINDS = (
    SpaceKind.EI,
    SpaceKind.EII,
    SpaceKind.EIII,
    SpaceKind.EIV,
    SpaceKind.EV,
    SpaceKind.EVI,
    SpaceKind.EVII,
    SpaceKind.EVIII,
    SpaceKind.EIX,
    SpaceKind.FI,
    SpaceKind.CAP2,
    SpaceKind.G2SO4,
)

# First parameter enumerated per one-parameter family. Smaller members
# coincide with a sphere, projective space or Grassmannian.
_ENUM_START = {
    SpaceKind.CP: 1,
    SpaceKind.HP: 1,
    SpaceKind.SP_MOD_U: 3,
    SpaceKind.SO_MOD_U: 5,
    SpaceKind.SU_MOD_SO: 3,
    SpaceKind.SU_MOD_SP: 3,
}

_LIE_GROUP_START = {
    GroupFamily.SU: 2,
    GroupFamily.SP: 2,
    GroupFamily.SPIN: 7,
}


def _candidates(max_dim: int, max_param: int) -> Iterator[IrreducibleSpace]:
    for n in range(2, max_dim + 1):
        yield IrreducibleSpace.sphere(n)
    for kind, start in _ENUM_START.items():
        for n in range(start, max_param + 1):
            yield IrreducibleSpace(kind, (n,))
    for kind in _GRASSMANNIANS:
        for p in range(2, max_param + 1):
            for q in range(p, max_param + 1):
                yield IrreducibleSpace(kind, (p, q))
    for kind in _EXCEPTIONAL_KINDS:
        yield IrreducibleSpace(kind)
    for family, start in _LIE_GROUP_START.items():
        for n in range(start, max_param + 1):
            yield IrreducibleSpace(SpaceKind.LIE_GROUP, (), GroupDescriptor(family, n))
    for family in (GroupFamily.G2, GroupFamily.F4, GroupFamily.E6, GroupFamily.E7, GroupFamily.E8):
        yield IrreducibleSpace(SpaceKind.LIE_GROUP, (), GroupDescriptor(family))


def enumerate_spaces(
    max_dim: int,
    max_param: int,
    kinds: Optional[Sequence[SpaceKind]] = None,
) -> List[IrreducibleSpace]:
    """
    Every catalog space with dim <= max_dim and parameters <= max_param.
    Spheres are bounded by dimension only. Output is sorted and duplicate-free.
    """
    if max_dim < 1 or max_param < 1:
        return []
    wanted = set(kinds) if kinds else None
    seen = set()
    out = []
    for s in _candidates(max_dim, max_param):
        if wanted is not None and s.kind not in wanted:
            continue
        if s in seen or s.dim > max_dim:
            continue
        seen.add(s)
        out.append(s)
    return sorted(out, key=IrreducibleSpace.sort_key)
