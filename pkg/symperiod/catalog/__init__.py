"""
Symperiod Catalog -- Lie group sphere dimensions and the registry of
simply connected compact irreducible symmetric spaces.
"""

from .groups import GroupDescriptor, GroupFamily, group_spheres
from .spaces import (
    BettiSource,
    BettiWitness,
    IrreducibleSpace,
    ProductSpace,
    Relation,
    SpaceKind,
    enumerate_spaces,
    rational_type,
    space_dimension,
    witnesses_for,
)

__all__ = [
    "GroupDescriptor",
    "GroupFamily",
    "group_spheres",
    "BettiSource",
    "BettiWitness",
    "IrreducibleSpace",
    "ProductSpace",
    "Relation",
    "SpaceKind",
    "enumerate_spaces",
    "rational_type",
    "space_dimension",
    "witnesses_for",
]
