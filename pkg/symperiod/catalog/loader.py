"""
Catalog loader -- reads and validates the embedded catalog document.

The document holds one record per Lie group family (sphere dimensions) and
one record per symmetric space family (surface grammar, table row data and
Betti witness rules).
"""

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from symperiod.core.config import load_settings
from symperiod.core.errors import CatalogSchemaError
from symperiod.core.logging import get_logger

logger = get_logger(__name__)

GroupFamilyName = Literal["Sp", "Spin", "U", "SU", "G2", "F4", "E6", "E7", "E8"]
FormulaId = Literal["symplectic", "spin_odd", "spin_even", "unitary", "special_unitary"]
WitnessCondition = Literal["always", "param_at_least", "both_odd_p_at_least", "p_fixed_q_odd"]


# ─────────────────────────────────────────────────────────────
# Schema
# ─────────────────────────────────────────────────────────────


class GroupRecord(BaseModel):
    """One row of the sphere-dimension table."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    family: GroupFamilyName
    label: str
    parity: Optional[Literal["odd", "even"]] = None
    formula: Optional[FormulaId] = None
    display: Optional[str] = None
    spheres: Optional[Tuple[int, ...]] = None

    @model_validator(mode="after")
    def _formula_or_spheres(self):
        if (self.formula is None) == (self.spheres is None):
            raise ValueError(f"{self.label}: exactly one of 'formula' and 'spheres' is required")
        if self.spheres is not None and any(d < 1 or d % 2 == 0 for d in self.spheres):
            raise ValueError(f"{self.label}: sphere dimensions must be positive and odd")
        if self.formula is not None and self.display is None:
            raise ValueError(f"{self.label}: parameterized rows need a 'display' text")
        return self


class WitnessRule(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    when: WitnessCondition
    threshold: int = 0
    degree: Optional[int] = Field(default=None, ge=0)
    relation: Optional[Literal["Equal", "AtLeast"]] = None
    value: int = Field(default=0, ge=0)
    pattern: Optional[Literal["HP"]] = None
    pattern_limit: Optional[int] = Field(default=None, ge=0)
    citation: str

    @model_validator(mode="after")
    def _bound_or_pattern(self):
        has_bound = self.degree is not None and self.relation is not None
        if has_bound == (self.pattern is not None):
            raise ValueError("a witness rule carries either degree/relation or a pattern")
        if self.pattern is not None and self.pattern_limit is None:
            raise ValueError("pattern witnesses need a pattern_limit")
        return self


class FamilyRecord(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    tag: str
    grammar: str
    quotient: str
    params: Tuple[str, ...] = ()
    table: Optional[Literal[2, 3]] = None
    constraint: Optional[str] = None
    representative: Tuple[int, ...] = ()
    cited_terms: Optional[str] = None
    reference: Optional[str] = None
    cited_obstruction: Optional[str] = None
    witnesses: Tuple[WitnessRule, ...] = ()

    @model_validator(mode="after")
    def _table_rows_are_complete(self):
        if self.table is not None:
            if self.cited_obstruction is None:
                raise ValueError(f"{self.tag}: table rows need 'cited_obstruction'")
            if len(self.representative) != len(self.params):
                raise ValueError(f"{self.tag}: representative does not match params {self.params}")
        return self


class CatalogDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    version: int
    groups: Tuple[GroupRecord, ...]
    families: Tuple[FamilyRecord, ...]

    @model_validator(mode="after")
    def _unique_keys(self):
        tags = [f.tag for f in self.families]
        if len(tags) != len(set(tags)):
            raise ValueError("family tags must be unique")
        keys = [(g.family, g.parity) for g in self.groups]
        if len(keys) != len(set(keys)):
            raise ValueError("group rows must be unique per (family, parity)")
        return self

    def family(self, tag: str) -> FamilyRecord:
        for record in self.families:
            if record.tag == tag:
                return record
        raise KeyError(tag)

    def group(self, family: str, parity: Optional[str] = None) -> GroupRecord:
        for record in self.groups:
            if record.family == family and record.parity == parity:
                return record
        raise KeyError((family, parity))

    def table_rows(self, table: int) -> List[FamilyRecord]:
        return [f for f in self.families if f.table == table]


# ─────────────────────────────────────────────────────────────
# Loading
# ─────────────────────────────────────────────────────────────


def _default_text() -> str:
    return resources.files("symperiod.catalog").joinpath("data", "catalog.json").read_text(encoding="utf-8")


def parse_catalog(text: str, source: str = "<string>") -> CatalogDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogSchemaError(f"{source}: invalid JSON ({exc})") from exc
    try:
        return CatalogDocument.model_validate(raw)
    except ValidationError as exc:
        raise CatalogSchemaError(f"{source}: {exc}") from exc


@lru_cache(maxsize=4)
def _load_cached(path: Optional[str]) -> CatalogDocument:
    if path is None:
        document = parse_catalog(_default_text(), "embedded catalog")
    else:
        document = parse_catalog(Path(path).read_text(encoding="utf-8"), path)
    logger.debug(
        "Catalog loaded",
        extra={"cases": len(document.families)},
    )
    return document


_derived_caches: List[Callable[[], None]] = []


def register_catalog_cache(clear: Callable[[], None]) -> None:
    """Register the cache_clear of a cache built from catalog data."""
    _derived_caches.append(clear)


def clear_catalog_caches() -> None:
    """Drop the loaded catalog and every cache derived from it."""
    _load_cached.cache_clear()
    for clear in _derived_caches:
        clear()


def load_catalog(path: Optional[Path] = None) -> CatalogDocument:
    """Load the catalog, honouring SYMPERIOD_CATALOG when no path is given."""
    if path is None:
        path = load_settings(dotenv=False).catalog_path
    return _load_cached(str(path) if path is not None else None)


def catalog_summary(document: CatalogDocument) -> Dict[str, int]:
    return {
        "groups": len(document.groups),
        "families": len(document.families),
        "table_2_rows": len(document.table_rows(2)),
        "table_3_rows": len(document.table_rows(3)),
    }
