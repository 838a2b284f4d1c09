"""
Symperiod Tables -- row data for the sphere-dimension table and the two
classification tables (classical and exceptional spaces).
"""

import re
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Tuple

from symperiod.algebra.series import format_terms
from symperiod.catalog.groups import sphere_table
from symperiod.catalog.loader import FamilyRecord, load_catalog
from symperiod.catalog.spaces import BettiSource, IrreducibleSpace, SpaceKind, witnesses_for
from symperiod.core.errors import InvalidParameter

from .betti import betti_vector, poincare_polynomial
from .periodicity import check_4periodic

TABLE_DEGREE = 16

_ZERO_LESS = re.compile(r"^0<(b_\d+)$")
_TERM_DEGREE = re.compile(r"t\^(\d+)")


@dataclass(frozen=True)
class SphereRow:
    group: str
    spheres: str


@dataclass(frozen=True)
class ClassificationRow:
    tag: str
    quotient: str
    constraint: Optional[str]
    representative: str
    source: str
    terms: Optional[str]
    cited_terms: Optional[str]
    obstruction: Optional[str]
    cited_obstruction: str
    witnesses: Optional[str]
    reference: Optional[str]
    cited_is_violation: bool

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)


def table_one() -> List[SphereRow]:
    return [SphereRow(label, text) for label, text, _ in sphere_table()]


def normalize_obstruction(text: str) -> str:
    """Tables write some positivity conditions as "0<b_j"; the checker writes "b_j>0"."""
    text = text.replace(" ", "").replace("{", "").replace("}", "")
    return _ZERO_LESS.sub(r"\1>0", text)


def leading_terms(s: IrreducibleSpace, up_to: int) -> str:
    """Positive-degree terms of the Poincaré polynomial through ``up_to``, '+ ...' if more follow."""
    p = poincare_polynomial(s)
    shown = [(d, v) for d, v in p.terms() if 0 < d <= up_to]
    text = format_terms(shown)
    if p.degree > up_to:
        text += " + ..."
    return text


def _cited_degree(text: Optional[str]) -> int:
    """Highest power named in a cited leading-terms column, 0 when there is none."""
    return max((int(d) for d in _TERM_DEGREE.findall(text or "")), default=0)


def _representative(record: FamilyRecord) -> IrreducibleSpace:
    return IrreducibleSpace(SpaceKind(record.tag), tuple(record.representative))


def _row(record: FamilyRecord, c: int) -> ClassificationRow:
    s = _representative(record)
    report = check_4periodic(betti_vector(s, c), c)
    obstruction = report.obstruction.render() if report.obstruction else None
    cited = record.cited_obstruction or ""
    found = {normalize_obstruction(v) for v in report.rendered_violations}
    if obstruction:
        found.add(normalize_obstruction(obstruction))

    computed = s.source is BettiSource.COMPUTED
    terms = None
    if computed:
        upper = report.obstruction.upper_degree if report.obstruction else c
        terms = leading_terms(s, max(upper, _cited_degree(record.cited_terms)))
    witnesses = None if computed else "; ".join(sorted({w.citation for w in witnesses_for(s)}))

    return ClassificationRow(
        tag=record.tag,
        quotient=record.quotient,
        constraint=record.constraint,
        representative=s.label,
        source=s.source.value,
        terms=terms,
        cited_terms=record.cited_terms,
        obstruction=obstruction,
        cited_obstruction=cited,
        witnesses=witnesses or None,
        reference=record.reference,
        cited_is_violation=normalize_obstruction(cited) in found,
    )


def classification_table(table: int, c: int = TABLE_DEGREE) -> List[ClassificationRow]:
    if table not in (2, 3):
        raise InvalidParameter(f"classification tables are 2 and 3, got {table}")
    return [_row(record, c) for record in load_catalog().table_rows(table)]


def table_rows(table: int) -> Tuple[List[str], List[Dict[str, object]]]:
    """(column names, row dicts) for any of the three tables."""
    if table == 1:
        return ["group", "spheres"], [asdict(r) for r in table_one()]
    rows = [r.to_dict() for r in classification_table(table)]
    columns = list(ClassificationRow.__dataclass_fields__)
    return columns, rows
