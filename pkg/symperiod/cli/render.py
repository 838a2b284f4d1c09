"""
Output rendering for the command line: rich tables for text, csv and json.
"""

import csv
import io
import json
from typing import Any, Dict, List, Mapping, Sequence

from rich.console import Console
from rich.table import Table

FORMATS = ("text", "csv", "json")


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return ", ".join(f"{k}={_cell(v)}" for k, v in value.items())
    return str(value)


def render_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n"


def render_csv(columns: Sequence[str], rows: Sequence[Mapping[str, Any]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(row.get(k)) for k in columns})
    return buf.getvalue()


def render_text(columns: Sequence[str], rows: Sequence[Mapping[str, Any]], title: str = "") -> str:
    table = Table(title=title or None, show_lines=False)
    for name in columns:
        table.add_column(name, overflow="fold")
    for row in rows:
        table.add_row(*(_cell(row.get(k)) for k in columns))
    buf = io.StringIO()
    Console(file=buf, no_color=True, width=160, force_terminal=False).print(table)
    return buf.getvalue()


def render_rows(
    fmt: str,
    columns: Sequence[str],
    rows: Sequence[Mapping[str, Any]],
    title: str = "",
) -> str:
    if fmt == "json":
        return render_json([dict(r) for r in rows])
    if fmt == "csv":
        return render_csv(columns, rows)
    return render_text(columns, rows, title)


def render_record(fmt: str, record: Dict[str, Any], title: str = "") -> str:
    """A single result: json as an object, csv and text as key/value pairs."""
    if fmt == "json":
        return render_json(record)
    pairs: List[Dict[str, Any]] = [{"field": k, "value": v} for k, v in record.items()]
    if fmt == "csv":
        return render_csv(["field", "value"], pairs)
    return render_text(["field", "value"], pairs, title)
