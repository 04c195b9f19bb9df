"""Tabular reports with deterministic CSV and JSON renderings.

Every command funnels its results through one of these tables so that
output bytes are stable across runs and thread counts: rows are assembled
in a fixed order before anything is written, and the JSON form re-parses
and re-serializes to identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

__all__ = ["BOUND_COLUMNS", "Table", "bound_table", "format_members"]

# fixed interchange order for bound-shaped reports
BOUND_COLUMNS = ("target", "method", "value", "certificate")


@dataclass
class Table:
    """An ordered grid of cells; columns fixed at construction."""

    columns: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)
    title: str = ""

    def add(self, *cells) -> None:
        if len(cells) != len(self.columns):
            raise ValueError(f"expected {len(self.columns)} cells, got {len(cells)}")
        self.rows.append(tuple(cells))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow(["" if c is None else c for c in row])
        return buf.getvalue()

    def to_json(self) -> str:
        payload = {
            "title": self.title,
            "columns": list(self.columns),
            "rows": [
                {col: row[i] for i, col in enumerate(self.columns)}
                for row in self.rows
            ],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")


def bound_table(title: str = "") -> Table:
    return Table(BOUND_COLUMNS, title=title)


def format_members(members) -> str:
    """Space-joined index set in braces, e.g. '{1 3 9}'."""
    return "{" + " ".join(str(int(i)) for i in members) + "}"
