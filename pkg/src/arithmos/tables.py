"""Text, JSON and CSV forms of a classification table.

The CSV columns are fixed: ``n, plane_class, side_or_figure, solid_class,
line_kind``. A square's ``side_or_figure`` is its side (``3``); an oblong's is
its canonical rectangle (``1x15``). Cube sides are not stored in CSV; the
loader recovers them from n.
"""

from __future__ import annotations

import csv
import io
import json

from .classify import (
    ClassificationTable,
    CubeEquilateral,
    Oblong,
    Parallelepipedal,
    SquareEquilateral,
    TableRow,
    power_count,
)
from .euclid import integer_root

__all__ = [
    "CSV_COLUMNS",
    "figure_text",
    "line_kind_of",
    "table_from_csv",
    "table_from_json",
    "table_to_csv",
    "table_to_dict",
    "table_to_json",
    "table_to_text",
]

CSV_COLUMNS = ("n", "plane_class", "side_or_figure", "solid_class", "line_kind")


def line_kind_of(row: TableRow) -> str:
    """Kind of the line whose square is ``row.n``."""
    return "Length" if isinstance(row.plane, SquareEquilateral) else "Power"


def figure_text(sides) -> str:
    return "x".join(str(s) for s in sides)


def _side_or_figure(row: TableRow) -> str:
    if isinstance(row.plane, SquareEquilateral):
        return str(row.plane.side)
    return figure_text(row.plane.canonical_figure)


def table_to_dict(table: ClassificationTable) -> dict:
    return {
        "max": table.max,
        "power_count": power_count(table.max),
        "rows": [
            {
                "n": r.n,
                "plane_class": r.plane.name,
                "plane_figure": list(r.plane.figure),
                "solid_class": r.solid.name,
                "solid_figure": list(r.solid.figure),
                "line_kind": line_kind_of(r),
            }
            for r in table.rows
        ],
    }


def table_to_json(table: ClassificationTable) -> str:
    return json.dumps(table_to_dict(table), indent=2) + "\n"


def table_to_csv(table: ClassificationTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in table.rows:
        writer.writerow(
            [r.n, r.plane.name, _side_or_figure(r), r.solid.name, line_kind_of(r)]
        )
    return buf.getvalue()


def table_to_text(table: ClassificationTable) -> str:
    records = [CSV_COLUMNS] + [
        (str(r.n), r.plane.name, _side_or_figure(r), r.solid.name, line_kind_of(r))
        for r in table.rows
    ]
    widths = [max(len(rec[i]) for rec in records) for i in range(len(CSV_COLUMNS))]
    lines = ["  ".join(v.ljust(w) for v, w in zip(rec, widths)).rstrip() for rec in records]
    squares = table.max - power_count(table.max)
    lines.append("")
    lines.append(
        f"powers (non-squares) in 1..{table.max}: {power_count(table.max)}; squares: {squares}"
    )
    return "\n".join(lines) + "\n"


def _plane(name: str, n: int, sides: list[int]):
    if name == "SquareEquilateral":
        return SquareEquilateral(sides[0])
    if name == "Oblong":
        return Oblong(tuple(sides))
    raise ValueError(f"unknown plane class {name!r}")


def _solid(name: str, n: int, sides: list[int] | None):
    if name == "CubeEquilateral":
        side = sides[0] if sides else integer_root(n, 3)
        if side is None:
            raise ValueError(f"{n} is labelled a cube but is not one")
        return CubeEquilateral(side)
    if name == "Parallelepipedal":
        return Parallelepipedal(tuple(sides) if sides else (1, 1, n))
    raise ValueError(f"unknown solid class {name!r}")


def table_from_json(text: str) -> ClassificationTable:
    data = json.loads(text)
    rows = tuple(
        TableRow(
            r["n"],
            _plane(r["plane_class"], r["n"], r["plane_figure"]),
            _solid(r["solid_class"], r["n"], r["solid_figure"]),
        )
        for r in data["rows"]
    )
    return ClassificationTable(max=data["max"], rows=rows)


def table_from_csv(text: str) -> ClassificationTable:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    rows = []
    for rec in reader:
        n = int(rec["n"])
        sides = [int(s) for s in rec["side_or_figure"].split("x")]
        rows.append(TableRow(n, _plane(rec["plane_class"], n, sides), _solid(rec["solid_class"], n, None)))
    return ClassificationTable(max=len(rows), rows=tuple(rows))
