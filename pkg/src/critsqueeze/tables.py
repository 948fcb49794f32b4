"""CSV tables with unit-tagged headers and JSON metadata sidecars.

Headers are ``name[unit]`` tokens (dimensionless columns use ``[1]``, text
columns have no unit).  Floats are written as their shortest round-trip
representation so files are byte-stable.
"""
from __future__ import annotations

import csv
import io
import json
import math
import re
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import SchemaError

_HEADER = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\[([^\]]*)\])?$")


def package_version() -> str:
    try:
        from importlib.metadata import version

        return version("artifact")
    except Exception:
        return "0.1.0"


@dataclass(frozen=True)
class Column:
    name: str
    unit: str | None = "1"

    @property
    def token(self) -> str:
        return self.name if self.unit is None else f"{self.name}[{self.unit}]"


@dataclass
class ResultTable:
    columns: list
    rows: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def column(self, name: str):
        i = [c.name for c in self.columns].index(name)
        return [r[i] for r in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([c.token for c in self.columns])
        for r in self.rows:
            if len(r) != len(self.columns):
                raise SchemaError(f"row has {len(r)} fields, expected {len(self.columns)}")
            w.writerow([format_value(v) for v in r])
        return buf.getvalue()


def format_value(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if v is None:
        return ""
    return str(v)


def write_table(table: ResultTable, path, sidecar: bool = True) -> Path:
    """Write CSV (and ``<path>.json`` metadata unless disabled); returns the CSV path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        fh.write(table.to_csv())
    if sidecar:
        meta = dict(table.metadata)
        meta.setdefault("code_version", package_version())
        meta.setdefault("timestamp", time.strftime("%Y-%m-%dT%H:%M:%S%z"))
        meta["columns"] = [{"name": c.name, "unit": c.unit} for c in table.columns]
        meta["row_count"] = len(table.rows)
        with open(str(path) + ".json", "w") as fh:
            json.dump(meta, fh, indent=2, sort_keys=True, default=str)
            fh.write("\n")
    return path


def parse_header(tokens) -> list:
    cols = []
    for tok in tokens:
        m = _HEADER.match(tok.strip())
        if not m:
            raise SchemaError(f"malformed column header {tok!r}", column=tok)
        cols.append(Column(m.group(1), m.group(2)))
    return cols


def read_table(path, required=()) -> tuple[dict, dict]:
    """Read a unit-tagged CSV into ({name: array or list}, {name: unit}).

    Numeric columns (those with a unit) become float arrays.  Missing
    ``required`` columns or unparsable cells raise SchemaError naming the column.
    """
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise SchemaError("empty table", column=None)
    cols = parse_header(rows[0])
    names = [c.name for c in cols]
    for r in required:
        if r not in names:
            raise SchemaError(f"missing required column {r!r}", column=r)
    data, units = {}, {}
    for i, c in enumerate(cols):
        cells = []
        for k, row in enumerate(rows[1:], start=2):
            if len(row) != len(cols):
                raise SchemaError(f"line {k}: expected {len(cols)} fields", column=c.name)
            cells.append(row[i])
        units[c.name] = c.unit
        if c.unit is None:
            data[c.name] = cells
            continue
        try:
            vals = np.array([float(x) for x in cells], dtype=float)
        except ValueError:
            raise SchemaError(f"non-numeric value in column {c.name!r}", column=c.name) from None
        if np.any(~np.isfinite(vals)) and not all(math.isnan(v) for v in vals[~np.isfinite(vals)]):
            raise SchemaError(f"infinite value in column {c.name!r}", column=c.name)
        data[c.name] = vals
    return data, units
