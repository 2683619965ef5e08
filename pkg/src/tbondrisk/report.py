"""Report envelope and its table / CSV / JSON encodings."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

FORMATS = ("table", "csv", "json")

# digits kept in machine-readable output; keeps bytes stable across runs
EXPORT_DIGITS = 10

DISPLAY_DIGITS = {
    "price": 3,
    "delta": 3,
    "err": 4,
    "D": 2,
    "Dmod": 2,
    "Conv": 2,
    "macaulay": 2,
    "modified": 2,
    "convexity": 2,
    "rate": 2,
    "money": 2,
}

_COLUMN_KIND = {
    "yield": "rate",
    "ytm_pct": "rate",
    "yield_pct": "rate",
    "weighted_ytm_pct": "rate",
    "foreign_inflation_pct": "rate",
    "real_rate_pct": "rate",
    "domestic_inflation_pct": "rate",
    "domestic_nominal_pct": "rate",
    "principal": "money",
    "interest": "money",
    "total": "money",
    "balance_after": "money",
    "pv": "money",
    "price_abs": "money",
    "npv_pct": "price",
    "npv_abs": "money",
}


def display_digits(column: str) -> int:
    kind = _COLUMN_KIND.get(column)
    if kind is None:
        if column in DISPLAY_DIGITS:
            kind = column
        else:
            kind = column.split("_", 1)[0]
    return DISPLAY_DIGITS.get(kind, 4)


@dataclass(frozen=True)
class ReportEnvelope:
    command: str
    inputs: Dict[str, Any]
    rows: List[Dict[str, Any]]
    format: str = "table"
    footer: Dict[str, Any] = field(default_factory=dict)
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if not self.rows:
            raise ValueError("report has no rows")

    @property
    def columns(self) -> List[str]:
        return list(self.rows[0])


def _export(value):
    if isinstance(value, float):
        value = round(value, EXPORT_DIGITS)
        return 0.0 if value == 0 else value
    return value


def _export_text(value) -> str:
    if isinstance(value, float):
        return f"{_export(value):.{EXPORT_DIGITS}f}"
    return str(value)


def _display_text(column: str, value) -> str:
    if isinstance(value, float):
        text = f"{value:.{display_digits(column)}f}"
        return text[1:] if text.startswith("-") and float(text) == 0 else text
    return str(value)


def render_table(env: ReportEnvelope) -> str:
    cols = env.columns
    cells = [[_display_text(c, row[c]) for c in cols] for row in env.rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
    numeric = [isinstance(env.rows[0][c], (int, float)) for c in cols]

    def fmt(values: Sequence[str]) -> str:
        parts = [v.rjust(w) if num else v.ljust(w) for v, w, num in zip(values, widths, numeric)]
        return "  ".join(parts).rstrip()

    lines = [fmt(cols), fmt(["-" * w for w in widths])]
    lines.extend(fmt(r) for r in cells)
    for key, value in env.footer.items():
        lines.append(f"{key}: {_display_text(key, value)}")
    for note in env.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def render_csv(env: ReportEnvelope) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(env.columns)
    for row in env.rows:
        writer.writerow([_export_text(row[c]) for c in env.columns])
    if env.footer:
        writer.writerow([])
        for key, value in env.footer.items():
            writer.writerow([key, _export_text(value)])
    return buf.getvalue()


def render_json(env: ReportEnvelope) -> str:
    payload = {
        "command": env.command,
        "format": "json",
        "inputs": {k: _export(v) for k, v in env.inputs.items()},
        "rows": [{k: _export(v) for k, v in row.items()} for row in env.rows],
    }
    if env.footer:
        payload["footer"] = {k: _export(v) for k, v in env.footer.items()}
    if env.notes:
        payload["notes"] = list(env.notes)
    return json.dumps(payload, indent=2) + "\n"


def render(env: ReportEnvelope) -> str:
    return {"table": render_table, "csv": render_csv, "json": render_json}[env.format](env)
