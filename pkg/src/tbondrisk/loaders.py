"""Bond registry (JSON) and country yield table (CSV) readers."""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Union

from .errors import ValidationError
from .riskfree import CountryDatum
from .schedule import AmortizingBondSpec

PathLike = Union[str, Path]

REGISTRY_FIELDS = ("label", "outstanding_principal", "coupon_rate", "periods_remaining")
COUNTRY_COLUMNS = ("country", "ytm_pct", "gdp")


@dataclass(frozen=True)
class BondRegistry:
    bonds: Dict[str, AmortizingBondSpec]
    quoted_ytm: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        for label, y in self.quoted_ytm.items():
            if label not in self.bonds:
                raise ValidationError(f"quoted yield for unknown bond {label!r}")
            if not y > -1:
                raise ValidationError(f"{label}: quoted_ytm must be > -1, got {y!r}")

    def get(self, label: str) -> AmortizingBondSpec:
        try:
            return self.bonds[label]
        except KeyError:
            known = ", ".join(self.bonds) or "none"
            raise ValidationError(f"unknown bond label {label!r} (known: {known})") from None

    def quoted(self, label: str) -> Optional[float]:
        self.get(label)
        return self.quoted_ytm.get(label)

    @property
    def labels(self) -> List[str]:
        return list(self.bonds)


def bundled_registry_path() -> Path:
    return Path(str(resources.files("tbondrisk").joinpath("data/registry.json")))


def bundled_countries_path() -> Path:
    return Path(str(resources.files("tbondrisk").joinpath("data/countries_2009.csv")))


def _number(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{what} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"{what} must be finite")
    return value


def parse_registry(entries) -> BondRegistry:
    if not isinstance(entries, list):
        raise ValidationError("bond registry must be a JSON array of objects")
    bonds: Dict[str, AmortizingBondSpec] = {}
    quoted: Dict[str, float] = {}
    for idx, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise ValidationError(f"registry entry {idx} is not an object")
        missing = [k for k in REGISTRY_FIELDS if k not in entry]
        if missing:
            raise ValidationError(f"registry entry {idx} missing field(s): {', '.join(missing)}")
        label = entry["label"]
        if not isinstance(label, str) or not label:
            raise ValidationError(f"registry entry {idx}: label must be a non-empty string")
        if label in bonds:
            raise ValidationError(f"duplicate bond label {label!r}")
        periods = entry["periods_remaining"]
        if isinstance(periods, bool) or not isinstance(periods, int):
            raise ValidationError(f"{label}: periods_remaining must be an integer, got {periods!r}")
        bonds[label] = AmortizingBondSpec(
            label=label,
            outstanding_principal=_number(entry["outstanding_principal"], f"{label}: outstanding_principal"),
            coupon_rate=_number(entry["coupon_rate"], f"{label}: coupon_rate"),
            periods_remaining=periods,
        )
        if entry.get("quoted_ytm") is not None:
            quoted[label] = _number(entry["quoted_ytm"], f"{label}: quoted_ytm")
    return BondRegistry(bonds=bonds, quoted_ytm=quoted)


def load_registry(path: Optional[PathLike] = None) -> BondRegistry:
    path = Path(path) if path is not None else bundled_registry_path()
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read registry {path}: {exc.strerror or exc}") from None
    try:
        entries = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return parse_registry(entries)


def load_countries(path: Optional[PathLike] = None) -> List[CountryDatum]:
    """Read ``country,ytm_pct,gdp`` rows; yields are converted from percent."""
    path = Path(path) if path is not None else bundled_countries_path()
    try:
        fh = path.open(newline="", encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read countries file {path}: {exc.strerror or exc}") from None
    with fh:
        reader = csv.DictReader(fh)
        header = [h.strip() for h in (reader.fieldnames or [])]
        for col in COUNTRY_COLUMNS:
            if col not in header:
                raise ValidationError(f"{path}: missing required column {col!r}")
        reader.fieldnames = header
        data = []
        for row in reader:
            line = reader.line_num
            try:
                name = (row["country"] or "").strip()
                if not name:
                    raise ValueError("empty country name")
                ytm = float(row["ytm_pct"]) / 100.0
                gdp = float(row["gdp"])
                if not (math.isfinite(ytm) and math.isfinite(gdp)):
                    raise ValueError("non-finite value")
                data.append(CountryDatum(country=name, ytm_10y=ytm, gdp=gdp))
            except (TypeError, ValueError) as exc:
                raise ValidationError(f"{path}: malformed row at line {line}: {exc}") from None
    if not data:
        raise ValidationError(f"{path}: no country rows")
    return data
