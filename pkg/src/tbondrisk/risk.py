"""Duration, convexity and price-change estimates for amortizing bonds.

Convexity is in per-rate-squared units, so it pairs with a yield change
written as a decimal (0.0023 for 23 bp).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from .errors import ValidationError
from .pricing import PricedSchedule, present_value
from .schedule import AmortizingBondSpec, CashFlowSchedule, generate_schedule


@dataclass(frozen=True)
class RiskMetrics:
    yield_: float
    price_pct: float  # fraction of outstanding principal
    macaulay: float
    modified: float
    convexity: float


@dataclass(frozen=True)
class RateShift:
    delta_y: float
    rel_change: float
    abs_change_pct: float  # percentage points of par
    new_price_pct: float  # fraction of outstanding principal


@dataclass(frozen=True)
class SensitivityRow:
    """One yield of a sweep. Prices and deltas are in percent of par,
    errors are signed decimals relative to the exact price."""

    yield_: float
    price_exact: float
    price_dur: float
    price_conv: float
    delta_exact: float
    delta_dur: float
    delta_conv: float
    err_dur: float
    err_conv: float


SWEEP_COLUMNS = (
    "yield",
    "price_exact",
    "price_dur",
    "price_conv",
    "delta_exact",
    "delta_dur",
    "delta_conv",
    "err_dur_pct",
    "err_conv_pct",
)


def _require_positive_price(priced: PricedSchedule) -> None:
    if not priced.price_abs > 0:
        raise ValidationError(f"price must be positive, got {priced.price_abs!r}")


def macaulay_duration(priced: PricedSchedule) -> float:
    _require_positive_price(priced)
    weighted = sum(item.period * pv for item, pv in zip(priced.schedule.items, priced.pv_items))
    return weighted / priced.price_abs


def modified_duration(macaulay: float, y: float) -> float:
    if not y > -1:
        raise ValidationError(f"yield must be > -1, got {y!r}")
    return macaulay / (1.0 + y)


def convexity(priced: PricedSchedule) -> float:
    _require_positive_price(priced)
    weighted = sum(
        (item.period**2 + item.period) * pv
        for item, pv in zip(priced.schedule.items, priced.pv_items)
    )
    return weighted / (priced.price_abs * (1.0 + priced.yield_) ** 2)


def _shift(metrics: RiskMetrics, delta_y: float, rel: float) -> RateShift:
    abs_change = rel * metrics.price_pct * 100.0
    return RateShift(
        delta_y=delta_y,
        rel_change=rel,
        abs_change_pct=abs_change,
        new_price_pct=metrics.price_pct + abs_change / 100.0,
    )


def estimate_shift_duration(metrics: RiskMetrics, delta_y: float) -> RateShift:
    """First-order estimate: dP/P = -D* dy."""
    return _shift(metrics, delta_y, -metrics.modified * delta_y)


def estimate_shift_convexity(metrics: RiskMetrics, delta_y: float) -> RateShift:
    """Second-order estimate: dP/P = -D* dy + C dy^2 / 2."""
    rel = -metrics.modified * delta_y + 0.5 * metrics.convexity * delta_y**2
    return _shift(metrics, delta_y, rel)


def exact_shift(schedule: CashFlowSchedule, anchor_y: float, delta_y: float) -> RateShift:
    base = present_value(schedule, anchor_y)
    moved = present_value(schedule, anchor_y + delta_y)
    abs_change = (moved.price_pct - base.price_pct) * 100.0
    return RateShift(
        delta_y=delta_y,
        rel_change=(moved.price_abs - base.price_abs) / base.price_abs,
        abs_change_pct=abs_change,
        new_price_pct=base.price_pct + abs_change / 100.0,
    )


def metrics_from_priced(priced: PricedSchedule) -> RiskMetrics:
    mac = macaulay_duration(priced)
    return RiskMetrics(
        yield_=priced.yield_,
        price_pct=priced.price_pct,
        macaulay=mac,
        modified=modified_duration(mac, priced.yield_),
        convexity=convexity(priced),
    )


def analyze_bond(spec: AmortizingBondSpec, y: float) -> RiskMetrics:
    return metrics_from_priced(present_value(generate_schedule(spec), y))


def sensitivity_sweep(
    spec: AmortizingBondSpec, anchor_y: float, yield_grid: Sequence[float]
) -> List[SensitivityRow]:
    """Compare exact repricing with the duration and duration+convexity
    estimates at each grid yield, all measured from ``anchor_y``.

    Rows come back in grid order. At the anchor every delta and error is 0.
    """
    if len(yield_grid) == 0:
        raise ValidationError("yield grid is empty")
    schedule = generate_schedule(spec)
    anchor = present_value(schedule, anchor_y)
    metrics = metrics_from_priced(anchor)
    base = anchor.price_pct * 100.0

    rows = []
    for y in yield_grid:
        dy = y - anchor_y
        exact = present_value(schedule, y).price_pct * 100.0 if dy != 0 else base
        dur = estimate_shift_duration(metrics, dy).new_price_pct * 100.0
        conv = estimate_shift_convexity(metrics, dy).new_price_pct * 100.0
        rows.append(
            SensitivityRow(
                yield_=y,
                price_exact=exact,
                price_dur=dur,
                price_conv=conv,
                delta_exact=exact - base,
                delta_dur=dur - base,
                delta_conv=conv - base,
                err_dur=(dur - exact) / exact,
                err_conv=(conv - exact) / exact,
            )
        )
    return rows


def sweep_record(row: SensitivityRow) -> dict:
    """Flatten a row into the CSV column layout (rates and errors in percent)."""
    return {
        "yield": row.yield_ * 100.0,
        "price_exact": row.price_exact,
        "price_dur": row.price_dur,
        "price_conv": row.price_conv,
        "delta_exact": row.delta_exact,
        "delta_dur": row.delta_dur,
        "delta_conv": row.delta_conv,
        "err_dur_pct": row.err_dur * 100.0,
        "err_conv_pct": row.err_conv * 100.0,
    }
