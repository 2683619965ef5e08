"""Flat-yield discounting and yield-to-maturity solving.

Rates are decimals throughout (0.0377, not 3.77). ``price_pct`` is a
decimal fraction of outstanding principal.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Tuple

from .errors import NoRootError, SolverError, ValidationError
from .schedule import CashFlowSchedule

YIELD_BRACKET = (-0.99, 10.0)
PRICE_TOL = 1e-12
MAX_ITER = 200


@dataclass(frozen=True)
class PricedSchedule:
    schedule: CashFlowSchedule
    yield_: float
    pv_items: Tuple[float, ...]
    price_abs: float
    price_pct: float


def _check_yield(y: float) -> None:
    if not y > -1.0 or math.isnan(y):
        raise ValidationError(f"yield must be > -1, got {y!r}")


def present_value(schedule: CashFlowSchedule, y: float) -> PricedSchedule:
    _check_yield(y)
    base = 1.0 + y
    pv_items = tuple(item.total / base**item.period for item in schedule.items)
    price_abs = sum(pv_items)
    return PricedSchedule(
        schedule=schedule,
        yield_=y,
        pv_items=pv_items,
        price_abs=price_abs,
        price_pct=price_abs / schedule.spec.outstanding_principal,
    )


def _price_and_slope(schedule: CashFlowSchedule, y: float) -> Tuple[float, float]:
    # both in fraction-of-principal units
    base = 1.0 + y
    price = 0.0
    slope = 0.0
    for item in schedule.items:
        pv = item.total / base**item.period
        price += pv
        slope -= item.period * pv / base
    scale = schedule.spec.outstanding_principal
    return price / scale, slope / scale


def yield_to_maturity(schedule: CashFlowSchedule, market_price_pct: float) -> float:
    """Solve for the flat annual yield that reprices ``schedule`` to
    ``market_price_pct`` (fraction of outstanding principal).

    Safeguarded Newton: the price-yield map is strictly decreasing, so a
    sign-changing bracket is maintained and any Newton step leaving it is
    replaced by bisection.
    """
    if not market_price_pct > 0 or math.isinf(market_price_pct):
        raise ValidationError(f"market price must be positive and finite, got {market_price_pct!r}")

    lo, hi = YIELD_BRACKET
    f_lo = _price_and_slope(schedule, lo)[0] - market_price_pct
    f_hi = _price_and_slope(schedule, hi)[0] - market_price_pct
    if f_lo < 0 or f_hi > 0:
        raise NoRootError(
            f"price {market_price_pct!r} not attainable for yields in [{lo}, {hi}]"
        )
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi

    tol = PRICE_TOL * max(1.0, market_price_pct)
    y = 0.5 * (lo + hi)
    for _ in range(MAX_ITER):
        price, slope = _price_and_slope(schedule, y)
        f = price - market_price_pct
        if abs(f) < tol:
            return y
        if f > 0:
            lo = y
        else:
            hi = y
        step = y - f / slope if slope < 0 else math.nan
        y = step if lo < step < hi else 0.5 * (lo + hi)
        if hi - lo <= 4 * sys.float_info.epsilon * max(1.0, abs(y)):
            break

    price = _price_and_slope(schedule, y)[0]
    if abs(price - market_price_pct) < tol:
        return y
    raise SolverError(
        f"yield solver did not converge within {MAX_ITER} iterations "
        f"(last y={y!r}, residual={price - market_price_pct!r})"
    )
