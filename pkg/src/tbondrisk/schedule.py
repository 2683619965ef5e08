"""Bond contracts and equal-principal amortization schedules.

Time is modelled in whole annual periods: the first payment falls one
year after valuation. A bond part-way through its life is represented as
a fresh contract on the remaining balance (e.g. 90 outstanding over 9
periods).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import ValidationError


@dataclass(frozen=True)
class AmortizingBondSpec:
    label: str
    outstanding_principal: float
    coupon_rate: float
    periods_remaining: int

    def __post_init__(self):
        if not self.outstanding_principal > 0:
            raise ValidationError(
                f"{self.label}: outstanding_principal must be positive, got {self.outstanding_principal!r}"
            )
        if not self.coupon_rate >= 0:
            raise ValidationError(f"{self.label}: coupon_rate must be >= 0, got {self.coupon_rate!r}")
        if isinstance(self.periods_remaining, bool) or int(self.periods_remaining) != self.periods_remaining:
            raise ValidationError(f"{self.label}: periods_remaining must be an integer")
        if self.periods_remaining < 1:
            raise ValidationError(
                f"{self.label}: periods_remaining must be >= 1, got {self.periods_remaining!r}"
            )
        object.__setattr__(self, "periods_remaining", int(self.periods_remaining))


@dataclass(frozen=True)
class CashFlowItem:
    period: int
    principal: float
    interest: float
    total: float
    balance_after: float


@dataclass(frozen=True)
class CashFlowSchedule:
    spec: AmortizingBondSpec
    items: Tuple[CashFlowItem, ...]

    @property
    def periods(self) -> Tuple[int, ...]:
        return tuple(item.period for item in self.items)

    @property
    def totals(self) -> Tuple[float, ...]:
        return tuple(item.total for item in self.items)

    def undiscounted_total(self) -> float:
        return sum(self.totals)


def generate_schedule(spec: AmortizingBondSpec) -> CashFlowSchedule:
    """Equal principal each period, coupon charged on the balance outstanding
    at the start of the period.

    Per-period principal is ``outstanding_principal / periods_remaining`` with
    no rounding. The last installment absorbs any floating-point residue so
    that principals sum to the outstanding amount and the final balance is 0.
    """
    n = spec.periods_remaining
    principal = spec.outstanding_principal
    installment = principal / n

    items = []
    repaid = 0.0
    for k in range(1, n + 1):
        balance_before = principal - (k - 1) * installment
        interest = spec.coupon_rate * balance_before
        paid = installment if k < n else principal - repaid
        repaid += paid
        balance_after = principal - k * installment if k < n else 0.0
        items.append(
            CashFlowItem(
                period=k,
                principal=paid,
                interest=interest,
                total=paid + interest,
                balance_after=max(balance_after, 0.0),
            )
        )
    return CashFlowSchedule(spec=spec, items=tuple(items))
