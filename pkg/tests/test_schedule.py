import pytest

from tbondrisk.errors import ValidationError
from tbondrisk.schedule import AmortizingBondSpec, generate_schedule

from conftest import bond

# RMDEN09 at issue, 100000 nominal: principal, interest, total, remaining debt
ISSUE_PLAN = [
    (10000, 2000, 12000, 90000),
    (10000, 1800, 11800, 80000),
    (10000, 1600, 11600, 70000),
    (10000, 1400, 11400, 60000),
    (10000, 1200, 11200, 50000),
    (10000, 1000, 11000, 40000),
    (10000, 800, 10800, 30000),
    (10000, 600, 10600, 20000),
    (10000, 400, 10400, 10000),
    (10000, 200, 10200, 0),
]


def _row(item):
    return (item.principal, item.interest, item.total, item.balance_after)


def test_issue_plan(issue_schedule):
    assert issue_schedule.periods == tuple(range(1, 11))
    for item, expected in zip(issue_schedule.items, ISSUE_PLAN):
        assert _row(item) == pytest.approx(expected, abs=1e-9)


def test_remaining_nine_periods_match_issue_plan_tail():
    sched = generate_schedule(bond("RMDEN09", 90000.0, 9))
    assert _row(sched.items[0]) == pytest.approx((10000, 1800, 11800, 80000))
    for item, expected in zip(sched.items, ISSUE_PLAN[1:]):
        assert _row(item) == pytest.approx(expected, abs=1e-9)


def test_zero_coupon_single_period():
    sched = generate_schedule(bond("Z", 100.0, 1, rate=0.0))
    assert [_row(i) for i in sched.items] == [(100.0, 0.0, 100.0, 0.0)]


def test_interest_total_is_arithmetic_series(issue_schedule):
    assert sum(i.interest for i in issue_schedule.items) == pytest.approx(11000.0)
    assert issue_schedule.undiscounted_total() == pytest.approx(111000.0)


@pytest.mark.parametrize("principal,periods", [(100.0, 3), (1.0, 7), (12345.67, 29), (0.3, 10)])
def test_uneven_division_sums_exactly(principal, periods):
    sched = generate_schedule(bond("X", principal, periods, rate=0.035))
    assert sum(i.principal for i in sched.items) == principal
    assert sched.items[-1].balance_after == 0.0
    for item in sched.items:
        assert item.total == item.principal + item.interest
        assert item.balance_after >= 0
    balances = [principal] + [i.balance_after for i in sched.items[:-1]]
    for item, before in zip(sched.items, balances):
        assert item.interest == pytest.approx(0.035 * before, rel=1e-12, abs=1e-15)


def test_totals_decrease_with_coupon_and_are_flat_without():
    totals = generate_schedule(bond("A", 100.0, 6, rate=0.04)).totals
    assert all(a > b for a, b in zip(totals, totals[1:]))
    flat = generate_schedule(bond("B", 100.0, 6, rate=0.0)).totals
    # last installment absorbs division residue
    assert flat == pytest.approx([100.0 / 6] * 6, rel=1e-15)


def test_pure():
    spec = bond("P", 50.0, 5)
    assert generate_schedule(spec) == generate_schedule(spec)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(outstanding_principal=0.0, coupon_rate=0.02, periods_remaining=5),
        dict(outstanding_principal=-1.0, coupon_rate=0.02, periods_remaining=5),
        dict(outstanding_principal=100.0, coupon_rate=-0.01, periods_remaining=5),
        dict(outstanding_principal=100.0, coupon_rate=0.02, periods_remaining=0),
        dict(outstanding_principal=100.0, coupon_rate=0.02, periods_remaining=2.5),
    ],
)
def test_invalid_specs_rejected(kwargs):
    with pytest.raises(ValidationError):
        AmortizingBondSpec(label="bad", **kwargs)
