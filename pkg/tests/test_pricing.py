from fractions import Fraction

import pytest

from tbondrisk.errors import NoRootError, ValidationError
from tbondrisk.pricing import present_value, yield_to_maturity
from tbondrisk.schedule import generate_schedule

from conftest import bond


def exact_price_pct(principal, rate, periods, y):
    """Rational-arithmetic oracle, independent of the schedule/pricing code."""
    principal, rate, y = Fraction(principal), Fraction(rate), Fraction(y)
    step = principal / periods
    pv = sum(
        (step + rate * (principal - (k - 1) * step)) / (1 + y) ** k for k in range(1, periods + 1)
    )
    return float(pv / principal)


def test_oracle_agrees_with_present_value(issue_schedule):
    for y in ("0.055", "0.0377", "0.1", "0"):
        got = present_value(issue_schedule, float(y)).price_pct
        assert got == pytest.approx(exact_price_pct(100000, "0.02", 10, y), rel=1e-14)


def test_issue_discounting_at_5_5(issue_schedule):
    # 84.33 reproduces the 5.50% column of the sensitivity table; see acceptance for the 84.83 print
    priced = present_value(issue_schedule, 0.055)
    assert priced.price_pct * 100 == pytest.approx(84.330, abs=0.001)


def test_zero_yield_is_sum_of_totals(issue_schedule):
    priced = present_value(issue_schedule, 0.0)
    assert priced.price_abs == pytest.approx(111000.0, rel=1e-12)


def test_rmden10_price(rmden10):
    priced = present_value(generate_schedule(rmden10), 0.0377)
    assert priced.price_pct * 100 == pytest.approx(91.571, abs=0.005)


def test_priced_schedule_invariants(issue_schedule):
    priced = present_value(issue_schedule, 0.042)
    assert priced.price_abs == sum(priced.pv_items)
    for item, pv in zip(issue_schedule.items, priced.pv_items):
        assert pv == item.total / 1.042**item.period
    assert priced.price_pct == priced.price_abs / 100000.0


@pytest.mark.parametrize("y", [-1.0, -1.5, float("nan")])
def test_bad_yield_rejected(issue_schedule, y):
    with pytest.raises(ValidationError):
        present_value(issue_schedule, y)


def test_ytm_rmden10(rmden10):
    y = yield_to_maturity(generate_schedule(rmden10), 0.91571)
    assert y == pytest.approx(0.0377, abs=1e-4)


@pytest.mark.parametrize(
    "principal,periods",
    [(100000.0, 10), (80.0, 8), (20.0, 2), (10.0, 1)],
)
def test_ytm_round_trip_5_5(principal, periods):
    sched = generate_schedule(bond("B", principal, periods))
    price = present_value(sched, 0.055).price_pct
    y = yield_to_maturity(sched, price)
    assert y == pytest.approx(0.055, abs=1e-8)
    assert abs(present_value(sched, y).price_pct - price) < 1e-10


def test_ytm_negative_yield_region():
    sched = generate_schedule(bond("B", 100.0, 5))
    price = present_value(sched, -0.01).price_pct
    assert yield_to_maturity(sched, price) == pytest.approx(-0.01, abs=1e-10)


@pytest.mark.parametrize("price", [0.0, -0.5])
def test_ytm_nonpositive_price(price, rmden10):
    with pytest.raises(ValidationError):
        yield_to_maturity(generate_schedule(rmden10), price)


def test_ytm_unattainable_price(rmden10):
    sched = generate_schedule(rmden10)
    with pytest.raises(NoRootError):
        yield_to_maturity(sched, 1e-9)
    with pytest.raises(NoRootError):
        yield_to_maturity(sched, 1e30)


def test_iteration_cap_raises_solver_error(monkeypatch, rmden10):
    import tbondrisk.pricing as pricing
    from tbondrisk.errors import SolverError

    monkeypatch.setattr(pricing, "MAX_ITER", 2)
    with pytest.raises(SolverError, match="did not converge"):
        yield_to_maturity(generate_schedule(rmden10), 0.91571)
