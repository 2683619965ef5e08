import pytest

from tbondrisk.schedule import AmortizingBondSpec, generate_schedule

ACCEPTANCE_RESULTS = []


def bond(label, principal, periods, rate=0.02):
    return AmortizingBondSpec(label, principal, rate, periods)


@pytest.fixture
def issue_schedule():
    return generate_schedule(bond("RMDEN09-issue", 100000.0, 10))


@pytest.fixture
def rmden10():
    return bond("RMDEN10", 100.0, 10)


@pytest.fixture
def rmden09():
    return bond("RMDEN09", 90.0, 9)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
