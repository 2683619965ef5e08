"""Pricing, yield and interest-rate risk analytics for equal-principal
amortizing bonds, plus a Fisher-adjusted risk-free rate builder."""

from .errors import NoRootError, SolverError, ValidationError
from .pricing import PricedSchedule, present_value, yield_to_maturity
from .risk import (
    RateShift,
    RiskMetrics,
    SensitivityRow,
    analyze_bond,
    convexity,
    estimate_shift_convexity,
    estimate_shift_duration,
    exact_shift,
    macaulay_duration,
    modified_duration,
    sensitivity_sweep,
)
from .riskfree import (
    CountryDatum,
    FisherRates,
    InflationForecast,
    RiskFreeReport,
    fisher_nominal,
    fisher_real,
    geometric_mean_inflation,
    risk_free_pipeline,
    weighted_average_ytm,
)
from .schedule import AmortizingBondSpec, CashFlowItem, CashFlowSchedule, generate_schedule

__version__ = "0.1.0"
