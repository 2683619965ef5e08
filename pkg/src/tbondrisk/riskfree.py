"""Domestic risk-free rate built from foreign sovereign yields.

The foreign 10y yields are GDP-weighted into one nominal rate, deflated
with foreign expected inflation and re-inflated with domestic expected
inflation, both steps via the multiplicative Fisher relation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

from .errors import ValidationError

PPP_ASSUMPTION = "purchasing power parity between the two currencies is assumed constant over the horizon"


@dataclass(frozen=True)
class CountryDatum:
    country: str
    ytm_10y: float
    gdp: float

    def __post_init__(self):
        if not self.gdp > 0:
            raise ValidationError(f"{self.country}: gdp must be positive, got {self.gdp!r}")
        if not self.ytm_10y > -1:
            raise ValidationError(f"{self.country}: ytm must be > -1, got {self.ytm_10y!r}")


@dataclass(frozen=True)
class FisherRates:
    nominal: float
    real: float
    inflation: float


@dataclass(frozen=True)
class InflationForecast:
    annual_rates: Tuple[float, ...]

    def __post_init__(self):
        rates = tuple(float(r) for r in self.annual_rates)
        if not rates:
            raise ValidationError("inflation forecast is empty")
        for r in rates:
            if not r > -1:
                raise ValidationError(f"inflation rate must be > -1, got {r!r}")
        object.__setattr__(self, "annual_rates", rates)


@dataclass(frozen=True)
class RiskFreeReport:
    weighted_ytm: float
    foreign_inflation: float
    real_rate: float
    domestic_inflation: float
    domestic_nominal: float
    assumption: str = PPP_ASSUMPTION

    @property
    def foreign(self) -> FisherRates:
        return FisherRates(self.weighted_ytm, self.real_rate, self.foreign_inflation)

    @property
    def domestic(self) -> FisherRates:
        return FisherRates(self.domestic_nominal, self.real_rate, self.domestic_inflation)


def gdp_weights(data: Sequence[CountryDatum]) -> Tuple[float, ...]:
    if not data:
        raise ValidationError("no country data supplied")
    total = math.fsum(d.gdp for d in data)
    return tuple(d.gdp / total for d in data)


def weighted_average_ytm(data: Sequence[CountryDatum]) -> float:
    weights = gdp_weights(data)
    return math.fsum(w * d.ytm_10y for w, d in zip(weights, data))


def _check_rate(name: str, r: float) -> None:
    if not r > -1:
        raise ValidationError(f"{name} must be > -1, got {r!r}")


def fisher_real(nominal: float, inflation: float) -> float:
    _check_rate("nominal rate", nominal)
    _check_rate("inflation", inflation)
    # (1+n)/(1+i) - 1, rearranged to avoid cancellation
    return (nominal - inflation) / (1.0 + inflation)


def fisher_nominal(real: float, inflation: float) -> float:
    _check_rate("real rate", real)
    _check_rate("inflation", inflation)
    return real + inflation + real * inflation


def geometric_mean_inflation(forecast: Union[InflationForecast, Iterable[float]]) -> float:
    if not isinstance(forecast, InflationForecast):
        forecast = InflationForecast(tuple(forecast))
    rates = forecast.annual_rates
    if len(rates) == 1:
        return rates[0]
    return math.expm1(math.fsum(math.log1p(r) for r in rates) / len(rates))


def _as_forecast(value: Union[InflationForecast, float, Iterable[float]]) -> InflationForecast:
    # a bare number is an already-averaged rate
    if isinstance(value, InflationForecast):
        return value
    if isinstance(value, (int, float)):
        return InflationForecast((float(value),))
    return InflationForecast(tuple(value))


def risk_free_pipeline(
    data: Sequence[CountryDatum],
    foreign_inflation: Union[InflationForecast, float, Iterable[float]],
    domestic_inflation: Union[InflationForecast, float, Iterable[float]],
) -> RiskFreeReport:
    nominal = weighted_average_ytm(data)
    i_foreign = geometric_mean_inflation(_as_forecast(foreign_inflation))
    i_domestic = geometric_mean_inflation(_as_forecast(domestic_inflation))
    real = fisher_real(nominal, i_foreign)
    return RiskFreeReport(
        weighted_ytm=nominal,
        foreign_inflation=i_foreign,
        real_rate=real,
        domestic_inflation=i_domestic,
        domestic_nominal=fisher_nominal(real, i_domestic),
    )
