"""Command-line interface.

Rates and prices are typed and printed in percent (3.77 means 3.77%);
everything below this layer works in decimals.

Exit codes: 0 success, 2 bad input, 3 yield solver failure.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .errors import SolverError, ValidationError
from .loaders import BondRegistry, load_countries, load_registry
from .pricing import present_value, yield_to_maturity
from .report import FORMATS, ReportEnvelope, render
from .risk import analyze_bond, sensitivity_sweep, sweep_record
from .riskfree import InflationForecast, risk_free_pipeline
from .schedule import generate_schedule

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SOLVER = 3

DEFAULT_GRID_STEP = 0.25


def parse_grid(text: str, anchor_pct: Optional[float] = None) -> List[float]:
    """Parse ``lo:hi[:step]`` or a comma list of percents into decimals.

    For the range form the anchor is merged into the grid when it falls
    inside [lo, hi], so the sweep always carries its zero row.
    """
    text = text.strip()
    try:
        if ":" in text:
            parts = [float(p) for p in text.split(":")]
            if len(parts) not in (2, 3):
                raise ValueError
            lo, hi = parts[0], parts[1]
            step = parts[2] if len(parts) == 3 else DEFAULT_GRID_STEP
            if step <= 0 or hi < lo:
                raise ValueError
            n = int(round((hi - lo) / step))
            points = [round(lo + k * step, 10) for k in range(n + 1)]
            if points[-1] < hi - 1e-9:
                points.append(hi)
            if anchor_pct is not None and lo <= anchor_pct <= hi:
                if all(abs(p - anchor_pct) > 1e-9 for p in points):
                    points = sorted(points + [anchor_pct])
        else:
            points = [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ValidationError(f"bad grid {text!r}: expected lo:hi[:step] or a comma list") from None
    if not points:
        raise ValidationError("empty yield grid")
    return [p / 100.0 for p in points]


def parse_inflation(text: str) -> InflationForecast:
    try:
        rates = [float(p) / 100.0 for p in text.split(",") if p.strip()]
    except ValueError:
        raise ValidationError(f"bad inflation value {text!r}") from None
    return InflationForecast(tuple(rates))


def cmd_schedule(args, registry: BondRegistry) -> ReportEnvelope:
    spec = registry.get(args.label)
    schedule = generate_schedule(spec)
    inputs = {"label": spec.label}
    rows = [
        {
            "period": item.period,
            "principal": item.principal,
            "interest": item.interest,
            "total": item.total,
            "balance_after": item.balance_after,
        }
        for item in schedule.items
    ]
    footer = {}
    if args.yield_pct is not None:
        priced = present_value(schedule, args.yield_pct / 100.0)
        inputs["yield_pct"] = args.yield_pct
        for row, pv in zip(rows, priced.pv_items):
            row["pv"] = pv
        footer = {"npv_abs": priced.price_abs, "npv_pct": priced.price_pct * 100.0}
    return ReportEnvelope("schedule", inputs, rows, args.format, footer=footer)


def cmd_price(args, registry: BondRegistry) -> ReportEnvelope:
    spec = registry.get(args.label)
    priced = present_value(generate_schedule(spec), args.yield_pct / 100.0)
    row = {
        "label": spec.label,
        "yield_pct": args.yield_pct,
        "price_pct": priced.price_pct * 100.0,
        "price_abs": priced.price_abs,
    }
    return ReportEnvelope("price", {"label": spec.label, "yield_pct": args.yield_pct}, [row], args.format)


def cmd_ytm(args, registry: BondRegistry) -> ReportEnvelope:
    spec = registry.get(args.label)
    y = yield_to_maturity(generate_schedule(spec), args.price_pct / 100.0)
    row = {"label": spec.label, "price_pct": args.price_pct, "ytm_pct": y * 100.0}
    return ReportEnvelope("ytm", {"label": spec.label, "price_pct": args.price_pct}, [row], args.format)


def _yield_for(registry: BondRegistry, label: str, override_pct: Optional[float]) -> float:
    if override_pct is not None:
        return override_pct / 100.0
    y = registry.quoted(label)
    if y is None:
        raise ValidationError(f"{label}: no quoted yield in registry; pass --yield")
    return y


def cmd_risk(args, registry: BondRegistry) -> ReportEnvelope:
    if args.all == (args.label is not None):
        raise ValidationError("give exactly one of LABEL or --all")
    if args.all:
        labels = [lab for lab in registry.labels if registry.quoted(lab) is not None]
        if args.yield_pct is not None:
            labels = registry.labels
        if not labels:
            raise ValidationError("no bonds with a quoted yield in registry")
    else:
        labels = [args.label]
    rows = []
    for label in labels:
        y = _yield_for(registry, label, args.yield_pct)
        m = analyze_bond(registry.get(label), y)
        rows.append(
            {
                "label": label,
                "ytm_pct": y * 100.0,
                "price_pct": m.price_pct * 100.0,
                "D": m.macaulay,
                "Dmod": m.modified,
                "Conv": m.convexity,
            }
        )
    inputs = {"labels": ",".join(labels)}
    if args.yield_pct is not None:
        inputs["yield_pct"] = args.yield_pct
    return ReportEnvelope("risk", inputs, rows, args.format)


def cmd_sweep(args, registry: BondRegistry) -> ReportEnvelope:
    spec = registry.get(args.label)
    anchor = _yield_for(registry, spec.label, args.anchor_pct)
    grid = parse_grid(args.grid, anchor * 100.0)
    rows = [sweep_record(r) for r in sensitivity_sweep(spec, anchor, grid)]
    inputs = {"label": spec.label, "anchor_pct": anchor * 100.0, "grid": args.grid}
    return ReportEnvelope("sweep", inputs, rows, args.format)


def cmd_riskfree(args, registry: Optional[BondRegistry] = None) -> ReportEnvelope:
    data = load_countries(args.countries)
    rep = risk_free_pipeline(
        data, parse_inflation(args.foreign_inflation), parse_inflation(args.domestic_inflation)
    )
    row = {
        "weighted_ytm_pct": rep.weighted_ytm * 100.0,
        "foreign_inflation_pct": rep.foreign_inflation * 100.0,
        "real_rate_pct": rep.real_rate * 100.0,
        "domestic_inflation_pct": rep.domestic_inflation * 100.0,
        "domestic_nominal_pct": rep.domestic_nominal * 100.0,
    }
    inputs = {
        "countries": str(args.countries) if args.countries else "bundled",
        "n_countries": len(data),
        "foreign_inflation": args.foreign_inflation,
        "domestic_inflation": args.domestic_inflation,
    }
    return ReportEnvelope("riskfree", inputs, [row], args.format, notes=(rep.assumption,))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--registry", default=None, help="bond registry JSON (default: bundled)")

    parser = argparse.ArgumentParser(
        prog="tbondrisk", description="Amortizing bond pricing and interest-rate risk"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schedule", parents=[common], help="amortization plan, optional NPV")
    p.add_argument("label")
    p.add_argument("--yield", dest="yield_pct", type=float, help="discount yield in percent")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("price", parents=[common], help="price at a yield")
    p.add_argument("label")
    p.add_argument("--yield", dest="yield_pct", type=float, required=True)
    p.set_defaults(func=cmd_price)

    p = sub.add_parser("ytm", parents=[common], help="yield to maturity from a price")
    p.add_argument("label")
    p.add_argument("--price", dest="price_pct", type=float, required=True,
                   help="price in percent of outstanding principal")
    p.set_defaults(func=cmd_ytm)

    p = sub.add_parser("risk", parents=[common], help="duration, modified duration, convexity")
    p.add_argument("label", nargs="?")
    p.add_argument("--all", action="store_true", help="every registry bond with a quoted yield")
    p.add_argument("--yield", dest="yield_pct", type=float, help="override the quoted yield")
    p.set_defaults(func=cmd_risk)

    p = sub.add_parser("sweep", parents=[common], help="exact vs duration/convexity price estimates")
    p.add_argument("label")
    p.add_argument("--anchor", dest="anchor_pct", type=float, help="anchor yield (default: quoted)")
    p.add_argument("--grid", required=True, help="lo:hi[:step] or comma list, percent")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("riskfree", parents=[common], help="GDP-weighted, Fisher-adjusted risk-free rate")
    p.add_argument("--countries", default=None, help="CSV country,ytm_pct,gdp (default: bundled)")
    p.add_argument("--eu-inflation", "--foreign-inflation", dest="foreign_inflation", required=True,
                   help="foreign expected inflation, percent; comma list = annual forecast")
    p.add_argument("--mk-inflation", "--domestic-inflation", dest="domestic_inflation", required=True,
                   help="domestic expected inflation, percent; comma list = annual forecast")
    p.set_defaults(func=cmd_riskfree)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        registry = None if args.command == "riskfree" else load_registry(args.registry)
        envelope = args.func(args, registry)
    except ValidationError as exc:
        print(f"tbondrisk: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SolverError as exc:
        print(f"tbondrisk: solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    sys.stdout.write(render(envelope))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
