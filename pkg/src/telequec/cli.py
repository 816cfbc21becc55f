"""Command-line front end.

Subcommands emit delimited tables (CSV by default, JSON with --format
json) at full round-trip precision, optionally rendering a matplotlib
figure next to the table with --plot.  Exit codes: 0 success, 2 input
validation error, 3 numerical-check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import densmat
from .codes import UNCODED, builtin_catalog, load_catalog
from .mc import LinkSimConfig, simulate_link, success_chain
from .protocol import BurstSchedule, coded_burst_error, run_burst
from .scheduler import exhaustive_search
from .states import (
    BellDiagonalState,
    DomainError,
    channel_of,
    purify_step,
    swap_step,
    werner,
)

EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3

_SCHEMA_VERSION = "1"


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _write_rows(rows: list[dict], columns: list[str], args) -> None:
    if args.format == "json":
        text = json.dumps({"schema": _SCHEMA_VERSION, "rows": rows}, indent=2, default=_fmt)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([_fmt(r[c]) for c in columns])
        text = buf.getvalue()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _plot_path(args) -> Path:
    base = Path(args.out) if args.out else Path(f"{args.command}.csv")
    return base.with_suffix(".png")


def _parse_floats(text: str) -> list[float]:
    return [float(p) for p in text.split(",") if p.strip()]


def cmd_evolve(args) -> int:
    state = werner(args.f0)
    rows = []
    for step in range(args.steps + 1):
        if step > 0:
            state, _ = purify_step(state)
        ch = channel_of(state)
        rows.append(
            {
                "step": step,
                "A": state.a,
                "B": state.b,
                "C": state.c,
                "D": state.d,
                "rho": ch.rho,
                "a_eq": ch.a_eq,
            }
        )
    _write_rows(rows, ["step", "A", "B", "C", "D", "rho", "a_eq"], args)
    if args.plot:
        from .plots import plot_evolution

        plot_evolution(rows, _plot_path(args))
    return 0


def cmd_codes(args) -> int:
    catalog = load_catalog(args.catalog) if args.catalog else builtin_catalog()
    if args.code:
        codes = [UNCODED if label == "uncoded" else catalog.get(label) for label in args.code]
    else:
        codes = [UNCODED, *catalog.entries]
    rows = []
    for rho0 in _parse_floats(args.rho0_grid):
        schedule = BurstSchedule(args.burst, args.swaps, werner(1.0 - rho0))
        for code in codes:
            rows.append(
                {
                    "rho0": rho0,
                    "code": code.label,
                    "rho_L": coded_burst_error(schedule, code),
                }
            )
    _write_rows(rows, ["rho0", "code", "rho_L"], args)
    if args.plot:
        from .plots import plot_code_curves

        plot_code_curves(rows, _plot_path(args))
    return 0


def cmd_burst(args) -> int:
    rows = []
    for f0 in _parse_floats(args.f0):
        for b in (int(x) for x in _parse_floats(args.burst)):
            initial = werner(f0)
            # step 0 anchors at the raw Werner pair, before any purification
            anchor = channel_of(initial)
            rows.append(
                {
                    "f0": f0,
                    "burst": b,
                    "swap_step": 0,
                    "rho": anchor.rho,
                    "a_eq": anchor.a_eq,
                }
            )
            state = initial
            for _ in range(b):
                state, _ = purify_step(state)
            for step in range(1, args.swaps + 1):
                state = swap_step(state)
                ch = channel_of(state)
                rows.append(
                    {
                        "f0": f0,
                        "burst": b,
                        "swap_step": step,
                        "rho": ch.rho,
                        "a_eq": ch.a_eq,
                    }
                )
    _write_rows(rows, ["f0", "burst", "swap_step", "rho", "a_eq"], args)
    if args.plot:
        from .plots import plot_burst

        plot_burst(rows, _plot_path(args))
    return 0


def cmd_schedule_search(args) -> int:
    report = exhaustive_search(args.burst, args.swaps, werner(args.f0))
    payload = {
        "schema": _SCHEMA_VERSION,
        "f0": args.f0,
        "purifications": args.burst,
        "swaps": args.swaps,
        "best_plan": report.best_plan.ops,
        "best_final_error": report.best_final_error,
        "burst_plan": report.burst_plan.ops,
        "burst_plan_error": report.burst_plan_error,
        "burst_is_optimal": report.burst_is_optimal,
        "plans_evaluated": report.plans_evaluated,
        "raw_pairs_per_plan": report.burst_plan.raw_pairs,
    }
    text = json.dumps(payload, indent=2, default=_fmt)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text + "\n")
    return 0


def cmd_simulate(args) -> int:
    config = LinkSimConfig(
        m=args.m,
        p=args.p,
        b=args.burst,
        initial_state=werner(args.f0),
        trials=args.trials,
        seed=args.seed,
    )
    result = simulate_link(config)
    rows = []
    for rnd in sorted(result.yield_histogram):
        for survivors in sorted(result.yield_histogram[rnd]):
            rows.append(
                {
                    "round": rnd,
                    "survivors": survivors,
                    "trials": result.yield_histogram[rnd][survivors],
                }
            )
    if args.format == "json":
        payload = {
            "schema": _SCHEMA_VERSION,
            "histogram": rows,
            "mean_yield": result.mean_yield,
            "empirical_success": result.empirical_success,
            "analytic_success": success_chain(config.initial_state, config.b),
        }
        text = json.dumps(payload, indent=2, default=_fmt)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text + "\n")
    else:
        _write_rows(rows, ["round", "survivors", "trials"], args)
    if args.plot:
        from .plots import plot_yield_histogram

        plot_yield_histogram(rows, _plot_path(args))
    return 0


def cmd_oracle_check(args) -> int:
    rng = np.random.default_rng(args.seed)
    worst = {"purify": 0.0, "swap": 0.0, "channel": 0.0}
    for _ in range(args.trials):
        a, b, c, d = rng.dirichlet(np.ones(4))
        state = BellDiagonalState.normalized(a, b, c, d)
        ref_state, ref_n = densmat.dm_purify_step(state)
        got_state, got_n = purify_step(state)
        worst["purify"] = max(
            worst["purify"],
            abs(ref_n - got_n),
            *(abs(x - y) for x, y in zip(ref_state.as_tuple(), got_state.as_tuple())),
        )
        worst["swap"] = max(
            worst["swap"],
            *(
                abs(x - y)
                for x, y in zip(
                    densmat.dm_swap_step(state).as_tuple(), swap_step(state).as_tuple()
                )
            ),
        )
        ref_ch = densmat.dm_teleport_channel(state)
        got_ch = channel_of(state)
        worst["channel"] = max(
            worst["channel"],
            abs(ref_ch.p_x - got_ch.p_x),
            abs(ref_ch.p_y - got_ch.p_y),
            abs(ref_ch.p_z - got_ch.p_z),
        )
    ok = True
    for name, err in worst.items():
        passed = err < args.tolerance
        ok = ok and passed
        print(f"{name}: max deviation {err:.3e} -> {'PASS' if passed else 'FAIL'}")
    return 0 if ok else EXIT_NUMERICAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="telequec",
        description="Purification, swapping and coded-teleportation analysis tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p, plottable=True):
        p.add_argument("--out", metavar="FILE", help="output path (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        if plottable:
            p.add_argument(
                "--plot", action="store_true", help="also render a PNG next to the table"
            )

    p = sub.add_parser("evolve", help="pair state evolution under repeated purification")
    p.add_argument("--f0", type=float, required=True, help="initial Werner fidelity")
    p.add_argument("--steps", type=int, default=9)
    add_output_flags(p)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("codes", help="coded logical error vs initial error probability")
    p.add_argument("--rho0-grid", required=True, help="comma-separated initial errors")
    p.add_argument("--burst", type=int, default=1, help="purification steps")
    p.add_argument("--swaps", type=int, default=0, help="swapping steps")
    p.add_argument(
        "--code",
        action="append",
        help="code label (repeatable; default: uncoded plus the built-in catalog)",
    )
    p.add_argument("--catalog", metavar="FILE", help="catalog file: label, n, k, e_g, e_z")
    add_output_flags(p)
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("burst", help="error and asymmetry vs swapping step")
    p.add_argument("--f0", default="0.9,0.95,0.99", help="comma-separated fidelities")
    p.add_argument("--burst", default="1,2,3", help="comma-separated purification counts")
    p.add_argument("--swaps", type=int, default=9, help="maximum swapping step")
    add_output_flags(p)
    p.set_defaults(func=cmd_burst)

    p = sub.add_parser("schedule-search", help="exhaustive purify/swap ordering search")
    p.add_argument("--burst", type=int, required=True, help="purification budget")
    p.add_argument("--swaps", type=int, required=True, help="required swaps")
    p.add_argument("--f0", type=float, required=True)
    add_output_flags(p, plottable=False)
    p.set_defaults(func=cmd_schedule_search)

    p = sub.add_parser("simulate", help="Monte Carlo single-link distribution")
    p.add_argument("--m", type=int, required=True, help="initial EPR attempts")
    p.add_argument("--p", type=float, required=True, help="detection probability")
    p.add_argument("--burst", type=int, default=1, help="purification rounds")
    p.add_argument("--f0", type=float, default=0.8)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    add_output_flags(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("oracle-check", help="density-matrix vs recursion equivalence")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=1e-10)
    p.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, KeyError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
