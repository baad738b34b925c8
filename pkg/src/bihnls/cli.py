"""Command-line entry point.

Thin adapters only: every formula and verdict lives in the exponents,
diagnostics and experiments modules.  Exit codes: 0 success/pass, 1 verdict
failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import exponents as expo
from . import spectral as spec
from .experiments import (
    PRESETS,
    ConfigError,
    ExperimentConfig,
    config_from_dict,
    run_almost_conservation_sweep,
    run_conservation,
    run_operator_suite,
    run_scattering,
    run_table1,
)

TABLE1_TOLERANCE = 2e-3


def _opt_float(raw: str):
    return None if raw.lower() in ("none", "null") else float(raw)


def _bool(raw: str) -> bool:
    if raw.lower() in ("1", "true", "yes"):
        return True
    if raw.lower() in ("0", "false", "no"):
        return False
    raise ValueError(f"not a boolean: {raw!r}")


_COERCERS = {
    "experiment": str,
    "d": int,
    "n": int,
    "ell": float,
    "nu": float,
    "gamma": float,
    "sigma": float,
    "dt": float,
    "t_end": float,
    "cadence": int,
    "N_list": lambda s: tuple(float(x) for x in s.split(",")),
    "mu": float,
    "delta": _opt_float,
    "seed": int,
    "outdir": str,
    "amplitude": float,
    "envelope": str,
    "data_slope": _opt_float,
    "data_width": float,
    "band_limit": _opt_float,
    "carrier": float,
    "bump_width": float,
    "threads": int,
    "blowup_ceiling": float,
}


def _load_config(args, default_preset: str) -> ExperimentConfig:
    """Preset, then config file, then dotted overrides; validated once."""
    preset = PRESETS[args.preset or default_preset]
    data: dict = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            raw = json.load(fh)
        if not isinstance(raw, dict):
            raise ConfigError("config file must hold a JSON object")
        data.update(raw)
    for item in args.set or []:
        if "=" not in item:
            raise ConfigError(f"override must look like key=value, got {item!r}")
        key, raw_value = item.split("=", 1)
        if key not in _COERCERS:
            raise ConfigError(f"unknown config key: {key}")
        try:
            data[key] = _COERCERS[key](raw_value)
        except ValueError as err:
            raise ConfigError(f"bad value for {key}: {raw_value!r}") from err
    if args.out:
        data["outdir"] = args.out
    return config_from_dict(data, base=preset)


def _add_run_options(parser: argparse.ArgumentParser, default_preset: str):
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument(
        "--set", action="append", metavar="KEY=VALUE",
        help="override a config key (repeatable)",
    )
    parser.add_argument("--out", help="output directory (overrides config outdir)")
    parser.add_argument(
        "--preset", choices=sorted(PRESETS), help=f"base preset (default {default_preset})"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bihnls",
        description="Fourth-order NLS simulator, exponent calculus, and experiment recipes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exponents", help="full exponent report as JSON")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--out", help="also write the JSON here")

    p = sub.add_parser("table1", help="threshold-table reproduction as CSV")
    p.add_argument("--out", default="out")

    for name, preset, help_text in (
        ("simulate", "conservation", "conservation run with diagnostics CSV"),
        ("sweep", "sweep", "almost-conservation drift sweep over N"),
        ("verify-ops", "operator_suite", "frequency-operator property suite"),
        ("scatter", "scattering", "free-flow pullback residual decay"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_run_options(p, preset)

    p = sub.add_parser("export-symbol", help="radial symbol samples as CSV")
    p.add_argument(
        "--kind", required=True,
        choices=["i_smoothing", "fractional", "bracket", "lp_low", "lp_high",
                 "lp_band", "morawetz_weight"],
    )
    p.add_argument("--N", type=float, default=8.0)
    p.add_argument("--gamma", type=float, default=1.5)
    p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--M", type=float, default=8.0)
    p.add_argument("--d", type=int, default=5)
    p.add_argument("--rho-max", type=float, default=64.0)
    p.add_argument("--points", type=int, default=257)
    p.add_argument("--out", required=True, help="CSV file to write")
    return parser


def _symbol_spec(args) -> spec.MultiplierSpec:
    if args.kind == "i_smoothing":
        return spec.MultiplierSpec.i_smoothing(args.N, args.gamma)
    if args.kind == "fractional":
        return spec.MultiplierSpec.fractional(args.s)
    if args.kind == "bracket":
        return spec.MultiplierSpec.bracket(args.s)
    if args.kind == "lp_low":
        return spec.MultiplierSpec.lp_low(args.M)
    if args.kind == "lp_high":
        return spec.MultiplierSpec.lp_high(args.M)
    if args.kind == "lp_band":
        return spec.MultiplierSpec.lp_band(args.M)
    return spec.MultiplierSpec.morawetz_weight(args.d)


def _cmd_exponents(args) -> int:
    report = expo.build_report(args.d, args.nu, args.gamma)
    text = json.dumps(report.to_json_dict(), indent=2)
    print(text)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    return 0


def _cmd_table1(args) -> int:
    rows = run_table1(args.out)
    worst = 0.0
    for row in rows:
        worst = max(worst, row["abs_error"])
        print(
            f"nu={row['nu']} d={row['d']} gamma_c={row['gamma_c']}: "
            f"computed {row['computed']:.6f} vs {row['paper_value']} "
            f"(|err| = {row['abs_error']:.2e})"
        )
    print(f"table written to {Path(args.out) / 'table1.csv'}")
    return 0 if worst <= TABLE1_TOLERANCE else 1


def _cmd_export_symbol(args) -> int:
    mspec = _symbol_spec(args)
    radii = np.linspace(0.0, args.rho_max, args.points)
    lines = ["rho,value"]
    for rho, value in spec.symbol_table(mspec, radii):
        lines.append(f"{rho!r},{value!r}")
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"symbol written to {out}")
    return 0


def _verdict_exit(summary: dict) -> int:
    return 0 if all(summary["verdicts"].values()) else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code) if err.code else 0
    try:
        if args.command == "exponents":
            return _cmd_exponents(args)
        if args.command == "table1":
            return _cmd_table1(args)
        if args.command == "export-symbol":
            return _cmd_export_symbol(args)
        if args.command == "simulate":
            summary = run_conservation(_load_config(args, "conservation"))
        elif args.command == "sweep":
            result = run_almost_conservation_sweep(_load_config(args, "sweep"))
            print(f"sweep verdict: {'pass' if result.verdict else 'fail'} "
                  f"(slope {result.slope:.3f})")
            for entry in result.entries:
                state = "included" if entry.included else "excluded"
                print(f"  N={entry.N:g}: drift {entry.drift:.3e} [{state}]")
            return 0 if result.verdict else 1
        elif args.command == "verify-ops":
            report = run_operator_suite(_load_config(args, "operator_suite"))
            for key in ("lp_partition_ok", "bernstein_ok", "i_pointwise_ok", "sandwich_ok"):
                print(f"{key}: {'pass' if report[key] else 'fail'}")
            return 0 if report["ok"] else 1
        else:
            summary = run_scattering(_load_config(args, "scattering"))
        for name, value in summary["verdicts"].items():
            print(f"{name}: {'pass' if value else 'fail'}")
        return _verdict_exit(summary)
    except (ConfigError, expo.ExponentError, spec.GridError, OSError,
            json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
