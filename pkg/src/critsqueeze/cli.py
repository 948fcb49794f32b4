"""Command-line front end.

Subcommands: timeseries, sweep, fit, oracle, phase-diagram.  A JSON config
file (``--config``) supplies RunConfig fields; explicit flags override it.
Exit codes: 0 success, 1 computational error, 2 usage or schema error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .errors import ConsistencyError, ConvergenceFailure, CriticalSingularity, DomainError, SchemaError
from .sweep import RunConfig, phase_diagram_table, run_sweep, timeseries_table
from .tables import write_table

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _add_run_flags(p: argparse.ArgumentParser):
    p.add_argument("--config", help="JSON file with RunConfig fields")
    p.add_argument("--model", choices=["oat", "dicke"])
    p.add_argument("--side", help="ordered/superradiant/below or disordered/normal/above")
    p.add_argument("--delta", type=float, nargs="+", dest="deltas", help="explicit delta values")
    p.add_argument("--delta-range", type=float, nargs=3, metavar=("LO", "HI", "COUNT"))
    p.add_argument("--linear", action="store_true", help="linear (not log) spacing for --delta-range")
    p.add_argument("--Delta", type=float, help="Dicke detuning Delta in (-1, 1)")
    p.add_argument("--psi", type=float, help="Dicke detuning psi (overrides --Delta)")
    p.add_argument("--observable", choices=["spin", "photon"])
    p.add_argument("--periods", type=float)
    p.add_argument("--t-max", type=float)
    p.add_argument("--points-per-period", type=int)
    p.add_argument("--points-per-fast", type=int)
    p.add_argument("--workers", type=int, help="parallel width (default from CRITSQUEEZE_WORKERS or 1)")
    p.add_argument("--outdir")
    p.add_argument("--prefix")


_FLAG_TO_FIELD = {
    "model": "model", "side": "side", "deltas": "deltas", "delta_range": "delta_range",
    "Delta": "Delta", "psi": "psi", "observable": "observable", "periods": "periods", "t_max": "t_max",
    "points_per_period": "points_per_period", "points_per_fast": "points_per_fast", "workers": "workers",
    "outdir": "outdir", "prefix": "prefix",
}


def build_config(args) -> RunConfig:
    data = {}
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
    for flag, name in _FLAG_TO_FIELD.items():
        val = getattr(args, flag, None)
        if val is not None:
            data[name] = val
    if getattr(args, "linear", False):
        data["log_spaced"] = False
    return RunConfig.from_dict(data)


def _stem(cfg: RunConfig) -> str:
    if cfg.prefix:
        return cfg.prefix
    tag = f"{cfg.model}_{cfg.side}"
    if cfg.model == "dicke":
        tag += f"_psi{cfg.detuning_psi():.6g}"
    return tag


def cmd_timeseries(args) -> int:
    cfg = build_config(args)
    deltas = cfg.delta_values()
    if not deltas:
        raise UsageError("timeseries needs at least one delta")
    for d in deltas:
        table = timeseries_table(cfg, d)
        path = write_table(table, Path(cfg.outdir) / f"{_stem(cfg)}_ts_delta{d:.6g}.csv")
        print(path)
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = build_config(args)
    if not cfg.delta_values():
        raise UsageError("sweep needs --delta or --delta-range")
    table = run_sweep(cfg)
    path = write_table(table, Path(cfg.outdir) / f"{_stem(cfg)}_sweep.csv")
    print(path)
    return EXIT_OK


def cmd_fit(args) -> int:
    from .fit import fit_affine_square, fit_powerlaw, records_from_columns
    from .tables import read_table

    reports = []
    for path in args.inputs:
        cols = ["xi", "delta", args.column]
        data, _ = read_table(path, required=cols)
        d, y, xi = data["delta"], data[args.column], data["xi"]
        window = (args.window[0] if args.window else 0.0, args.window[1] if args.window else math.inf)
        for side, mask in (("below", xi < 1), ("above", xi > 1)):
            mask = mask & (d >= window[0]) & (d <= window[1])
            if not mask.any():
                continue
            recs = records_from_columns(d[mask], y[mask], args.column, side, xi[mask])
            fit = fit_powerlaw(recs) if args.law == "powerlaw" else fit_affine_square(recs)
            rep = {"input": str(path), **fit.to_dict()}
            if "psi" in data:
                rep["psi"] = float(data["psi"][0])
            reports.append(rep)
            if fit.model == "powerlaw":
                print(f"{path} [{side}] {args.column}: exponent {fit.exponent:.4f} amplitude "
                      f"{fit.amplitude:.4g} R2 {fit.r2:.6f} window {fit.window}")
            else:
                print(f"{path} [{side}] zeta_min^2 = u + v*delta: u {fit.u:.5g} v {fit.v:.5g} "
                      f"max residual {100 * fit.residual_fraction:.2f}% of range, R2 {fit.r2:.6f}")
    if not reports:
        raise UsageError("no rows inside the fit window")
    if args.out:
        Path(args.out).write_text(json.dumps(reports, indent=2, default=str) + "\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    from . import oracle as orc
    from .dicke import dicke_abc_photon, dicke_abc_spin, dicke_beat_window, dicke_bogoliubov, dicke_boson_coefficients
    from .oat import oat_abc, oat_boson_coefficients, oat_squeezing_period, oat_zeta_s
    from .params import DickeParams, OatParams, xi_from_side

    ok = True
    records = {}
    if args.model == "oat":
        for d in args.delta or [0.2, 0.05, 0.01]:
            p = OatParams.from_xi(xi_from_side(args.side, d))
            t = np.linspace(0.0, oat_squeezing_period(p), args.points)
            (A, B, C), n, rec = orc.fock_evolve_oat_auto(oat_boson_coefficients(p), t, tol=args.tol * 1e-2)
            dev = [float(np.max(np.abs(x - y))) for x, y in zip((A, B, C), oat_abc(p, None, t))]
            passed = max(dev) < args.tol
            ok &= passed
            records[f"oat_delta{d:g}"] = rec
            print(f"oat {args.side} delta={d:g} n_max={n} dev A/B/C = " + " ".join(f"{x:.2e}" for x in dev)
                  + (" PASS" if passed else " FAIL"))
    elif args.model == "dicke":
        for xi, psi in args.point or [(2.0, 0.0), (0.5, 0.0)]:
            p = DickeParams.from_xi_psi(xi, psi)
            c = dicke_boson_coefficients(p)
            t = np.linspace(0.0, dicke_beat_window(dicke_bogoliubov(c)), args.points)
            vals, cut, rec = orc.fock_evolve_dicke_auto(c, t, tol=args.tol * 1e-2, growth=1.5)
            ref = (*dicke_abc_spin(p, None, t), *dicke_abc_photon(p, None, t))
            dev = [float(np.max(np.abs(x - y))) for x, y in zip(vals, ref)]
            passed = max(dev) < args.tol
            ok &= passed
            records[f"dicke_xi{xi:g}_psi{psi:g}"] = rec
            print(f"dicke xi={xi:g} psi={psi:g} cutoffs={cut} max dev spin "
                  f"{max(dev[:3]):.2e} photon {max(dev[3:]):.2e}" + (" PASS" if passed else " FAIL"))
    else:
        xi = args.xi
        p = OatParams.from_xi(xi)
        t = oat_squeezing_period(p) / 4
        exact = float(oat_zeta_s(p, None, t)[0])
        errs = []
        for J in args.J or [25, 50, 100, 200]:
            z = float(orc.spin_ed_oat(p, J, [t])[0])
            errs.append(abs(z - exact))
            print(f"ed xi={xi:g} J={J} zeta={z:.10f} analytic={exact:.10f} |diff|={errs[-1]:.3e}")
        mono = all(b < a for a, b in zip(errs, errs[1:]))
        ok &= mono
        print("monotone convergence " + ("PASS" if mono else "FAIL"))
    if args.records:
        Path(args.records).write_text(
            json.dumps({k: json.loads(orc.dump_convergence(v)) for k, v in records.items()}, indent=2) + "\n"
        )
    return EXIT_OK if ok else EXIT_COMPUTE


def cmd_phase_diagram(args) -> int:
    table = phase_diagram_table(tuple(args.omega_range), args.count, [tuple(p) for p in args.point or []])
    path = write_table(table, Path(args.out))
    print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="critsqueeze", description="Squeezing dynamics near quantum critical points.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("timeseries", help="zeta(t) tables, one CSV per delta")
    _add_run_flags(p)
    p.set_defaults(func=cmd_timeseries)

    p = sub.add_parser("sweep", help="period and zeta_min against delta")
    _add_run_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fit", help="power-law or affine-square fits of sweep tables")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--law", choices=["powerlaw", "affine"], default="powerlaw")
    p.add_argument("--column", default="period_T", help="observable column (period_T or zeta_min)")
    p.add_argument("--window", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--out", help="JSON report path")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("oracle", help="closed forms against brute-force evolution")
    p.add_argument("model", choices=["oat", "dicke", "ed"])
    p.add_argument("--side", default="ordered")
    p.add_argument("--delta", type=float, nargs="+")
    p.add_argument("--point", type=float, nargs=2, action="append", metavar=("XI", "PSI"))
    p.add_argument("--xi", type=float, default=1.2)
    p.add_argument("--J", type=int, nargs="+")
    p.add_argument("--points", type=int, default=201, help="time samples over the window")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--records", help="write convergence records as JSON")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("phase-diagram", help="Dicke critical line samples and region labels")
    p.add_argument("--omega-range", type=float, nargs=2, default=[0.1, 4.0])
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--point", type=float, nargs=2, action="append", metavar=("XI", "PSI"))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_phase_diagram)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except SchemaError as exc:
        col = f" (column {exc.column!r})" if exc.column else ""
        print(f"schema error{col}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, DomainError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CriticalSingularity as exc:
        print(f"critical point: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except (ConvergenceFailure, ConsistencyError, MemoryError, ArithmeticError) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
