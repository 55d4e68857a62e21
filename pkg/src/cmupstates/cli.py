"""Command-line front end: ``cmup solve|sweep|airy|check|figure``.

Every command writes its datasets plus a ``manifest.json`` into ``--out``.
Exit codes: 0 ok, 1 check failure, 2 usage, 3 range or validity, 4 partial
sweep.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import math
import sys
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import __version__, airyapprox
from .checks import format_table, run_checks
from .cmup import Regime, ScaledProblem, build_state, solve_for_delta_phi, sweep
from .config import SolverConfig, load_config
from .errors import CmupError, RangeError, RegimeError
from .figures import FIGURE_IDS, build_figure

__all__ = ["main", "build_parser", "summary_dict", "format_number"]

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_RANGE, EXIT_PARTIAL = 0, 1, 2, 3, 4

SWEEP_COLUMNS = [
    "control", "a", "regime", "x0", "lambda", "mu", "mu_over_lambda",
    "delta_phi", "delta_lz", "product", "bound", "status",
]
AIRY_COLUMNS = [
    "lambda", "ratio_sqrt_exact", "ratio_sqrt_approx", "c_norm",
    "delta_phi", "delta_lz", "product",
]


class _UsageError(Exception):
    pass


def format_number(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v)).lower()
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format(float(v), ".17g")


def _write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(format_number(v) for v in row) + "\n")


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _write_json(path: Path, payload) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _write_manifest(out: Path, argv: Sequence[str], config: SolverConfig, files, notes=()) -> None:
    manifest = {
        "command_line": " ".join(["cmup", *argv]),
        "tolerance_config": config.as_dict(),
        "artifact_version": __version__,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        "files": list(files),
        "notes": list(notes),
    }
    _write_json(out / "manifest.json", manifest)


def summary_dict(state) -> dict:
    """Summary record written by ``cmup solve``."""
    return {
        "a": state.problem.a,
        "regime": state.regime.value,
        "x0": state.x0,
        "lambda": state.lam,
        "mu": state.mu,
        "delta_phi": state.delta_phi,
        "delta_lz": state.delta_lz,
        "product": state.product,
        "bound": state.bound,
        "p_boundary": state.p_boundary,
    }


def _cmd_solve(args, config: SolverConfig, argv) -> int:
    by_a = args.a is not None or args.regime is not None
    if by_a == (args.delta_phi is not None):
        raise _UsageError("give exactly one of --a/--regime or --delta-phi")
    if args.grid < 2:
        raise _UsageError("--grid must be at least 2")
    if by_a:
        if args.regime is None:
            raise _UsageError("--a requires --regime")
        a = 0.0 if args.a is None and args.regime == "flat" else args.a
        if a is None:
            raise _UsageError("--regime small|large requires --a")
        try:
            problem = ScaledProblem(args.regime, a)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        state = build_state(problem, config)
    else:
        state = solve_for_delta_phi(args.delta_phi, args.tol, config)
    out = _outdir(args)
    phi = np.linspace(-math.pi, math.pi, args.grid)
    psi = np.asarray(state.psi(phi), dtype=float)
    _write_csv(out / "wavefunction.csv", ["phi", "psi"], zip(phi, psi))
    summary = summary_dict(state)
    _write_json(out / "summary.json", summary)
    _write_manifest(out, argv, config, ["wavefunction.csv", "summary.json"])
    print(json.dumps(summary, indent=2))
    return EXIT_OK


def _cmd_sweep(args, config: SolverConfig, argv) -> int:
    if not args.c_lo < args.c_hi:
        raise _UsageError("--c-lo must be smaller than --c-hi")
    if args.points < 2:
        raise _UsageError("--points must be at least 2")
    rows = sweep(args.c_lo, args.c_hi, args.points, config)
    table = [
        [r.control, r.a, r.regime, r.x0, r.lam, r.mu, r.mu_over_lambda,
         r.delta_phi, r.delta_lz, r.product, r.bound, r.status]
        for r in rows
    ]
    out = _outdir(args)
    if args.format == "csv":
        name = "sweep.csv"
        _write_csv(out / name, SWEEP_COLUMNS, table)
    else:
        name = "sweep.json"
        _write_json(out / name, [dict(zip(SWEEP_COLUMNS, map(_json_value, t))) for t in table])
    ok = sum(r.ok for r in rows)
    notes = [f"a ceiling a_max={config.a_max:g}", f"small control floor={config.small_control_floor:g}"]
    _write_manifest(out, argv, config, [name], notes)
    print(f"{ok}/{len(rows)} rows ok -> {out / name}")
    return EXIT_OK if ok >= 0.9 * len(rows) else EXIT_PARTIAL


def _cmd_airy(args, config: SolverConfig, argv) -> int:
    single = args.lambda_ is not None
    ranged = [args.lambda_lo, args.lambda_hi, args.points]
    if single == any(v is not None for v in ranged):
        raise _UsageError("give exactly one of --lambda or --lambda-lo/--lambda-hi/--points")
    if single:
        lambdas = np.array([args.lambda_])
    else:
        if any(v is None for v in ranged):
            raise _UsageError("--lambda-lo, --lambda-hi and --points go together")
        if not 0 < args.lambda_lo < args.lambda_hi or args.points < 2:
            raise _UsageError("need 0 < --lambda-lo < --lambda-hi and --points >= 2")
        lambdas = np.geomspace(args.lambda_lo, args.lambda_hi, args.points)
    threshold = airyapprox.validity_threshold()
    rows, states = [], []
    for lam in map(float, lambdas):
        if not lam > threshold:
            raise RegimeError(
                f"|lambda|={lam!r} is below the Airy validity threshold {threshold:.6g}", threshold
            )
        st = airyapprox.airy_state(lam)
        dphi, prod = airyapprox.airy_uncertainty_product(lam)
        rows.append([
            lam, st.ratio_sqrt, airyapprox.ratio_from_lambda_approx(lam), st.c_norm,
            dphi, math.sqrt(st.lz_variance), prod,
        ])
        states.append(st)
    out = _outdir(args)
    files = ["airy.csv"]
    _write_csv(out / "airy.csv", AIRY_COLUMNS, rows)
    if args.emit_wavefunction:
        phi = np.linspace(0.0, math.pi, args.grid)
        if single:
            header = ["phi", "psi"]
        else:
            header = ["phi", *(f"psi_lambda_{format_number(s.lambda_mag)}" for s in states)]
        cols = [np.asarray(s.psi(phi)) for s in states]
        _write_csv(out / "airy_wavefunction.csv", header,
                   ([p, *(c[i] for c in cols)] for i, p in enumerate(phi)))
        files.append("airy_wavefunction.csv")
    _write_manifest(out, argv, config, files, ["normalisation uses the infinite-tail extension"])
    print(f"{len(rows)} rows -> {out / 'airy.csv'}")
    return EXIT_OK


def _cmd_check(args, config: SolverConfig, argv) -> int:
    results = run_checks(quick=args.quick, config=config)
    print(format_table(results))
    failed = [r.name for r in results if not r.passed]
    if failed:
        print("failed: " + ", ".join(failed), file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def _cmd_figure(args, config: SolverConfig, argv) -> int:
    bundle = build_figure(args.id, config)
    out = _outdir(args)
    for name, (header, rows) in bundle.tables.items():
        _write_csv(out / name, header, rows)
    _write_manifest(out, argv, config, list(bundle.tables), bundle.notes)
    print(f"{args.id}: wrote {', '.join(bundle.tables)} -> {out}")
    return EXIT_OK


def _outdir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cmup", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", help="tolerance config file (overrides $CMUP_TOLERANCE_CONFIG)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=".", help="output directory (default: current)")

    p = sub.add_parser("solve", help="solve one state and write its wavefunction")
    p.add_argument("--a", type=float, help="scaled parameter a >= 0")
    p.add_argument("--regime", choices=[r.value for r in Regime])
    p.add_argument("--delta-phi", type=float, help="target angle uncertainty")
    p.add_argument(
        "--tol", type=float, default=1e-7,
        help="tolerance on delta_phi; targets this close to pi/sqrt(3) give the flat state",
    )
    p.add_argument("--grid", type=int, default=721, help="points on [-pi, pi]")
    common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("sweep", help="sweep the signed control parameter")
    p.add_argument("--c-lo", type=float, required=True)
    p.add_argument("--c-hi", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    common(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("airy", help="Airy approximation for given |lambda|")
    p.add_argument("--lambda", dest="lambda_", type=float, help="single |lambda|")
    p.add_argument("--lambda-lo", type=float)
    p.add_argument("--lambda-hi", type=float)
    p.add_argument("--points", type=int, help="geometrically spaced |lambda| values")
    p.add_argument("--emit-wavefunction", action="store_true")
    p.add_argument("--grid", type=int, default=361, help="points on [0, pi] for wavefunctions")
    common(p)
    p.set_defaults(func=_cmd_airy)

    p = sub.add_parser("check", help="run the invariant and oracle suite")
    p.add_argument("--quick", action="store_true", help="fast subset")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("figure", help="write the data bundle for one figure")
    p.add_argument("--id", required=True, choices=FIGURE_IDS)
    common(p)
    p.set_defaults(func=_cmd_figure)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        config = load_config(args.config)
    except (OSError, ValueError) as exc:
        print(f"cmup: bad tolerance config: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, config, argv)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"cmup {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RegimeError as exc:
        print(f"cmup {args.command}: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except RangeError as exc:
        msg = str(exc)
        if exc.achievable is not None:
            lo, hi = exc.achievable
            msg += f" (achievable delta_phi range: {lo:.6g} to {hi:.6g})"
        print(f"cmup {args.command}: {msg}", file=sys.stderr)
        return EXIT_RANGE
    except CmupError as exc:
        print(f"cmup {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RANGE


if __name__ == "__main__":
    sys.exit(main())
