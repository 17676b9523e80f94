"""Command-line front end.

Subcommands:
  solve      solve one equilibrium from a config file, print JSON
  fig1       emit the two ability-game quality grids (gamma - q over q, beta)
  fig3       emit the worldview-game quality grid
  sweep      run the [[sweep]] axes of a config, emit a CSV
  verify     run the proposition suites, print a pass/fail table
  simulate   Monte Carlo run under the solved equilibrium, print JSON

Exit codes: 0 ok, 1 config error, 2 solver error, 3 verification failure.
CSV cells are written with repr-stable %.12g formatting so identical configs
produce byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from .ability import solve_kappa
from .distributions import PointMass, Uniform
from .errors import (
    BracketFailure,
    ConfigError,
    DegenerateSignal,
    EmptyPool,
    EmptyTruncation,
    InvalidParams,
    NoRoot,
    NoSharing,
    ToleranceNotReached,
)
from .params import ExperimentConfig, ModelParams, Regime, load_config, validate
from .simulate import SimConfig, simulate_ability, simulate_worldview
from .verify import ABILITY_BASE, CheckResult, ability_suite, worldview_suite
from .worldview import solve_thresholds

_SOLVER_ERRORS = (
    BracketFailure,
    DegenerateSignal,
    EmptyPool,
    EmptyTruncation,
    InvalidParams,
    NoRoot,
    NoSharing,
    ToleranceNotReached,
)

FIG1_PANELS = (0.2, 0.1)
FIG3_BASE = ModelParams(
    q=0.5, beta=0.5, eta=0.9, p_T=0.5,
    lambda_S=0.2, lambda_R=0.2, c_S=0.0, p_S=0.5, p_R=0.1,
)
DEFAULT_GRID = 33
DEFAULT_SIM_DRAWS = 100_000
VERIFY_SIM_DRAWS = 200_000


def _fmt(x) -> str:
    return f"{float(x):.12g}"


def _write_csv(path: Path, header: list[str], rows: list[tuple]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([cell if isinstance(cell, str) else _fmt(cell) for cell in row])


def _check_config(config: ExperimentConfig) -> list[str]:
    return validate(
        config.params, config.regime, worldview_override=config.worldview_override
    )


def cmd_solve(args) -> int:
    config = load_config(args.config)
    violations = _check_config(config)
    if violations:
        print("invalid parameters: " + "; ".join(violations), file=sys.stderr)
        return 1
    tol = args.tol or config.tol
    if config.regime is Regime.ABILITY:
        result = solve_kappa(config.params, tol=tol).to_json_dict()
    else:
        eq = solve_thresholds(config.F_S, config.F_R, config.params, tol=tol)
        result = eq.to_json_dict()
    print(json.dumps(result, indent=2))
    return 0


def fig1_rows(lambda_s: float, grid_n: int, tol: float) -> list[tuple]:
    """gamma - q over the (q, beta) grid at one sender-ability panel."""
    rows = []
    axis = np.linspace(0.1, 0.9, grid_n)
    base = ABILITY_BASE.with_(lambda_S=lambda_s)
    for q in axis:
        for beta in axis:
            eq = solve_kappa(base.with_(q=float(q), beta=float(beta)), tol=tol)
            rows.append((q, beta, eq.gamma - q, eq.status.value))
    return rows


def cmd_fig1(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    grid_n = args.grid or DEFAULT_GRID
    tol = args.tol or 1e-12
    for lam in FIG1_PANELS:
        rows = fig1_rows(lam, grid_n, tol)
        path = out_dir / f"fig1_lambdaS_{lam:g}.csv"
        _write_csv(path, ["q", "beta", "gamma_minus_q", "status"], rows)
        print(f"wrote {path}")
    return 0


def fig3_rows(grid_n: int, tol: float) -> list[tuple]:
    """gamma - q over the (q, beta) grid for the uniform-worldview sharing game."""
    rows = []
    axis = np.linspace(0.1, 0.9, grid_n)
    F_S = Uniform(0.0, 1.0)
    receiver = PointMass(FIG3_BASE.p_R)
    for q in axis:
        for beta in axis:
            params = FIG3_BASE.with_(q=float(q), beta=float(beta))
            eq = solve_thresholds(F_S, receiver, params, tol=tol)
            gap = float("nan") if eq.gamma is None else eq.gamma - q
            rows.append((q, beta, gap, eq.p_Sl_star, eq.p_Sh_star, eq.status.value))
    return rows


def cmd_fig3(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    grid_n = args.grid or DEFAULT_GRID
    rows = fig3_rows(grid_n, args.tol or 1e-12)
    path = out_dir / "fig3.csv"
    _write_csv(path, ["q", "beta", "gamma_minus_q", "p_Sl", "p_Sh", "status"], rows)
    print(f"wrote {path}")
    return 0


def _axis_values(axis) -> list[float]:
    return [float(v) for v in np.linspace(axis.min, axis.max, axis.steps)]


def cmd_sweep(args) -> int:
    config = load_config(args.config)
    if not config.sweep:
        print("config has no [[sweep]] axes", file=sys.stderr)
        return 1
    if len(config.sweep) > 2:
        print("at most two sweep axes are supported", file=sys.stderr)
        return 1
    violations = _check_config(config)
    if violations:
        print("invalid parameters: " + "; ".join(violations), file=sys.stderr)
        return 1

    grids = [_axis_values(axis) for axis in config.sweep]
    names = [axis.parameter for axis in config.sweep]
    combos = (
        [{names[0]: v} for v in grids[0]]
        if len(grids) == 1
        else [{names[0]: a, names[1]: b} for a in grids[0] for b in grids[1]]
    )

    tol = args.tol or config.tol
    rows = []
    if config.regime is Regime.ABILITY:
        header = ["q", "beta", "lambda_S", "c_S", "kappa0_star", "gamma", "gamma_minus_q", "status"]
        for combo in combos:
            p = config.params.with_(**combo)
            eq = solve_kappa(p, tol=tol)
            rows.append((p.q, p.beta, p.lambda_S, p.c_S,
                         eq.kappa0_star, eq.gamma, eq.gamma - p.q, eq.status.value))
    else:
        header = ["q", "beta", "eta", "p_T", "p_R", "c_S",
                  "p_Sl", "p_Sh", "gamma", "gamma_minus_q", "status", "xi", "c_bar_S"]
        for combo in combos:
            p = config.params.with_(**combo)
            receiver = PointMass(p.p_R) if config.F_R.is_degenerate else config.F_R
            eq = solve_thresholds(config.F_S, receiver, p, tol=tol)
            gamma = float("nan") if eq.gamma is None else eq.gamma
            rows.append((p.q, p.beta, p.eta, p.p_T, p.p_R, p.c_S,
                         eq.p_Sl_star, eq.p_Sh_star, gamma, gamma - p.q,
                         eq.status.value, eq.xi, eq.c_bar_S))

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / (config.output or f"sweep_{config.regime.value}.csv")
    _write_csv(path, header, rows)
    print(f"wrote {path}")
    return 0


def _print_results(results: list[CheckResult]) -> bool:
    width = max(len(r.name) for r in results)
    all_ok = True
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        all_ok &= r.passed
        print(f"{mark}  {r.name:<{width}}  {r.detail}")
    return all_ok


def cmd_verify(args) -> int:
    n_draws = args.n or VERIFY_SIM_DRAWS
    seed = args.seed or 0
    if args.config:
        config = load_config(args.config)
        violations = _check_config(config)
        if violations:
            print("invalid parameters: " + "; ".join(violations), file=sys.stderr)
            return 1
        if config.regime is Regime.ABILITY:
            results = ability_suite(config.params, n_draws=n_draws, seed=seed)
        else:
            results = worldview_suite(
                config.params, config.F_S, config.F_R,
                n_draws=n_draws, seed=seed,
            )
    else:
        results = ability_suite(n_draws=n_draws, seed=seed) + worldview_suite(
            n_draws=n_draws, seed=seed
        )
    ok = _print_results(results)
    if not ok:
        failed = [r.name for r in results if not r.passed]
        print(f"failed checks: {', '.join(failed)}", file=sys.stderr)
        return 3
    return 0


def cmd_simulate(args) -> int:
    config = load_config(args.config)
    violations = _check_config(config)
    if violations:
        print("invalid parameters: " + "; ".join(violations), file=sys.stderr)
        return 1
    block = config.simulation
    n_draws = args.n or (block.n_draws if block else DEFAULT_SIM_DRAWS)
    seed = args.seed if args.seed is not None else (block.seed if block else 0)
    sim_cfg = SimConfig(n_draws=n_draws, seed=seed, trace_path=args.trace)
    tol = args.tol or config.tol
    if config.regime is Regime.ABILITY:
        eq = solve_kappa(config.params, tol=tol)
        report = simulate_ability(config.params, eq, sim_cfg)
        payload = {"equilibrium": eq.to_json_dict(), "report": report.to_json_dict()}
    else:
        eq = solve_thresholds(config.F_S, config.F_R, config.params, tol=tol)
        report = simulate_worldview(config.F_S, config.params, eq, sim_cfg)
        payload = {"equilibrium": eq.to_json_dict(), "report": report.to_json_dict()}
    print(json.dumps(payload, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sharegames",
        description="Equilibrium solvers and Monte Carlo validation for news-sharing signaling games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, *, config_required=False, takes_out=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=config_required, help="TOML experiment config")
        if takes_out:
            p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--grid", type=int, help="grid resolution per axis")
        p.add_argument("--seed", type=int, help="simulation seed (64-bit)")
        p.add_argument("--n", type=int, help="simulation draws")
        p.add_argument("--tol", type=float, help="solver tolerance")
        p.add_argument("--trace", help="per-draw trace CSV path (simulate only)")
        p.set_defaults(fn=fn)
        return p

    add("solve", cmd_solve, "solve one equilibrium, print JSON", config_required=True)
    add("fig1", cmd_fig1, "emit the two ability-game quality grids", takes_out=True)
    add("fig3", cmd_fig3, "emit the worldview-game quality grid", takes_out=True)
    add("sweep", cmd_sweep, "run the config's sweep axes, emit CSV",
        config_required=True, takes_out=True)
    add("verify", cmd_verify, "run proposition suites, print pass/fail table")
    add("simulate", cmd_simulate, "Monte Carlo run under the solved equilibrium",
        config_required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except _SOLVER_ERRORS as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
