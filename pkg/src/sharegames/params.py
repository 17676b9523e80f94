"""Exogenous game parameters, admissibility checks, and config-file loading.

Parameter ranges follow the model's primitives: shares of fake signals and
true-state probabilities live strictly inside (0, 1), high-ability population
shares strictly inside (0, 1/2), proper-signal precision in [1/2, 1]. Boundary
inputs are rejected rather than nudged because the equilibrium arguments rely
on the strict versions of these inequalities.

The two games impose different regime conditions: ability signaling needs a
surprising-signal direction (p_R > 1/2) and a decision-relevant proper signal
(eta >= p_R); worldview signaling is the strong-prior case (eta < p_R), with
an explicit override for desk experiments run outside that range.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .distributions import Distribution, PointMass, Uniform, from_spec
from .errors import ConfigError, InvalidParams


class Regime(Enum):
    ABILITY = "ability"
    WORLDVIEW = "worldview"


@dataclass(frozen=True)
class ModelParams:
    """All exogenous scalars of the sharing games.

    q         probability a signal is fake, in (0, 1)
    beta      bias of a fake signal toward realization 1, in [0, 1]
    eta       precision of a proper signal, in [1/2, 1]
    p_T       true probability that the state is 1, in (0, 1)
    lambda_S  probability the sender has high ability, in (0, 1/2)
    lambda_R  probability a receiver has high ability, in (0, 1/2)
    c_S       cost of sharing a signal, >= 0
    p_S, p_R  sender/receiver prior that the state is 1, in [0, 1]
    """

    q: float
    beta: float
    eta: float
    p_T: float
    lambda_S: float
    lambda_R: float
    c_S: float
    p_S: float
    p_R: float

    def with_(self, **changes) -> "ModelParams":
        return replace(self, **changes)


PARAM_KEYS = ("q", "beta", "eta", "p_T", "lambda_S", "lambda_R", "c_S", "p_S", "p_R")


def validate(params: ModelParams, regime: Regime, *, worldview_override: bool = False) -> list[str]:
    """Return the list of violated constraints; empty iff admissible for the regime."""
    v = []
    if not 0.0 < params.q < 1.0:
        v.append("q ∉ (0, 1)")
    if not 0.0 <= params.beta <= 1.0:
        v.append("beta ∉ [0, 1]")
    if not 0.5 <= params.eta <= 1.0:
        v.append("eta ∉ [1/2, 1]")
    if not 0.0 < params.p_T < 1.0:
        v.append("p_T ∉ (0, 1)")
    if not 0.0 < params.lambda_S < 0.5:
        v.append("lambda_S ∉ (0, 1/2)")
    if not 0.0 < params.lambda_R < 0.5:
        v.append("lambda_R ∉ (0, 1/2)")
    if params.c_S < 0.0:
        v.append("c_S < 0")
    if not 0.0 <= params.p_S <= 1.0:
        v.append("p_S ∉ [0, 1]")
    if not 0.0 <= params.p_R <= 1.0:
        v.append("p_R ∉ [0, 1]")
    if regime is Regime.ABILITY:
        if params.p_R <= 0.5:
            v.append("p_R ≤ 1/2 in ability regime")
        if params.eta < params.p_R:
            v.append("eta < p_R in ability regime")
    elif regime is Regime.WORLDVIEW:
        if params.eta >= params.p_R and not worldview_override:
            v.append("eta ≥ p_R in worldview regime (set worldview_override to allow)")
    return v


def require_valid(params: ModelParams, regime: Regime, *, worldview_override: bool = False) -> None:
    violations = validate(params, regime, worldview_override=worldview_override)
    if violations:
        raise InvalidParams("; ".join(violations))


@dataclass(frozen=True)
class SweepAxis:
    parameter: str
    min: float
    max: float
    steps: int


@dataclass(frozen=True)
class SimulationBlock:
    n_draws: int
    seed: int


@dataclass(frozen=True)
class ExperimentConfig:
    regime: Regime
    params: ModelParams
    F_S: Distribution
    F_R: Distribution
    worldview_override: bool = False
    tol: float = 1e-12
    sweep: tuple[SweepAxis, ...] = ()
    simulation: SimulationBlock | None = None
    output: str | None = None


_TOP_LEVEL_KEYS = set(PARAM_KEYS) | {
    "regime",
    "F_S",
    "F_R",
    "worldview_override",
    "tol",
    "sweep",
    "simulation",
    "output",
}


def _as_float(raw: dict, key: str) -> float:
    value = raw[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"key {key!r} must be a number, got {value!r}")
    return float(value)


def parse_config(raw: dict) -> ExperimentConfig:
    """Build an ExperimentConfig from a parsed TOML table, rejecting unknown keys."""
    unknown = sorted(set(raw) - _TOP_LEVEL_KEYS)
    if unknown:
        raise ConfigError(f"unknown config key(s): {', '.join(unknown)}")
    missing = sorted(set(PARAM_KEYS) - set(raw))
    if missing:
        raise ConfigError(f"missing parameter key(s): {', '.join(missing)}")
    try:
        regime = Regime(raw.get("regime", "ability"))
    except ValueError:
        raise ConfigError(f"regime must be 'ability' or 'worldview', got {raw.get('regime')!r}")

    params = ModelParams(**{k: _as_float(raw, k) for k in PARAM_KEYS})
    F_S = from_spec(raw["F_S"]) if "F_S" in raw else Uniform(0.0, 1.0)
    # default receiver pool: a single known receiver at the scalar prior p_R
    F_R = from_spec(raw["F_R"]) if "F_R" in raw else PointMass(params.p_R)
    if isinstance(F_R, PointMass) and F_R.x != params.p_R:
        raise ConfigError(
            f"point-mass F_R at {F_R.x} disagrees with p_R = {params.p_R}"
        )

    axes = []
    for entry in raw.get("sweep", []):
        extra = sorted(set(entry) - {"parameter", "min", "max", "steps"})
        if extra:
            raise ConfigError(f"unknown sweep key(s): {', '.join(extra)}")
        try:
            axis = SweepAxis(
                parameter=entry["parameter"],
                min=float(entry["min"]),
                max=float(entry["max"]),
                steps=int(entry["steps"]),
            )
        except KeyError as exc:
            raise ConfigError(f"sweep axis missing key {exc.args[0]!r}")
        if axis.parameter not in PARAM_KEYS:
            raise ConfigError(f"sweep parameter {axis.parameter!r} is not a model parameter")
        if axis.steps < 2:
            raise ConfigError("sweep steps must be >= 2")
        axes.append(axis)

    simulation = None
    if "simulation" in raw:
        block = raw["simulation"]
        extra = sorted(set(block) - {"n_draws", "seed"})
        if extra:
            raise ConfigError(f"unknown simulation key(s): {', '.join(extra)}")
        simulation = SimulationBlock(
            n_draws=int(block.get("n_draws", 100_000)), seed=int(block.get("seed", 0))
        )
        if simulation.n_draws < 1:
            raise ConfigError("simulation n_draws must be >= 1")

    return ExperimentConfig(
        regime=regime,
        params=params,
        F_S=F_S,
        F_R=F_R,
        worldview_override=bool(raw.get("worldview_override", False)),
        tol=float(raw.get("tol", 1e-12)),
        sweep=tuple(axes),
        simulation=simulation,
        output=raw.get("output"),
    )


def load_config(path: str | Path) -> ExperimentConfig:
    """Parse a TOML experiment config from disk."""
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"TOML parse error in {path}: {exc}")
    return parse_config(raw)
