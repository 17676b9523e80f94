"""Monte Carlo simulation of the sharing games under solved strategies.

Each draw plays one full round: nature draws the state, the signal's veracity
and realization, and the sender's type; the sender applies the equilibrium
strategy; receiver-side cells are tallied. Empirical shares, posteriors, and
the fake fraction of shared signals then cross-validate the analytic solvers.

Randomness comes from counter-based Philox streams keyed on a 64-bit seed.
Draws are processed in fixed-size shards and shard i uses the stream
Philox(key=seed).jumped(i), so a serial run and any sharded/parallel run that
merges tallies in shard order produce bit-identical reports.

Posterior validation is only meaningful when the receiver's subjective signal
model coincides with the data-generating process, i.e. p_T = p_R (ability) or
p_R = p_T (worldview silent-pool weights); the validation helpers in the test
suite pin that equality.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .ability import AbilityEquilibrium
from .distributions import Distribution
from .params import ModelParams
from .worldview import WorldviewEquilibrium

SHARD_SIZE = 1 << 17


@dataclass(frozen=True)
class SimConfig:
    """Run size and seed. The trace path, when set, dumps per-draw rows (small runs only)."""

    n_draws: int
    seed: int
    trace_path: str | Path | None = None

    def __post_init__(self):
        if self.n_draws < 1:
            raise ValueError("n_draws must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


@dataclass(frozen=True)
class Estimate:
    value: float
    se: float
    n: int


@dataclass(frozen=True)
class SimReport:
    regime: str
    n_draws: int
    seed: int
    share_rate: Estimate
    empirical_gamma: Estimate | None
    posteriors: dict
    p_sigma_one: Estimate
    counts: dict

    def to_json_dict(self) -> dict:
        def enc(e):
            return None if e is None else {"value": e.value, "se": e.se, "n": e.n}

        return {
            "regime": self.regime,
            "n_draws": self.n_draws,
            "seed": self.seed,
            "share_rate": enc(self.share_rate),
            "empirical_gamma": enc(self.empirical_gamma),
            "posteriors": {k: enc(v) for k, v in self.posteriors.items()},
            "p_sigma_one": enc(self.p_sigma_one),
            "counts": self.counts,
        }


def _proportion(k: int, n: int) -> Estimate | None:
    if n == 0:
        return None
    p = k / n
    return Estimate(value=p, se=math.sqrt(p * (1.0 - p) / n), n=n)


def _cell_mean(total: float, total_sq: float, n: int) -> Estimate | None:
    if n == 0:
        return None
    mean = total / n
    if n < 2:
        return Estimate(value=mean, se=0.0, n=n)
    var = max(total_sq - n * mean * mean, 0.0) / (n - 1)
    return Estimate(value=mean, se=math.sqrt(var / n), n=n)


def _shard_streams(cfg: SimConfig):
    base = np.random.Philox(key=cfg.seed)
    offset = 0
    shard = 0
    while offset < cfg.n_draws:
        size = min(SHARD_SIZE, cfg.n_draws - offset)
        yield offset, size, np.random.Generator(base.jumped(shard))
        offset += size
        shard += 1


def _draw_round(rng, size: int, params: ModelParams):
    """State, veracity, and realization for one shard, in a fixed draw order."""
    omega = rng.random(size) < params.p_T
    fake = rng.random(size) < params.q
    p_one = np.where(
        fake, params.beta, np.where(omega, params.eta, 1.0 - params.eta)
    )
    sigma = rng.random(size) < p_one
    return omega, fake, sigma


def _open_trace(cfg: SimConfig):
    if cfg.trace_path is None:
        return None, None
    fh = open(cfg.trace_path, "w", newline="")
    writer = csv.writer(fh)
    writer.writerow(["draw", "omega", "veracity", "sigma", "theta_or_pS", "shared", "checked"])
    return fh, writer


def simulate_ability(
    params: ModelParams, eq: AbilityEquilibrium, cfg: SimConfig
) -> SimReport:
    """Play the ability game: high senders share checked-proper surprising signals,
    low senders share surprising signals with probability kappa0_star."""
    kappa = eq.kappa0_star
    counts = dict(
        share=0, share_high=0, share_fake=0,
        checked_proper=0, checked_proper_high=0,
        no_share=0, no_share_high=0, sigma_one=0,
    )
    fh, trace = _open_trace(cfg)
    try:
        for offset, size, rng in _shard_streams(cfg):
            omega, fake, sigma = _draw_round(rng, size, params)
            high_s = rng.random(size) < params.lambda_S
            low_mix = rng.random(size) < kappa
            high_r = rng.random(size) < params.lambda_R

            surprising = ~sigma  # receiver is optimistic about state 1
            share = surprising & np.where(high_s, ~fake, low_mix)
            checked = share & high_r  # high receivers check surprising shares
            proper_share = share & ~fake

            counts["share"] += int(share.sum())
            counts["share_high"] += int((share & high_s).sum())
            counts["share_fake"] += int((share & fake).sum())
            counts["checked_proper"] += int(proper_share.sum())
            counts["checked_proper_high"] += int((proper_share & high_s).sum())
            counts["no_share"] += int(size - share.sum())
            counts["no_share_high"] += int((high_s & ~share).sum())
            counts["sigma_one"] += int(sigma.sum())

            if trace is not None:
                for i in range(size):
                    trace.writerow([
                        offset + i, int(omega[i]), int(fake[i]), int(sigma[i]),
                        "H" if high_s[i] else "L", int(share[i]), int(checked[i]),
                    ])
    finally:
        if fh is not None:
            fh.close()

    n = cfg.n_draws
    return SimReport(
        regime="ability",
        n_draws=n,
        seed=cfg.seed,
        share_rate=_proportion(counts["share"], n),
        empirical_gamma=_proportion(counts["share_fake"], counts["share"]),
        posteriors={
            "pi_0U": _proportion(counts["share_high"], counts["share"]),
            "pi_0P": _proportion(counts["checked_proper_high"], counts["checked_proper"]),
            "pi_empty": _proportion(counts["no_share_high"], counts["no_share"]),
        },
        p_sigma_one=_proportion(counts["sigma_one"], n),
        counts=counts,
    )


def simulate_worldview(
    F_S: Distribution, params: ModelParams, eq: WorldviewEquilibrium, cfg: SimConfig
) -> SimReport:
    """Play the worldview game: share realization 0 below p_Sl_star, 1 above p_Sh_star."""
    p_sl, p_sh = eq.p_Sl_star, eq.p_Sh_star
    counts = dict(share_0=0, share_1=0, no_share=0, share_fake=0, sigma_one=0)
    sums = dict(share_0=0.0, share_1=0.0, no_share=0.0)
    sums_sq = dict(share_0=0.0, share_1=0.0, no_share=0.0)
    fh, trace = _open_trace(cfg)
    try:
        for offset, size, rng in _shard_streams(cfg):
            omega, fake, sigma = _draw_round(rng, size, params)
            p_s = np.asarray(F_S.ppf(rng.random(size)), dtype=float)

            share0 = ~sigma & (p_s <= p_sl)
            share1 = sigma & (p_s >= p_sh)
            silent = ~(share0 | share1)

            counts["share_0"] += int(share0.sum())
            counts["share_1"] += int(share1.sum())
            counts["no_share"] += int(silent.sum())
            counts["share_fake"] += int((fake & (share0 | share1)).sum())
            counts["sigma_one"] += int(sigma.sum())
            for key, mask in (("share_0", share0), ("share_1", share1), ("no_share", silent)):
                sums[key] += float(p_s[mask].sum())
                sums_sq[key] += float((p_s[mask] ** 2).sum())

            if trace is not None:
                shared = share0 | share1
                for i in range(size):
                    trace.writerow([
                        offset + i, int(omega[i]), int(fake[i]), int(sigma[i]),
                        f"{p_s[i]:.9f}", int(shared[i]), 0,
                    ])
    finally:
        if fh is not None:
            fh.close()

    n = cfg.n_draws
    n_shared = counts["share_0"] + counts["share_1"]
    return SimReport(
        regime="worldview",
        n_draws=n,
        seed=cfg.seed,
        share_rate=_proportion(n_shared, n),
        empirical_gamma=_proportion(counts["share_fake"], n_shared),
        posteriors={
            "pS_given_0": _cell_mean(sums["share_0"], sums_sq["share_0"], counts["share_0"]),
            "pS_given_1": _cell_mean(sums["share_1"], sums_sq["share_1"], counts["share_1"]),
            "pS_given_empty": _cell_mean(sums["no_share"], sums_sq["no_share"], counts["no_share"]),
        },
        p_sigma_one=_proportion(counts["sigma_one"], n),
        counts=counts,
    )
