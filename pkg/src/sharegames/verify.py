"""Property suites behind the `verify` subcommand.

Each check re-derives a claimed equilibrium property numerically (monotone
sweeps, finite differences, identity residuals, or Monte Carlo agreement) and
reports pass/fail with enough detail to locate an offending parameter tuple.
The acceptance tests run the same machinery at their own grid sizes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import worldview
from .ability import (
    AbilityStatus,
    bayes_plausibility_residual,
    cost_frontier,
    existence_bounds,
    gamma_ability,
    receiver_beliefs,
    solve_kappa,
)
from .distributions import Distribution, PointMass, Uniform
from .params import ModelParams
from .signals import beta_hat, beta_tilde, prob_sigma_one, signal_stats
from .simulate import SimConfig, simulate_ability, simulate_worldview
from .worldview import WorldviewStatus

MONOTONE_SLACK = 1e-9

# Base point of the two-panel quality grids: zero sharing cost, moderately
# precise proper signals, aligned priors.
ABILITY_BASE = ModelParams(
    q=0.5, beta=0.5, eta=2.0 / 3.0, p_T=2.0 / 3.0,
    lambda_S=0.2, lambda_R=0.2, c_S=0.0, p_S=2.0 / 3.0, p_R=2.0 / 3.0,
)

# Worldview desk base: strong receiver prior (eta < p_R), sender pool uniform.
WORLDVIEW_BASE = ModelParams(
    q=0.3, beta=0.4, eta=0.6, p_T=0.8,
    lambda_S=0.2, lambda_R=0.2, c_S=0.05, p_S=0.5, p_R=0.8,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _monotone(values, direction: str, slack: float = MONOTONE_SLACK) -> bool:
    diffs = np.diff(np.asarray(values, dtype=float))
    if direction == "nonincreasing":
        return bool(np.all(diffs <= slack))
    if direction == "nondecreasing":
        return bool(np.all(diffs >= -slack))
    if direction == "strictly_decreasing":
        return bool(np.all(diffs < 0.0))
    if direction == "strictly_increasing":
        return bool(np.all(diffs > 0.0))
    raise ValueError(direction)


# ----------------------------------------------------------------------------
# ability suite
# ----------------------------------------------------------------------------

def check_cost_monotonicity(params: ModelParams, n_points: int = 50) -> CheckResult:
    """Sharing cost up => low-type mixing and fake share both weakly down, to zero at the frontier."""
    frontier = cost_frontier(params)
    costs = np.linspace(0.0, frontier * (1.0 - 1e-9), n_points)
    kappas, gammas = [], []
    for c in costs:
        eq = solve_kappa(params.with_(c_S=float(c)))
        kappas.append(eq.kappa0_star)
        gammas.append(eq.gamma)
    ok = (
        _monotone(kappas, "nonincreasing")
        and _monotone(gammas, "nonincreasing")
        and kappas[-1] < 1e-3
    )
    return CheckResult(
        "cost-monotonicity",
        ok,
        f"kappa0 {kappas[0]:.4f} -> {kappas[-1]:.2e} over {n_points} costs in [0, {frontier:.4f})",
    )


def check_quality_threshold(params: ModelParams, grid_n: int = 17) -> CheckResult:
    """Above the bias threshold, shared information is strictly cleaner than received."""
    bad = []
    for q in np.linspace(0.1, 0.9, grid_n):
        for beta in np.linspace(0.1, 0.9, grid_n):
            p = params.with_(q=float(q), beta=float(beta))
            if beta <= beta_tilde(p):
                continue
            eq = solve_kappa(p)
            if not eq.gamma - p.q < 1e-12:
                bad.append((float(q), float(beta), eq.gamma - p.q))
    return CheckResult(
        "quality-threshold",
        not bad,
        "gamma < q above beta_tilde" if not bad else f"{len(bad)} cells, e.g. {bad[0]}",
    )


def check_mixing_statics(params: ModelParams, n_points: int = 9) -> CheckResult:
    """kappa0* falls in q and p_S, rises in beta, around the base point."""
    def kappa_for(field: str, values) -> list[float]:
        return [solve_kappa(params.with_(**{field: float(v)})).kappa0_star for v in values]

    grid = np.linspace(0.2, 0.8, n_points)
    ok_q = _monotone(kappa_for("q", grid), "nonincreasing")
    ok_b = _monotone(kappa_for("beta", grid), "nondecreasing")
    ok_p = _monotone(kappa_for("p_S", grid), "nonincreasing")
    return CheckResult(
        "mixing-statics",
        ok_q and ok_b and ok_p,
        f"kappa0* monotone in q ({ok_q}), beta ({ok_b}), p_S ({ok_p})",
    )


def check_bayes_plausibility(params: ModelParams) -> CheckResult:
    """Expected receiver posterior equals the prior high-ability share, exactly."""
    worst = max(
        bayes_plausibility_residual(params, float(k)) for k in np.linspace(0.0, 1.0, 21)
    )
    return CheckResult("bayes-plausibility", worst <= 1e-12, f"max residual {worst:.2e}")


def check_existence_bounds(params: ModelParams, n_points: int = 20) -> CheckResult:
    """Frontier endpoints and strict monotonicity on the interior cost segment."""
    eb0 = existence_bounds(params.with_(c_S=0.0))
    c_bar = eb0.c_bar_S
    q_at_zero = eb0.q_bar_of_cS
    q_at_cbar = existence_bounds(params.with_(c_S=c_bar)).q_bar_of_cS
    # the frontier sits at 1 until the low type stops mixing even at q -> 1;
    # it is strictly decreasing only past that knee
    knee = cost_frontier(params.with_(q=1.0 - 1e-12))
    grid = np.linspace(knee, c_bar, n_points)
    q_bars = [existence_bounds(params.with_(c_S=float(c))).q_bar_of_cS for c in grid]
    full_grid = np.linspace(0.0, c_bar, n_points)
    q_full = [existence_bounds(params.with_(c_S=float(c))).q_bar_of_cS for c in full_grid]
    ok = (
        abs(q_at_zero - 1.0) <= 1e-8
        and abs(q_at_cbar) <= 1e-8
        and _monotone(q_bars[1:], "strictly_decreasing")
        and _monotone(q_full, "nonincreasing")
    )
    return CheckResult(
        "existence-bounds",
        ok,
        f"q_bar(0)={q_at_zero:.2e}+... q_bar(c_bar)={q_at_cbar:.2e}, "
        f"strictly decreasing past knee {knee:.4f}",
    )


def check_ability_simulation(params: ModelParams, n_draws: int, seed: int) -> CheckResult:
    """Empirical rates within three standard errors of the analytic equilibrium."""
    p = params.with_(p_T=params.p_R)  # receiver's model must match the data process
    eq = solve_kappa(p)
    rep = simulate_ability(p, eq, SimConfig(n_draws=n_draws, seed=seed))
    b = receiver_beliefs(p, eq.kappa0_star)
    stats = signal_stats(p, p.p_R)
    share_rate = p.lambda_S * stats.z0P + (1.0 - p.lambda_S) * stats.z0 * eq.kappa0_star
    targets = [
        ("share_rate", rep.share_rate, share_rate),
        ("gamma", rep.empirical_gamma, eq.gamma),
        ("pi_0U", rep.posteriors["pi_0U"], b.pi_0U),
        ("pi_empty", rep.posteriors["pi_empty"], b.pi_empty),
        ("p_sigma_one", rep.p_sigma_one, prob_sigma_one(p)),
    ]
    bad = [
        (name, est.value, ana)
        for name, est, ana in targets
        if est is None or abs(est.value - ana) > 3.0 * max(est.se, 1e-12)
    ]
    return CheckResult(
        "ability-simulation",
        not bad,
        f"n={n_draws}, all cells within 3 SE" if not bad else f"off: {bad}",
    )


def ability_suite(
    params: ModelParams = ABILITY_BASE, n_draws: int | None = None, seed: int = 0
) -> list[CheckResult]:
    results = [
        check_cost_monotonicity(params),
        check_quality_threshold(params),
        check_mixing_statics(params),
        check_bayes_plausibility(params),
        check_existence_bounds(params),
    ]
    if n_draws:
        results.append(check_ability_simulation(params, n_draws, seed))
    return results


# ----------------------------------------------------------------------------
# worldview suite
# ----------------------------------------------------------------------------

def _point_receiver(F_R: Distribution | None, params: ModelParams) -> PointMass:
    if isinstance(F_R, PointMass):
        return F_R
    if F_R is None:
        return PointMass(params.p_R)
    return PointMass(F_R.mean())


def check_assumption1_grid(
    params: ModelParams, F_S: Distribution, F_R: Distribution, grid_n: int = 21
) -> CheckResult:
    audit = worldview.check_assumption1(F_S, F_R, params, grid_n=grid_n)
    return CheckResult(
        "assumption1-audit",
        audit.passed,
        f"max dCl/dpSl {audit.max_dCl_dpSl:.3f}, min dCh/dpSh {audit.min_dCh_dpSh:.3f}, "
        f"max det {audit.max_jacobian_det:.3f}, {len(audit.violations)} violations",
    )


def check_threshold_statics(
    params: ModelParams, F_S: Distribution, F_R: Distribution | None, n_points: int = 20
) -> CheckResult:
    """Echo chamber in p_R; costs widen the silence band; FOSD receiver shift."""
    lows_r, highs_r = [], []
    for p_r in np.linspace(0.15, 0.85, n_points):
        eq = worldview.solve_thresholds(F_S, PointMass(float(p_r)), params.with_(p_R=float(p_r)))
        lows_r.append(eq.p_Sl_star)
        highs_r.append(eq.p_Sh_star)
    strict = params.eta > 0.5  # p_hat_R is flat in p_R at eta = 1/2
    direction = "strictly_decreasing" if strict else "nonincreasing"
    ok_r = _monotone(lows_r, direction) and _monotone(highs_r, direction)

    receiver = _point_receiver(F_R, params)
    c_bar = worldview.c_bar_worldview(F_S)
    lows_c, highs_c = [], []
    for c in np.linspace(0.0, 0.9 * c_bar, n_points):
        eq = worldview.solve_thresholds(F_S, receiver, params.with_(c_S=float(c)))
        lows_c.append(eq.p_Sl_star)
        highs_c.append(eq.p_Sh_star)
    ok_c = _monotone(lows_c, "strictly_decreasing") and _monotone(highs_c, "strictly_increasing")

    base = worldview.solve_thresholds(F_S, receiver, params)
    shifted_pr = min(receiver.x + 0.1, 0.95)
    shifted = worldview.solve_thresholds(
        F_S, PointMass(shifted_pr), params.with_(p_R=shifted_pr)
    )
    ok_fosd = (not strict) or (
        shifted.p_Sl_star < base.p_Sl_star and shifted.p_Sh_star < base.p_Sh_star
    )
    return CheckResult(
        "threshold-statics",
        ok_r and ok_c and ok_fosd,
        f"p_R sweep ({ok_r}), c_S sweep ({ok_c}), FOSD pair ({ok_fosd})",
    )


def check_neutral_bias(
    params: ModelParams, F_S: Distribution, F_R: Distribution | None
) -> CheckResult:
    """At beta = beta_hat sharing leaves quality unchanged; off it, quality moves with p_R."""
    receiver = _point_receiver(F_R, params)
    neutral = params.with_(beta=beta_hat(params))
    eq = worldview.solve_thresholds(F_S, receiver, neutral)
    gap = abs(eq.gamma - neutral.q)
    ok_neutral = gap <= 1e-9

    ok_deriv = True
    detail_deriv = "skipped (beta == beta_hat)"
    if abs(params.beta - beta_hat(params)) > 1e-9:
        h = 0.01
        gammas = []
        for p_r in (receiver.x - h, receiver.x + h):
            e = worldview.solve_thresholds(F_S, PointMass(p_r), params.with_(p_R=p_r))
            gammas.append(e.gamma)
        slope = (gammas[1] - gammas[0]) / (2 * h)
        # a bias above beta_hat makes realization 1 the dirtier pool, and a
        # higher p_R tilts sharing toward realization 1, so gamma rises
        expected_sign = 1.0 if params.beta > beta_hat(params) else -1.0
        ok_deriv = slope * expected_sign > 0.0
        detail_deriv = f"dgamma/dp_R={slope:+.4f} with beta {'>' if expected_sign > 0 else '<'} beta_hat"
    return CheckResult(
        "neutral-bias",
        ok_neutral and ok_deriv,
        f"|gamma-q|={gap:.2e} at beta_hat; {detail_deriv}",
    )


def check_sign_identity(
    params: ModelParams,
    F_S: Distribution,
    n_instances: int = 200,
    seed: int = 12345,
) -> CheckResult:
    """Random interior instances: sign of gamma - q equals the bias/asymmetry product sign."""
    rng = np.random.default_rng(seed)
    bad = []
    tried = 0
    found = 0
    while found < n_instances and tried < 20 * n_instances:
        tried += 1
        p_r = float(rng.uniform(0.05, 0.95))
        p = params.with_(
            q=float(rng.uniform(0.05, 0.95)),
            beta=float(rng.uniform(0.0, 1.0)),
            eta=float(rng.uniform(0.5, 1.0)),
            p_T=float(rng.uniform(0.1, 0.9)),
            p_R=p_r,
            c_S=float(rng.uniform(0.0, 0.2)),
        )
        lo = float(rng.uniform(0.0, 0.2))
        hi = float(rng.uniform(0.8, 1.0))
        F = Uniform(lo, hi)
        if p.c_S >= worldview.c_bar_worldview(F):
            continue
        eq = worldview.solve_thresholds(F, PointMass(p_r), p)
        if eq.status is not WorldviewStatus.INTERIOR:
            continue
        found += 1
        gamma = worldview.gamma_worldview(F, p, eq.p_Sl_star, eq.p_Sh_star)
        if abs(gamma - p.q) <= 1e-9:
            continue
        predicted = worldview.predict_quality_sign(F, p, eq.p_Sl_star, eq.p_Sh_star)
        actual = 1 if gamma > p.q else -1
        if predicted != actual:
            bad.append((p.q, p.beta, p.eta, p.p_T, p_r, p.c_S))
    return CheckResult(
        "sign-identity",
        not bad and found == n_instances,
        f"{found} interior instances, {len(bad)} sign mismatches"
        + (f", e.g. {bad[0]}" if bad else ""),
    )


def check_martingale(
    params: ModelParams, F_S: Distribution, F_R: Distribution | None, n_random: int = 50
) -> CheckResult:
    """Posterior means average back to the prior mean, at the solution and at random iterates."""
    receiver = _point_receiver(F_R, params)
    log: list = []
    eq = worldview.solve_thresholds(F_S, receiver, params, iterate_log=log)
    phat = worldview.p_hat_R(params, receiver.x)
    floor, ceil = F_S.support
    worst = 0.0
    points = [(eq.p_Sl_star, eq.p_Sh_star)]
    points += [p for p in log if floor < p[0] < p[1] < ceil][:n_random]
    rng = np.random.default_rng(7)
    xi = eq.xi
    for _ in range(n_random):
        points.append((
            float(rng.uniform(floor + 1e-6, xi)),
            float(rng.uniform(xi, ceil - 1e-6)),
        ))
    for p_sl, p_sh in points:
        if F_S.cdf(p_sl) <= 0.0 or F_S.cdf(p_sh) >= 1.0:
            continue
        worst = max(worst, worldview.martingale_residual(F_S, p_sl, p_sh, phat))
    return CheckResult("martingale", worst <= 1e-10, f"max residual {worst:.2e}")


def check_worldview_simulation(
    params: ModelParams, F_S: Distribution, F_R: Distribution | None, n_draws: int, seed: int
) -> CheckResult:
    """Empirical posteriors and fake share within three standard errors of analytic values."""
    p = params.with_(p_T=params.p_R)  # silent-pool weights must match the data process
    receiver = _point_receiver(F_R, p)
    eq = worldview.solve_thresholds(F_S, receiver, p)
    rep = simulate_worldview(F_S, p, eq, SimConfig(n_draws=n_draws, seed=seed))
    share0 = F_S.cdf(eq.p_Sl_star)
    share1 = 1.0 - F_S.cdf(eq.p_Sh_star)
    p1 = prob_sigma_one(p)
    share_rate = (1.0 - p1) * share0 + p1 * share1
    targets = [
        ("share_rate", rep.share_rate, share_rate),
        ("gamma", rep.empirical_gamma, eq.gamma),
        ("pS_given_0", rep.posteriors["pS_given_0"], eq.posteriors.pS_given_0),
        ("pS_given_1", rep.posteriors["pS_given_1"], eq.posteriors.pS_given_1),
        ("pS_given_empty", rep.posteriors["pS_given_empty"], eq.posteriors.pS_given_empty),
        ("p_sigma_one", rep.p_sigma_one, p1),
    ]
    bad = [
        (name, est.value, ana)
        for name, est, ana in targets
        if est is None or abs(est.value - ana) > 3.0 * max(est.se, 1e-12)
    ]
    return CheckResult(
        "worldview-simulation",
        not bad,
        f"n={n_draws}, all cells within 3 SE" if not bad else f"off: {bad}",
    )


def worldview_suite(
    params: ModelParams = WORLDVIEW_BASE,
    F_S: Distribution | None = None,
    F_R: Distribution | None = None,
    n_draws: int | None = None,
    seed: int = 0,
) -> list[CheckResult]:
    F_S = F_S or Uniform(0.0, 1.0)
    receiver = _point_receiver(F_R, params)
    results = [
        check_assumption1_grid(params, F_S, receiver),
        check_threshold_statics(params, F_S, receiver),
        check_neutral_bias(params, F_S, receiver),
        check_sign_identity(params, F_S),
        check_martingale(params, F_S, receiver),
    ]
    if n_draws:
        results.append(check_worldview_simulation(params, F_S, receiver, n_draws, seed))
    return results
