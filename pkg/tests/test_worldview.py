"""Worldview-game solver tests.

The uniform-sender, symmetric-receiver case has a hand solution: with the
silent pool balanced (p_hat_R = 1/2) the indifference system is linear and
gives thresholds ((1 - 2 c) / 3, (2 + 2 c) / 3). That family is the main
oracle; asymmetric cases are checked through invariants (martingale identity,
sign identity, monotone statics) rather than frozen numbers.
"""

import numpy as np
import pytest

from sharegames import (
    EmptyPool,
    ModelParams,
    NoSharing,
    PiecewiseLinearDensity,
    PointMass,
    Uniform,
    WorldviewStatus,
    beta_hat,
    c_bar_worldview,
    check_assumption1,
    gamma_worldview,
    indifference,
    martingale_residual,
    p_hat_R,
    posteriors,
    predict_quality_sign,
    solve_thresholds,
    solve_xi,
    xi_roots,
)

UNIT = Uniform(0.0, 1.0)


def _normalized(knots) -> PiecewiseLinearDensity:
    area = sum(0.5 * (f0 + f1) * (x1 - x0) for (x0, f0), (x1, f1) in zip(knots, knots[1:]))
    return PiecewiseLinearDensity([(x, f / area) for x, f in knots])


# heavy off-center spike: near-degenerate sender pool
SPIKE = _normalized([(0.0, 0.2), (0.84, 0.2), (0.85, 60.0), (0.86, 0.2), (1.0, 0.2)])


def symmetric_params(c_S: float = 0.0) -> ModelParams:
    # beta = p_R = 1/2 pins the receiver's draw probability at 1/2 for any q, eta
    return ModelParams(q=0.5, beta=0.5, eta=0.6, p_T=0.5,
                       lambda_S=0.2, lambda_R=0.2, c_S=c_S, p_S=0.5, p_R=0.5)


def test_p_hat_r_examples(worldview_base):
    assert p_hat_R(worldview_base.with_(q=0.0), 0.5) == pytest.approx(0.5, abs=1e-15)
    assert p_hat_R(worldview_base.with_(q=1.0, beta=0.37), 0.8) == pytest.approx(0.37, abs=1e-15)
    assert p_hat_R(worldview_base.with_(q=0.5, beta=1.0, eta=1.0), 0.0) == pytest.approx(0.5, abs=1e-15)


def test_p_hat_r_increasing_in_prior(worldview_base):
    grid = np.linspace(0.0, 1.0, 11)
    vals = [p_hat_R(worldview_base, float(p)) for p in grid]
    assert np.all(np.diff(vals) > 0.0)  # eta = 0.6 > 1/2


# ---------------------------------------------------------------------------
# posteriors
# ---------------------------------------------------------------------------

def test_posteriors_uniform_examples():
    post = posteriors(UNIT, 0.3, 0.8, 0.5)
    assert post.pS_given_0 == pytest.approx(0.15, abs=1e-12)
    assert post.pS_given_1 == pytest.approx(0.9, abs=1e-12)

    balanced = posteriors(UNIT, 1 / 3, 2 / 3, 0.5)
    assert balanced.pS_given_empty == pytest.approx(0.5, abs=1e-12)


def test_posteriors_empty_pool():
    with pytest.raises(EmptyPool):
        posteriors(Uniform(0.4, 0.6), 0.2, 0.5, 0.5)  # nobody below 0.2
    with pytest.raises(ValueError):
        posteriors(UNIT, 0.0, 0.5, 0.5)


def test_martingale_identity_random():
    rng = np.random.default_rng(21)
    dists = [UNIT, Uniform(0.1, 0.9), PiecewiseLinearDensity([(0.0, 0.0), (0.5, 2.0), (1.0, 0.0)])]
    for _ in range(200):
        d = dists[rng.integers(len(dists))]
        lo, hi = d.support
        p_sl = float(rng.uniform(lo + 0.05, lo + 0.4 * (hi - lo)))
        p_sh = float(rng.uniform(p_sl + 0.1 * (hi - lo), hi - 0.01))
        phat = float(rng.uniform(0.01, 0.99))
        assert martingale_residual(d, p_sl, p_sh, phat) <= 1e-10


# ---------------------------------------------------------------------------
# indifference conditions
# ---------------------------------------------------------------------------

def test_indifference_hand_solution_is_root():
    c_l, c_h = indifference(UNIT, PointMass(0.5), symmetric_params(), 1 / 3, 2 / 3)
    assert c_l == pytest.approx(0.0, abs=1e-12)
    assert c_h == pytest.approx(0.0, abs=1e-12)


def test_indifference_off_root_value():
    # hand evaluation: silent posterior 79/165, so C_l = -1/10 + 46/165 = 59/330
    c_l, _ = indifference(UNIT, PointMass(0.5), symmetric_params(), 0.2, 2 / 3)
    assert c_l == pytest.approx(59 / 330, abs=1e-12)
    assert c_l > 0.0


def test_indifference_cost_shift_additive():
    base = indifference(UNIT, PointMass(0.5), symmetric_params(0.0), 0.3, 0.7)
    shifted = indifference(UNIT, PointMass(0.5), symmetric_params(0.08), 0.3, 0.7)
    assert base[0] - shifted[0] == pytest.approx(0.08, abs=1e-14)
    assert base[1] - shifted[1] == pytest.approx(0.08, abs=1e-14)


# ---------------------------------------------------------------------------
# split point and cost ceiling
# ---------------------------------------------------------------------------

def test_xi_uniform():
    assert solve_xi(UNIT) == pytest.approx(0.5, abs=1e-10)


def test_xi_symmetric_density():
    tent = PiecewiseLinearDensity([(0.0, 0.0), (0.5, 2.0), (1.0, 0.0)])
    assert solve_xi(tent) == pytest.approx(0.5, abs=1e-10)


def test_xi_sub_support():
    assert solve_xi(Uniform(0.0, 0.5)) == pytest.approx(0.25, abs=1e-10)


def test_xi_multiplicity_flagged():
    spiky = PiecewiseLinearDensity(
        [(0.0, 0.01), (0.49, 0.01), (0.5, 99.01), (0.51, 0.01), (1.0, 0.01)]
    )
    assert len(xi_roots(spiky)) > 1
    with pytest.warns(UserWarning, match="roots"):
        assert solve_xi(spiky) < 0.5


def test_cost_ceiling_examples():
    assert c_bar_worldview(UNIT) == pytest.approx(0.25, abs=1e-10)
    assert c_bar_worldview(Uniform(0.0, 0.5)) == pytest.approx(0.125, abs=1e-10)
    with pytest.raises(ValueError):
        c_bar_worldview(PointMass(0.5))


# ---------------------------------------------------------------------------
# solving
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("c_S", [0.0, 0.05, 0.1, 0.2])
def test_symmetric_closed_form(c_S):
    eq = solve_thresholds(UNIT, PointMass(0.5), symmetric_params(c_S))
    assert eq.status is WorldviewStatus.INTERIOR
    assert eq.p_Sl_star == pytest.approx((1 - 2 * c_S) / 3, abs=1e-9)
    assert eq.p_Sh_star == pytest.approx((2 + 2 * c_S) / 3, abs=1e-9)
    assert max(eq.residuals) <= 1e-9


def test_interior_region_past_the_sufficient_ceiling():
    # the cost ceiling is sufficient, not necessary: the symmetric closed form
    # (1 - 2c)/3 stays interior until c = 1/2, well past c_bar = 1/4
    eq = solve_thresholds(UNIT, PointMass(0.5), symmetric_params(0.26))
    assert eq.status is WorldviewStatus.INTERIOR
    assert eq.c_bar_S == pytest.approx(0.25, abs=1e-10)
    assert eq.p_Sl_star == pytest.approx((1 - 2 * 0.26) / 3, abs=1e-9)
    late = solve_thresholds(UNIT, PointMass(0.5), symmetric_params(0.51))
    assert late.status is not WorldviewStatus.INTERIOR


def test_prohibitive_cost_shuts_sharing_down():
    eq = solve_thresholds(UNIT, PointMass(0.5), symmetric_params(0.9))
    assert eq.status is WorldviewStatus.NO_SHARING
    assert (eq.p_Sl_star, eq.p_Sh_star) == (0.0, 1.0)
    assert eq.gamma is None and eq.posteriors is None


def test_interior_sign_pattern_and_ordering(worldview_base):
    eq = solve_thresholds(UNIT, PointMass(worldview_base.p_R), worldview_base)
    assert eq.status is WorldviewStatus.INTERIOR
    assert 0.0 < eq.p_Sl_star < eq.xi < eq.p_Sh_star < 1.0
    post = eq.posteriors
    assert post.pS_given_0 < eq.p_Sl_star < post.pS_given_empty
    assert post.pS_given_1 > eq.p_Sh_star > post.pS_given_empty


def test_solver_deterministic(worldview_base):
    receiver = PointMass(worldview_base.p_R)
    assert solve_thresholds(UNIT, receiver, worldview_base) == solve_thresholds(
        UNIT, receiver, worldview_base
    )


def test_martingale_holds_at_solver_iterates(worldview_base):
    log: list = []
    eq = solve_thresholds(UNIT, PointMass(worldview_base.p_R), worldview_base, iterate_log=log)
    assert len(log) > 50
    phat = p_hat_R(worldview_base, worldview_base.p_R)
    for p_sl, p_sh in log:
        if UNIT.cdf(p_sl) <= 0.0 or UNIT.cdf(p_sh) >= 1.0 or p_sl > p_sh:
            continue
        assert martingale_residual(UNIT, max(p_sl, 1e-9), min(p_sh, 1 - 1e-9), phat) <= 1e-10
    assert eq.status is WorldviewStatus.INTERIOR


def test_multi_receiver_quadrature(worldview_base):
    # a continuum of receivers integrates the silence gain instead of
    # evaluating it at one point; the solve must still be interior and tight
    eq = solve_thresholds(UNIT, Uniform(0.6, 0.95), worldview_base)
    assert eq.status is WorldviewStatus.INTERIOR
    assert max(eq.residuals) <= 1e-9
    point = solve_thresholds(UNIT, PointMass(0.775), worldview_base)
    assert eq.p_Sl_star == pytest.approx(point.p_Sl_star, abs=0.02)


def test_sub_support_sender_pool(worldview_base):
    eq = solve_thresholds(Uniform(0.2, 0.8), PointMass(worldview_base.p_R), worldview_base)
    assert eq.status is WorldviewStatus.INTERIOR
    assert 0.2 < eq.p_Sl_star < eq.xi < eq.p_Sh_star < 0.8


# ---------------------------------------------------------------------------
# monotonicity audit
# ---------------------------------------------------------------------------

def test_audit_passes_for_uniform_balanced():
    audit = check_assumption1(UNIT, PointMass(0.5), symmetric_params(), grid_n=41)
    assert audit.passed
    assert audit.max_dCl_dpSl < 0.0
    assert audit.min_dCh_dpSh > 0.0
    assert audit.max_jacobian_det < 0.0


def test_audit_reports_near_degenerate_spike(worldview_base):
    audit = check_assumption1(SPIKE, PointMass(worldview_base.p_R), worldview_base, grid_n=21)
    assert not audit.passed
    assert len(audit.violations) > 0  # report-style, no exception


def test_audit_deterministic(worldview_base):
    a = check_assumption1(UNIT, PointMass(0.8), worldview_base, grid_n=15)
    b = check_assumption1(UNIT, PointMass(0.8), worldview_base, grid_n=15)
    assert a == b


# ---------------------------------------------------------------------------
# quality of shared information
# ---------------------------------------------------------------------------

def test_gamma_neutral_bias_keeps_quality(worldview_base):
    p = worldview_base.with_(beta=beta_hat(worldview_base))
    assert gamma_worldview(UNIT, p, 0.3, 0.8) == pytest.approx(p.q, abs=1e-12)


def test_gamma_symmetric_sharing_keeps_quality(worldview_base):
    # F(p_Sl) = 1 - F(p_Sh): the asymmetry factor vanishes for any beta
    for beta in (0.1, 0.5, 0.9):
        p = worldview_base.with_(beta=beta)
        assert gamma_worldview(UNIT, p, 0.25, 0.75) == pytest.approx(p.q, abs=1e-12)


def test_gamma_all_fake_limit(worldview_base):
    p = worldview_base.with_(q=1.0 - 1e-12)
    assert gamma_worldview(UNIT, p, 0.3, 0.8) == pytest.approx(1.0, abs=1e-9)


def test_gamma_no_sharing_error(worldview_base):
    with pytest.raises(NoSharing):
        gamma_worldview(Uniform(0.4, 0.6), worldview_base, 0.1, 0.9)


def test_predicted_sign_examples(worldview_base):
    p = worldview_base.with_(beta=0.2)  # beta < beta_hat = 0.56
    assert predict_quality_sign(UNIT, p, 0.4, 0.8) == 1    # share-0 heavier
    assert predict_quality_sign(UNIT, p, 0.2, 0.6) == -1   # share-1 heavier
    neutral = worldview_base.with_(beta=beta_hat(worldview_base))
    assert predict_quality_sign(UNIT, neutral, 0.4, 0.8) == 0
    high = worldview_base.with_(beta=0.9)
    assert predict_quality_sign(UNIT, high, 0.4, 0.8) == -1


def test_sign_identity_on_random_interiors():
    rng = np.random.default_rng(31)
    found = 0
    while found < 200:
        p_r = float(rng.uniform(0.05, 0.95))
        p = ModelParams(
            q=float(rng.uniform(0.05, 0.95)), beta=float(rng.uniform(0.0, 1.0)),
            eta=float(rng.uniform(0.5, 1.0)), p_T=float(rng.uniform(0.1, 0.9)),
            lambda_S=0.2, lambda_R=0.2, c_S=float(rng.uniform(0.0, 0.2)),
            p_S=0.5, p_R=p_r,
        )
        if p.c_S >= 0.25:
            continue
        eq = solve_thresholds(UNIT, PointMass(p_r), p)
        if eq.status is not WorldviewStatus.INTERIOR:
            continue
        found += 1
        gamma = gamma_worldview(UNIT, p, eq.p_Sl_star, eq.p_Sh_star)
        if abs(gamma - p.q) <= 1e-9:
            continue
        actual = 1 if gamma > p.q else -1
        assert predict_quality_sign(UNIT, p, eq.p_Sl_star, eq.p_Sh_star) == actual


def test_echo_chamber_statics(worldview_base):
    lows, highs = [], []
    for p_r in np.linspace(0.2, 0.9, 8):
        eq = solve_thresholds(UNIT, PointMass(float(p_r)), worldview_base.with_(p_R=float(p_r)))
        lows.append(eq.p_Sl_star)
        highs.append(eq.p_Sh_star)
    assert np.all(np.diff(lows) < 0.0)
    assert np.all(np.diff(highs) < 0.0)


def test_cost_statics(worldview_base):
    lows, highs = [], []
    for c in np.linspace(0.0, 0.2, 8):
        eq = solve_thresholds(UNIT, PointMass(worldview_base.p_R), worldview_base.with_(c_S=float(c)))
        lows.append(eq.p_Sl_star)
        highs.append(eq.p_Sh_star)
    assert np.all(np.diff(lows) < 0.0)
    assert np.all(np.diff(highs) > 0.0)
