import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sharegames import (
    DegenerateSignal,
    ModelParams,
    beta_hat,
    beta_tilde,
    prob_sigma_one,
    sender_fake_belief,
    signal_stats,
)


def params(**kw) -> ModelParams:
    base = dict(q=0.5, beta=0.5, eta=2 / 3, p_T=2 / 3,
                lambda_S=0.2, lambda_R=0.2, c_S=0.0, p_S=2 / 3, p_R=2 / 3)
    base.update(kw)
    return ModelParams(**base)


def test_signal_stats_examples():
    s = signal_stats(params(q=0.0, eta=2 / 3), 2 / 3)
    assert s.z0 == pytest.approx(4 / 9, abs=1e-15)
    assert s.z0P == pytest.approx(4 / 9, abs=1e-15)
    assert s.z0F == 0.0

    s = signal_stats(params(q=1.0, beta=0.0), 0.5)
    assert (s.z0, s.z0F, s.z0P) == (1.0, 1.0, 0.0)

    s = signal_stats(params(q=0.5, beta=0.0, eta=0.75), 0.5)
    assert s.z0P == pytest.approx(0.25, abs=1e-15)
    assert s.z0F == pytest.approx(0.5, abs=1e-15)
    assert s.z0 == pytest.approx(0.75, abs=1e-15)


@given(
    q=st.floats(0.0, 1.0), beta=st.floats(0.0, 1.0),
    eta=st.floats(0.5, 1.0), p=st.floats(0.0, 1.0),
)
@settings(max_examples=300, deadline=None)
def test_stats_split_exactly(q, beta, eta, p):
    s = signal_stats(params(q=q, beta=beta, eta=eta), p)
    assert s.z0P + s.z0F == s.z0  # exact by construction
    assert 0.0 <= s.z0P <= s.z0 <= 1.0


def test_sender_fake_belief_examples():
    assert sender_fake_belief(params(beta=1.0)) == 0.0
    assert sender_fake_belief(params(q=0.0)) == 0.0
    p = params(q=0.5, beta=0.0, eta=0.75, p_S=0.5)
    assert sender_fake_belief(p) == pytest.approx(2 / 3, abs=1e-15)


def test_sender_fake_belief_degenerate():
    with pytest.raises(DegenerateSignal):
        sender_fake_belief(params(q=1.0, beta=1.0))


def test_fake_belief_monotone_in_q():
    for beta in (0.0, 0.3, 0.7, 0.999):
        vals = [sender_fake_belief(params(q=q, beta=beta)) for q in np.linspace(0.0, 0.99, 100)]
        diffs = np.diff(vals)
        assert np.all(diffs > 0.0), f"not strictly increasing at beta={beta}"
    # fake signals never surprising: belief pinned at zero
    vals = [sender_fake_belief(params(q=q, beta=1.0)) for q in np.linspace(0.0, 0.99, 100)]
    assert np.all(np.diff(vals) >= 0.0) and vals[-1] == 0.0


def test_prob_sigma_one_examples():
    assert prob_sigma_one(params(q=0.0, p_T=0.5, eta=0.8)) == pytest.approx(0.5, abs=1e-15)
    assert prob_sigma_one(params(q=1.0, beta=0.37)) == pytest.approx(0.37, abs=1e-15)
    assert prob_sigma_one(params(q=0.5, beta=0.5, p_T=0.5)) == pytest.approx(0.5, abs=1e-15)


@given(eta=st.floats(0.5, 1.0), p_T=st.floats(0.01, 0.99))
@settings(max_examples=100, deadline=None)
def test_no_fakes_makes_sigma_one_rate_beta_hat(eta, p_T):
    p = params(q=0.0, eta=eta, p_T=p_T)
    assert prob_sigma_one(p) == beta_hat(p)


def test_beta_hat_examples():
    assert beta_hat(params(p_T=0.5, eta=0.9)) == pytest.approx(0.5, abs=1e-15)
    assert beta_hat(params(p_T=2 / 3, eta=2 / 3)) == pytest.approx(5 / 9, abs=1e-15)
    assert beta_hat(params(p_T=0.123, eta=0.5)) == pytest.approx(0.5, abs=1e-15)


def test_beta_tilde_reported_thresholds():
    assert beta_tilde(params(lambda_S=0.1, eta=2 / 3, p_T=2 / 3)) == pytest.approx(41 / 81, abs=1e-12)
    assert beta_tilde(params(lambda_S=0.2, eta=2 / 3, p_T=2 / 3)) == pytest.approx(4 / 9, abs=1e-12)
    assert beta_tilde(params(lambda_S=0.0, eta=0.5)) == pytest.approx(0.5, abs=1e-15)


def test_beta_tilde_can_go_negative():
    # near-perfect signals against a surprising state: condition holds for all beta
    assert beta_tilde(params(lambda_S=0.1, eta=0.99, p_T=0.05)) < 0.0
