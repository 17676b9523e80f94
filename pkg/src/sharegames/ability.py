"""Equilibrium of the ability-signaling game.

High-ability senders fact-check surprising signals and share exactly the
proper ones. A low-ability sender cannot check, so in equilibrium she mixes:
she shares a surprising signal with probability kappa0 chosen to equalize the
expected social image from sharing an unverified surprising signal against
the image from staying silent,

    delta(kappa0) = u_0U(kappa0) - u_empty(kappa0) = 0.

delta is strictly decreasing in kappa0 and negative at kappa0 = 1, so the
equilibrium is the unique bisection root when delta(0) > 0 and the kappa0 = 0
corner otherwise. The quality measure gamma is the fraction of shared signals
that are fake under the true signal process.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NoSharing, ToleranceNotReached
from .params import ModelParams, Regime, require_valid
from .signals import sender_fake_belief, signal_stats

KAPPA_TOL = 1e-12
RESIDUAL_TOL = 1e-10
MAX_BISECT_ITER = 200


class AbilityStatus(Enum):
    INTERIOR = "Interior"
    CORNER_NO_LOW_SHARING = "CornerNoLowSharing"
    NOT_EXIST = "NotExist"


@dataclass(frozen=True)
class ReceiverBeliefs:
    """Receiver posteriors that the sender has high ability, by observation cell.

    pi_0P: shared surprising signal, checked and found proper
    pi_0F: shared surprising signal, checked and found fake (identically 0)
    pi_0U: shared surprising signal, unchecked
    pi_empty: nothing shared
    """

    pi_0P: float
    pi_0U: float
    pi_empty: float
    pi_0F: float = 0.0


@dataclass(frozen=True)
class SharingUtilities:
    """Sender social-image payoffs, net of the sharing cost where sharing occurs."""

    u_0P: float
    u_0F: float
    u_0U: float
    u_empty: float


@dataclass(frozen=True)
class AbilityEquilibrium:
    kappa0_star: float
    beliefs: ReceiverBeliefs
    gamma: float
    status: AbilityStatus
    residual: float

    def to_json_dict(self) -> dict:
        return {
            "kappa0_star": self.kappa0_star,
            "gamma": self.gamma,
            "status": self.status.value,
            "residual": self.residual,
            "beliefs": {
                "pi_0P": self.beliefs.pi_0P,
                "pi_0U": self.beliefs.pi_0U,
                "pi_empty": self.beliefs.pi_empty,
            },
        }


@dataclass(frozen=True)
class ExistenceBounds:
    """Cost ceiling (at q -> 0) and fake-share frontier for the mixing equilibrium."""

    c_bar_S: float
    q_bar_of_cS: float


def receiver_beliefs(params: ModelParams, kappa0: float) -> ReceiverBeliefs:
    """Receiver posteriors when the low type shares surprising signals w.p. kappa0."""
    lam = params.lambda_S
    stats = signal_stats(params, params.p_R)
    pi_0P = lam / (lam + (1.0 - lam) * kappa0)
    pi_0U = lam * stats.z0P / (lam * stats.z0P + (1.0 - lam) * stats.z0 * kappa0)
    pi_empty = (
        lam * (1.0 - stats.z0P)
        / (lam * (1.0 - stats.z0P) + (1.0 - lam) * (1.0 - stats.z0 * kappa0))
    )
    return ReceiverBeliefs(pi_0P=pi_0P, pi_0U=pi_0U, pi_empty=pi_empty)


def sharing_utilities(params: ModelParams, kappa0: float) -> SharingUtilities:
    """Expected sender payoffs from sharing a proper/fake/unverified surprising signal, or nothing."""
    b = receiver_beliefs(params, kappa0)
    q_tilde = sender_fake_belief(params)
    lam_R = params.lambda_R
    unchecked = (1.0 - lam_R) * b.pi_0U
    return SharingUtilities(
        u_0P=lam_R * b.pi_0P + unchecked - params.c_S,
        u_0F=unchecked - params.c_S,
        u_0U=lam_R * (1.0 - q_tilde) * b.pi_0P + unchecked - params.c_S,
        u_empty=b.pi_empty,
    )


def delta(params: ModelParams, kappa0: float) -> float:
    """Low type's net gain from sharing an unverified surprising signal; strictly decreasing in kappa0."""
    u = sharing_utilities(params, kappa0)
    return u.u_0U - u.u_empty


def gamma_ability(params: ModelParams, kappa0: float) -> float:
    """Fraction of shared signals that are fake, under the true signal process."""
    surprise_proper = params.p_T * (1.0 - params.eta) + (1.0 - params.p_T) * params.eta
    shared_proper = (1.0 - params.q) * surprise_proper * (
        (1.0 - params.lambda_S) * kappa0 + params.lambda_S
    )
    shared_fake = params.q * (1.0 - params.beta) * (1.0 - params.lambda_S) * kappa0
    total = shared_proper + shared_fake
    if total <= 0.0:
        raise NoSharing("no signals are shared; fake fraction undefined")
    return shared_fake / total


def solve_kappa(params: ModelParams, tol: float = KAPPA_TOL) -> AbilityEquilibrium:
    """Solve the low type's mixing probability.

    delta(0) > 0 gives a unique interior root by strict monotonicity; otherwise
    the low type never shares. In the corner case the equilibrium survives only
    if a high type still prefers sharing a checked-proper surprising signal,
    u_0P(0) >= u_empty(0); when even that fails the status is NotExist.
    """
    require_valid(params, Regime.ABILITY)
    if tol <= 0.0:
        raise ValueError("tol must be positive")

    d0 = delta(params, 0.0)
    if d0 <= 0.0:
        u = sharing_utilities(params, 0.0)
        status = (
            AbilityStatus.CORNER_NO_LOW_SHARING
            if u.u_0P >= u.u_empty
            else AbilityStatus.NOT_EXIST
        )
        return AbilityEquilibrium(
            kappa0_star=0.0,
            beliefs=receiver_beliefs(params, 0.0),
            gamma=gamma_ability(params, 0.0),
            status=status,
            residual=abs(d0),
        )

    lo, hi = 0.0, 1.0  # delta(lo) > 0 and delta(1) < 0 always
    root = 0.5
    for _ in range(MAX_BISECT_ITER):
        root = 0.5 * (lo + hi)
        if delta(params, root) > 0.0:
            lo = root
        else:
            hi = root
        if hi - lo <= tol and abs(delta(params, root)) <= RESIDUAL_TOL:
            break
    else:
        raise ToleranceNotReached(
            f"kappa bisection residual {delta(params, root):.3e} after {MAX_BISECT_ITER} iterations"
        )

    return AbilityEquilibrium(
        kappa0_star=root,
        beliefs=receiver_beliefs(params, root),
        gamma=gamma_ability(params, root),
        status=AbilityStatus.INTERIOR,
        residual=abs(delta(params, root)),
    )


def _delta_at_zero_kappa(params: ModelParams, q: float) -> float:
    """delta(kappa0 = 0) as a function of q in [0, 1], continuous at both endpoints.

    At kappa0 = 0 both sharing posteriors equal 1, so
    delta = lambda_R (1 - q_tilde) + (1 - lambda_R) - c_S - pi_empty.
    """
    s_S = params.p_S * (1.0 - params.eta) + (1.0 - params.p_S) * params.eta
    s_R = params.p_R * (1.0 - params.eta) + (1.0 - params.p_R) * params.eta
    z0F = q * (1.0 - params.beta)
    z0P_S = (1.0 - q) * s_S
    z0P_R = (1.0 - q) * s_R
    if z0F + z0P_S > 0.0:
        q_tilde = z0F / (z0F + z0P_S)
    else:
        # q = 1 with beta = 1: fake signals are never surprising along the path
        q_tilde = 0.0
    lam = params.lambda_S
    pi_empty = lam * (1.0 - z0P_R) / (lam * (1.0 - z0P_R) + (1.0 - lam))
    return (
        params.lambda_R * (1.0 - q_tilde) + (1.0 - params.lambda_R) - params.c_S - pi_empty
    )


def cost_frontier(params: ModelParams) -> float:
    """Largest sharing cost at which the low type still mixes, at this q.

    delta(kappa0=0) is linear in c_S with slope -1, so the frontier is its
    value at zero cost. Always positive for admissible parameters.
    """
    require_valid(params, Regime.ABILITY)
    return _delta_at_zero_kappa(params.with_(c_S=0.0), params.q)


def existence_bounds(params: ModelParams) -> ExistenceBounds:
    """Existence region of the mixing equilibrium.

    c_bar_S is the closed-form cost ceiling in the q -> 0 limit,
    (1 - lambda_S) / (1 - lambda_S z0P_R(q=0)). q_bar_of_cS is the largest
    fake share q at which the low type still mixes at the given c_S: the root
    of delta(kappa0=0) in q, which is strictly decreasing in q, clamped to
    [0, 1] when no interior root exists.
    """
    require_valid(params.with_(c_S=0.0), Regime.ABILITY)
    s_R = params.p_R * (1.0 - params.eta) + (1.0 - params.p_R) * params.eta
    c_bar_S = (1.0 - params.lambda_S) / (1.0 - params.lambda_S * s_R)

    f_lo = _delta_at_zero_kappa(params, 0.0)
    f_hi = _delta_at_zero_kappa(params, 1.0)
    if f_lo <= 0.0:
        q_bar = 0.0
    elif f_hi >= 0.0:
        q_bar = 1.0
    else:
        lo, hi = 0.0, 1.0
        for _ in range(MAX_BISECT_ITER):
            mid = 0.5 * (lo + hi)
            if _delta_at_zero_kappa(params, mid) > 0.0:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-14:
                break
        q_bar = 0.5 * (lo + hi)
    return ExistenceBounds(c_bar_S=c_bar_S, q_bar_of_cS=q_bar)


def offeq_check(params: ModelParams, eq: AbilityEquilibrium, pi_tilde_1: float) -> bool:
    """True iff the off-path belief pi_tilde_1 deters sharing of non-surprising signals."""
    u_empty = sharing_utilities(params, eq.kappa0_star).u_empty
    return pi_tilde_1 <= params.c_S + u_empty


def bayes_plausibility_residual(params: ModelParams, kappa0: float) -> float:
    """|P(share) pi_0U + P(no share) pi_empty - lambda_S|; zero when beliefs are consistent."""
    stats = signal_stats(params, params.p_R)
    b = receiver_beliefs(params, kappa0)
    p_share = params.lambda_S * stats.z0P + (1.0 - params.lambda_S) * stats.z0 * kappa0
    return abs(p_share * b.pi_0U + (1.0 - p_share) * b.pi_empty - params.lambda_S)
