"""Responsive equilibrium of the worldview-signaling game.

Senders signal their worldview (prior on the state) by what they share:
types below a threshold p_Sl share realization 0, types above p_Sh share
realization 1, moderates stay silent. Receivers update on all three events;
the no-share posterior mixes the two silent pools with weight p_hat_R, the
receiver's probability that the sender drew a 1.

The two marginal types must be indifferent between sharing and silence:

    C_l = -|p_Sl - pS(0)| - c_S + E_R |pS(empty) - p_Sl| = 0
    C_h = -|p_Sh - pS(1)| - c_S + E_R |pS(empty) - p_Sh| = 0

where pS(.) are the receiver posteriors about the sender's worldview. The
solver uses nested bisection: the split point xi (where 2 xi equals the sum
of the two one-sided conditional means) separates the search domains, C_l is
decreasing in p_Sl on [0, xi] and the composed outer condition is increasing
in p_Sh on [xi, 1] under the Jacobian monotonicity assumption, which
check_assumption1 audits by finite differences on a grid.

Absolute values are evaluated literally as written; the equilibrium sign
pattern (posteriors bracketing the thresholds) is asserted by tests after
solving, not presumed inside the conditions. The audit, by contrast, runs on
the sign-resolved conditions, which are the form whose derivative bounds the
monotonicity assumption actually constrains.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .distributions import Distribution
from .errors import (
    BracketFailure,
    EmptyPool,
    NoRoot,
    NoSharing,
    ToleranceNotReached,
)
from .params import ModelParams, Regime, require_valid
from .signals import beta_hat, prob_sigma_one

THRESHOLD_TOL = 1e-12
RESIDUAL_TOL = 1e-9
XI_SCAN_POINTS = 1000
MAX_BISECT_ITER = 200
FD_STEP = 1e-6


class WorldviewStatus(Enum):
    INTERIOR = "Interior"
    CORNER_NO_SHARE_0 = "CornerNoShare0"
    CORNER_NO_SHARE_1 = "CornerNoShare1"
    NO_SHARING = "NoSharing"


@dataclass(frozen=True)
class WorldviewPosteriors:
    """Receiver posterior means of the sender's worldview by observation cell."""

    pS_given_0: float
    pS_given_1: float
    pS_given_empty: float


@dataclass(frozen=True)
class WorldviewEquilibrium:
    p_Sl_star: float
    p_Sh_star: float
    xi: float
    c_bar_S: float
    posteriors: WorldviewPosteriors | None
    gamma: float | None
    status: WorldviewStatus
    residuals: tuple[float, float]

    def to_json_dict(self) -> dict:
        post = None
        if self.posteriors is not None:
            post = {
                "pS_given_0": self.posteriors.pS_given_0,
                "pS_given_1": self.posteriors.pS_given_1,
                "pS_given_empty": self.posteriors.pS_given_empty,
            }
        return {
            "p_Sl_star": self.p_Sl_star,
            "p_Sh_star": self.p_Sh_star,
            "xi": self.xi,
            "c_bar_S": self.c_bar_S,
            "posteriors": post,
            "gamma": self.gamma,
            "status": self.status.value,
            "residuals": list(self.residuals),
        }


@dataclass(frozen=True)
class Assumption1Audit:
    """Finite-difference audit of the threshold-monotonicity assumption.

    Binding statistics over the grid: the largest d C_l / d p_Sl (must stay
    negative), the smallest d C_h / d p_Sh (must stay positive), and the
    largest Jacobian determinant (must stay negative).
    """

    grid_resolution: int
    max_dCl_dpSl: float
    min_dCh_dpSh: float
    max_jacobian_det: float
    violations: tuple[tuple[float, float], ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def p_hat_R(params: ModelParams, p_R):
    """Receiver's probability that the sender drew realization 1; increasing in p_R for eta > 1/2."""
    return (1.0 - params.q) * (
        params.eta * p_R + (1.0 - params.eta) * (1.0 - p_R)
    ) + params.q * params.beta


def posteriors(
    F_S: Distribution, p_Sl: float, p_Sh: float, p_hat_r: float
) -> WorldviewPosteriors:
    """Receiver posteriors about the sender's worldview given thresholds (p_Sl, p_Sh)."""
    if not 0.0 < p_Sl <= p_Sh < 1.0:
        raise ValueError(f"need 0 < p_Sl <= p_Sh < 1, got ({p_Sl}, {p_Sh})")
    mass_low = F_S.cdf(p_Sl)
    mass_high = 1.0 - F_S.cdf(p_Sh)
    if mass_low <= 0.0:
        raise EmptyPool("no sender type shares realization 0")
    if mass_high <= 0.0:
        raise EmptyPool("no sender type shares realization 1")
    given_0 = F_S.partial_moment(0.0, p_Sl) / mass_low
    given_1 = F_S.partial_moment(p_Sh, 1.0) / mass_high
    num = p_hat_r * F_S.partial_moment(0.0, p_Sh) + (1.0 - p_hat_r) * F_S.partial_moment(p_Sl, 1.0)
    den = p_hat_r * F_S.cdf(p_Sh) + (1.0 - p_hat_r) * (1.0 - F_S.cdf(p_Sl))
    if den <= 0.0:
        raise EmptyPool("no sender type stays silent")
    return WorldviewPosteriors(
        pS_given_0=given_0, pS_given_1=given_1, pS_given_empty=num / den
    )


class _Conditions:
    """Evaluator for (C_l, C_h) with per-solve precomputation.

    The receiver integration nodes (their p_hat_R values and weights) and the
    sender-distribution mean do not change across iterates, so they are built
    once. The inner bisection varies only p_Sl, so the p_Sh pool statistics
    are passed in separately and reused.
    """

    def __init__(self, F_S: Distribution, F_R: Distribution, params: ModelParams,
                 iterate_log: list | None = None):
        self.F_S = F_S
        self.c_S = params.c_S
        self.log = iterate_log
        self.mean_S = F_S.mean()
        nodes, weights = F_R.quad_nodes()
        phat = p_hat_R(params, np.asarray(nodes, dtype=float))
        if len(nodes) == 1:
            self.single = True
            self.phat = float(phat[0])
            self.w = None
        else:
            self.single = False
            self.phat = phat
            self.w = np.asarray(weights, dtype=float)

    def low_pool(self, p_sl: float) -> tuple[float, float]:
        return self.F_S.cdf(p_sl), self.F_S.partial_moment(0.0, p_sl)

    def high_pool(self, p_sh: float) -> tuple[float, float]:
        return self.F_S.cdf(p_sh), self.F_S.partial_moment(0.0, p_sh)

    def _silent_gain(self, t: float, f_l, m_0l, f_h, m_0h, resolved: bool):
        """E_R of |pS(empty) - t|, or of (pS(empty) - t) in sign-resolved form."""
        m_l1 = self.mean_S - m_0l
        if self.single:
            phat = self.phat
            silent = (phat * m_0h + (1.0 - phat) * m_l1) / (
                phat * f_h + (1.0 - phat) * (1.0 - f_l)
            )
            diff = silent - t
            return diff if resolved else abs(diff)
        silent = (self.phat * m_0h + (1.0 - self.phat) * m_l1) / (
            self.phat * f_h + (1.0 - self.phat) * (1.0 - f_l)
        )
        diff = silent - t
        if not resolved:
            diff = np.abs(diff)
        return float(np.sum(self.w * diff))

    def c_l(self, p_sl: float, p_sh: float, high, *, extend: bool, resolved: bool = False) -> float:
        if self.log is not None:
            self.log.append((p_sl, p_sh))
        f_l, m_0l = self.low_pool(p_sl)
        if f_l > 0.0:
            p_s0 = m_0l / f_l
        elif extend:
            p_s0 = p_sl  # continuous limit at the support floor
        else:
            raise EmptyPool("no sender type shares realization 0")
        f_h, m_0h = high
        own = (p_sl - p_s0) if resolved else abs(p_sl - p_s0)
        return -own - self.c_S + self._silent_gain(p_sl, f_l, m_0l, f_h, m_0h, resolved)

    def c_h(self, p_sl: float, p_sh: float, high, *, extend: bool, resolved: bool = False) -> float:
        if self.log is not None:
            self.log.append((p_sl, p_sh))
        f_l, m_0l = self.low_pool(p_sl)
        f_h, m_0h = high
        mass_high = 1.0 - f_h
        if mass_high > 0.0:
            p_s1 = (self.mean_S - m_0h) / mass_high
        elif extend:
            p_s1 = p_sh  # continuous limit at the support ceiling
        else:
            raise EmptyPool("no sender type shares realization 1")
        own = (p_s1 - p_sh) if resolved else abs(p_sh - p_s1)
        gain = self._silent_gain(p_sh, f_l, m_0l, f_h, m_0h, resolved)
        if resolved:
            gain = -gain  # sign pattern puts the silent posterior below p_Sh
        return -own - self.c_S + gain


def indifference(
    F_S: Distribution, F_R: Distribution, params: ModelParams, p_Sl: float, p_Sh: float
) -> tuple[float, float]:
    """The two marginal-type indifference conditions (C_l, C_h), absolute values literal."""
    ev = _Conditions(F_S, F_R, params)
    high = ev.high_pool(p_Sh)
    return (
        ev.c_l(p_Sl, p_Sh, high, extend=False),
        ev.c_h(p_Sl, p_Sh, high, extend=False),
    )


@lru_cache(maxsize=64)
def xi_roots(F_S: Distribution) -> tuple[float, ...]:
    """All roots of 2 xi = E[p | p <= xi] + E[p | p >= xi] found by a 1000-point scan."""
    if F_S.is_degenerate:
        raise ValueError("xi is undefined for a degenerate worldview distribution")
    lo, hi = F_S.support

    def g(x: float) -> float:
        return 2.0 * x - F_S.truncated_mean(x, hi) - F_S.truncated_mean(lo, x)

    xs = lo + (hi - lo) * (np.arange(XI_SCAN_POINTS) + 0.5) / XI_SCAN_POINTS
    vals = [g(float(x)) for x in xs]
    roots = []
    for i in range(len(xs) - 1):
        if vals[i] == 0.0:
            roots.append(float(xs[i]))
        elif vals[i] * vals[i + 1] < 0.0:
            a, b = float(xs[i]), float(xs[i + 1])
            sign_a = 1.0 if vals[i] > 0 else -1.0
            for _ in range(MAX_BISECT_ITER):
                mid = 0.5 * (a + b)
                if g(mid) * sign_a > 0.0:
                    a = mid
                else:
                    b = mid
                if b - a <= 1e-14:
                    break
            root = 0.5 * (a + b)
            if abs(g(root)) > 1e-10:
                raise ToleranceNotReached(f"xi residual {g(root):.3e} at {root}")
            roots.append(root)
    if vals[-1] == 0.0:
        roots.append(float(xs[-1]))
    if not roots:
        raise NoRoot("no sign change in the xi split-point equation")
    return tuple(roots)


def solve_xi(F_S: Distribution) -> float:
    """Smallest root of the split-point equation; warns when the scan finds several."""
    roots = xi_roots(F_S)
    if len(roots) > 1:
        warnings.warn(
            f"xi equation has {len(roots)} roots; using the smallest", stacklevel=2
        )
    return roots[0]


def c_bar_worldview(F_S: Distribution) -> float:
    """Sharing-cost ceiling below which an interior responsive equilibrium exists."""
    xi = solve_xi(F_S)
    lo, _ = F_S.support
    return min(1.0 - xi, F_S.truncated_mean(lo, xi))


def _bisect_decreasing(f, lo: float, hi: float, tol: float) -> float:
    """Root of a decreasing f with f(lo) > 0 > f(hi)."""
    for _ in range(MAX_BISECT_ITER):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


def solve_thresholds(
    F_S: Distribution,
    F_R: Distribution,
    params: ModelParams,
    tol: float = THRESHOLD_TOL,
    iterate_log: list | None = None,
) -> WorldviewEquilibrium:
    """Solve the responsive-equilibrium thresholds by nested bisection.

    Inner loop: C_l(., p_Sh) = 0 for p_Sl in [support floor, xi]. Outer loop:
    C_h at the inner solution, increasing in p_Sh on [xi, support ceiling].
    A bracket endpoint with the wrong sign pins the corresponding threshold
    to the boundary (nobody shares that realization); both pinned means no
    sharing at all. Contradictory interior signs raise BracketFailure.
    """
    if F_S.is_degenerate:
        raise ValueError("worldview game needs a nondegenerate sender distribution")
    require_valid(params, Regime.WORLDVIEW, worldview_override=True)

    xi = solve_xi(F_S)
    floor, ceil = F_S.support
    c_bar = min(1.0 - xi, F_S.truncated_mean(floor, xi))
    ev = _Conditions(F_S, F_R, params, iterate_log)

    def solve_inner(p_sh: float, high) -> tuple[float, bool]:
        if ev.c_l(floor, p_sh, high, extend=True) <= 0.0:
            return floor, True  # even the most extreme type keeps realization 0
        if ev.c_l(xi, p_sh, high, extend=True) > 0.0:
            raise BracketFailure(
                f"C_l positive on all of [{floor}, {xi}] at p_Sh={p_sh}; "
                "monotonicity assumption or cost bound violated"
            )
        root = _bisect_decreasing(
            lambda t: ev.c_l(t, p_sh, high, extend=True), floor, xi, tol
        )
        return root, False

    def outer(p_sh: float) -> float:
        high = ev.high_pool(p_sh)
        p_sl, _ = solve_inner(p_sh, high)
        return ev.c_h(p_sl, p_sh, high, extend=True)

    pinned_h = False
    if outer(ceil) < 0.0:
        p_sh_star = ceil  # even the most extreme type keeps realization 1
        pinned_h = True
    elif outer(xi) > 0.0:
        raise BracketFailure(
            f"C_h positive on all of [{xi}, {ceil}]; "
            "monotonicity assumption or split point violated"
        )
    else:
        p_sh_star = _bisect_decreasing(lambda t: -outer(t), xi, ceil, tol)

    high_star = ev.high_pool(p_sh_star)
    p_sl_star, pinned_l = solve_inner(p_sh_star, high_star)

    if pinned_l and pinned_h:
        status = WorldviewStatus.NO_SHARING
    elif pinned_l:
        status = WorldviewStatus.CORNER_NO_SHARE_0
    elif pinned_h:
        status = WorldviewStatus.CORNER_NO_SHARE_1
    else:
        status = WorldviewStatus.INTERIOR

    residuals = (
        abs(ev.c_l(p_sl_star, p_sh_star, high_star, extend=True)),
        abs(ev.c_h(p_sl_star, p_sh_star, high_star, extend=True)),
    )
    if status is WorldviewStatus.INTERIOR and max(residuals) > RESIDUAL_TOL:
        raise ToleranceNotReached(f"interior residuals {residuals} exceed {RESIDUAL_TOL}")

    post = None
    share_low = F_S.cdf(p_sl_star)
    share_high = 1.0 - F_S.cdf(p_sh_star)
    if share_low > 0.0 and share_high > 0.0:
        post = posteriors(F_S, p_sl_star, p_sh_star, p_hat_R(params, F_R.mean()))

    gamma = None
    if share_low > 0.0 or share_high > 0.0:
        gamma = gamma_worldview(F_S, params, p_sl_star, p_sh_star)

    return WorldviewEquilibrium(
        p_Sl_star=p_sl_star,
        p_Sh_star=p_sh_star,
        xi=xi,
        c_bar_S=c_bar,
        posteriors=post,
        gamma=gamma,
        status=status,
        residuals=residuals,
    )


def check_assumption1(
    F_S: Distribution, F_R: Distribution, params: ModelParams, grid_n: int = 41
) -> Assumption1Audit:
    """Audit the Jacobian sign conditions on a grid over [floor, xi] x [xi, ceiling].

    Derivatives are central finite differences of the sign-resolved conditions
    with the stencil clamped inside the rectangle; the literal absolute values
    would flip the recorded signs at kink crossings far from the equilibrium
    pattern and spuriously fail the audit.
    """
    if grid_n < 11:
        raise ValueError("grid_n must be at least 11")
    xi = solve_xi(F_S)
    floor, ceil = F_S.support
    h = FD_STEP
    ev = _Conditions(F_S, F_R, params)

    def pair(p_sl: float, p_sh: float) -> tuple[float, float]:
        high = ev.high_pool(p_sh)
        return (
            ev.c_l(p_sl, p_sh, high, extend=True, resolved=True),
            ev.c_h(p_sl, p_sh, high, extend=True, resolved=True),
        )

    lows = np.clip(np.linspace(floor, xi, grid_n), floor + h, xi - h)
    highs = np.clip(np.linspace(xi, ceil, grid_n), xi + h, ceil - h)
    max_dcl = -np.inf
    min_dch = np.inf
    max_det = -np.inf
    violations = []
    for p_sl in lows:
        for p_sh in highs:
            cl_e, ch_e = pair(p_sl + h, p_sh)
            cl_w, ch_w = pair(p_sl - h, p_sh)
            cl_n, ch_n = pair(p_sl, p_sh + h)
            cl_s, ch_s = pair(p_sl, p_sh - h)
            dcl_dl = (cl_e - cl_w) / (2 * h)
            dcl_dh = (cl_n - cl_s) / (2 * h)
            dch_dl = (ch_e - ch_w) / (2 * h)
            dch_dh = (ch_n - ch_s) / (2 * h)
            det = dcl_dl * dch_dh - dcl_dh * dch_dl
            max_dcl = max(max_dcl, dcl_dl)
            min_dch = min(min_dch, dch_dh)
            max_det = max(max_det, det)
            if not (dcl_dl < 0.0 and dch_dh > 0.0 and det < 0.0):
                violations.append((float(p_sl), float(p_sh)))
    return Assumption1Audit(
        grid_resolution=grid_n,
        max_dCl_dpSl=float(max_dcl),
        min_dCh_dpSh=float(min_dch),
        max_jacobian_det=float(max_det),
        violations=tuple(violations),
    )


def gamma_worldview(
    F_S: Distribution, params: ModelParams, p_Sl: float, p_Sh: float
) -> float:
    """Fraction of shared signals that are fake under threshold sharing."""
    share_low = F_S.cdf(p_Sl)
    share_high = 1.0 - F_S.cdf(p_Sh)
    p1 = prob_sigma_one(params)
    den = (1.0 - p1) * share_low + p1 * share_high
    if den <= 0.0:
        raise NoSharing("no signals are shared; fake fraction undefined")
    num = params.q * (1.0 - params.beta) * share_low + params.q * params.beta * share_high
    return num / den


def martingale_residual(
    F_S: Distribution, p_Sl: float, p_Sh: float, p_hat_r: float
) -> float:
    """Deviation of the cell-weighted posterior mean from the unconditional mean.

    Under the receiver's measure the three observation cells must average back
    to E[p_S]; a nonzero residual indicates an inconsistent posterior formula.
    """
    post = posteriors(F_S, p_Sl, p_Sh, p_hat_r)
    w_share0 = (1.0 - p_hat_r) * F_S.cdf(p_Sl)
    w_share1 = p_hat_r * (1.0 - F_S.cdf(p_Sh))
    w_silent = p_hat_r * F_S.cdf(p_Sh) + (1.0 - p_hat_r) * (1.0 - F_S.cdf(p_Sl))
    total = (
        w_share0 * post.pS_given_0
        + w_share1 * post.pS_given_1
        + w_silent * post.pS_given_empty
    )
    return abs(total - F_S.mean())


def predict_quality_sign(
    F_S: Distribution, params: ModelParams, p_Sl: float, p_Sh: float
) -> int:
    """Sign of gamma - q from the bias/asymmetry product, without computing gamma."""
    factor = (beta_hat(params) - params.beta) * (
        F_S.cdf(p_Sl) - (1.0 - F_S.cdf(p_Sh))
    )
    if factor > 0.0:
        return 1
    if factor < 0.0:
        return -1
    return 0
