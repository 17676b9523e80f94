"""Equilibrium solvers and Monte Carlo validation for news-sharing signaling games.

Two games are covered: sharing to signal the ability to tell proper from fake
news (mixing equilibrium in the low type's sharing probability), and sharing
to signal one's worldview (threshold equilibrium in the sender's prior). Both
expose the fake fraction of shared signals, gamma, whose comparison against
the fake fraction of received signals, q, measures whether sharing degrades
information quality.
"""

from .ability import (
    AbilityEquilibrium,
    AbilityStatus,
    ExistenceBounds,
    ReceiverBeliefs,
    SharingUtilities,
    bayes_plausibility_residual,
    cost_frontier,
    delta,
    existence_bounds,
    gamma_ability,
    offeq_check,
    receiver_beliefs,
    sharing_utilities,
    solve_kappa,
)
from .distributions import (
    BetaShaped,
    Distribution,
    PiecewiseLinearDensity,
    PointMass,
    Uniform,
    from_spec,
    truncated_mean,
)
from .errors import (
    BracketFailure,
    ConfigError,
    DegenerateSignal,
    EmptyPool,
    EmptyTruncation,
    InvalidParams,
    NoRoot,
    NoSharing,
    ShareGamesError,
    ToleranceNotReached,
)
from .params import (
    ExperimentConfig,
    ModelParams,
    Regime,
    load_config,
    parse_config,
    validate,
)
from .signals import (
    SignalStats,
    beta_hat,
    beta_tilde,
    prob_sigma_one,
    sender_fake_belief,
    signal_stats,
)
from .simulate import Estimate, SimConfig, SimReport, simulate_ability, simulate_worldview
from .worldview import (
    Assumption1Audit,
    WorldviewEquilibrium,
    WorldviewPosteriors,
    WorldviewStatus,
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

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
