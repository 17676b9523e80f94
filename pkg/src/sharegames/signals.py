"""Signal-process statistics shared by both games.

A signal is fake with probability q (then equal to 1 with bias beta,
independent of the state) and proper otherwise (then it matches the state
with precision eta). With the receiver optimistic about state 1, the
surprising realization is 0, and a player with prior p_i assigns

    z0  = q (1 - beta) + (1 - q) (p_i (1 - eta) + (1 - p_i) eta)

to receiving a surprising signal, of which the proper part is the second
term. These probabilities drive every belief in the ability game.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateSignal
from .params import ModelParams


@dataclass(frozen=True)
class SignalStats:
    """Surprising-signal probabilities under one prior: total, proper part, fake part."""

    z0: float
    z0P: float
    z0F: float


def signal_stats(params: ModelParams, p_i: float) -> SignalStats:
    """Surprising-signal statistics for a player with prior p_i."""
    z0P = (1.0 - params.q) * (p_i * (1.0 - params.eta) + (1.0 - p_i) * params.eta)
    z0F = params.q * (1.0 - params.beta)
    return SignalStats(z0=z0P + z0F, z0P=z0P, z0F=z0F)


def sender_fake_belief(params: ModelParams) -> float:
    """Probability the sender assigns to a surprising signal being fake.

    Strictly increasing in q whenever beta < 1.
    """
    stats = signal_stats(params, params.p_S)
    if stats.z0 <= 0.0:
        raise DegenerateSignal("no surprising signal can occur under the sender's prior")
    return stats.z0F / stats.z0


def prob_sigma_one(params: ModelParams) -> float:
    """True (data-generating) probability that the signal realization is 1."""
    return params.q * params.beta + (1.0 - params.q) * (
        params.p_T * params.eta + (1.0 - params.p_T) * (1.0 - params.eta)
    )


def beta_hat(params: ModelParams) -> float:
    """Fake-signal bias at which realization 1 is equally likely among proper and fake signals."""
    return params.p_T * params.eta + (1.0 - params.p_T) * (1.0 - params.eta)


def beta_tilde(params: ModelParams) -> float:
    """Bias threshold above which shared information is strictly cleaner than received (gamma < q).

    May be negative, in which case the condition holds for every beta.
    """
    return 1.0 - (params.p_T * (1.0 - params.eta) + (1.0 - params.p_T) * params.eta) / (
        1.0 - params.lambda_S
    )
