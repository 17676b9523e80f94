"""Exception types shared across the solvers and the simulator."""


class ShareGamesError(Exception):
    """Base class for all package-specific errors."""


class InvalidParams(ShareGamesError):
    """Parameters violate the admissibility constraints for the requested game."""


class ConfigError(ShareGamesError):
    """A config file could not be parsed or references unknown keys."""


class DegenerateSignal(ShareGamesError):
    """No surprising signal can occur, so beliefs conditional on one are undefined."""


class EmptyTruncation(ShareGamesError):
    """Conditional expectation requested on an interval of zero probability mass."""


class EmptyPool(ShareGamesError):
    """A posterior conditions on a sharing event that has zero probability."""


class NoSharing(ShareGamesError):
    """No signals are shared, so the fake fraction of shared signals is undefined."""


class NoRoot(ShareGamesError):
    """A scan found no sign change where a root was expected."""


class BracketFailure(ShareGamesError):
    """Bisection endpoints have unexpected signs; monotonicity premises likely violated."""


class ToleranceNotReached(ShareGamesError):
    """Root refinement hit the iteration cap before meeting its residual target."""
