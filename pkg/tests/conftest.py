import pytest

from sharegames import ModelParams


@pytest.fixture
def ability_base() -> ModelParams:
    """Base point of the two-panel ability quality grids."""
    return ModelParams(
        q=0.5, beta=0.5, eta=2 / 3, p_T=2 / 3,
        lambda_S=0.2, lambda_R=0.2, c_S=0.0, p_S=2 / 3, p_R=2 / 3,
    )


@pytest.fixture
def worldview_base() -> ModelParams:
    """Worldview desk base: strong receiver prior, interior costs."""
    return ModelParams(
        q=0.3, beta=0.4, eta=0.6, p_T=0.8,
        lambda_S=0.2, lambda_R=0.2, c_S=0.05, p_S=0.5, p_R=0.8,
    )
