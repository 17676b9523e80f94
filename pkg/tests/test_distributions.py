import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sharegames import (
    BetaShaped,
    ConfigError,
    EmptyTruncation,
    PiecewiseLinearDensity,
    PointMass,
    Uniform,
    from_spec,
    truncated_mean,
)

TRIANGLE = PiecewiseLinearDensity([(0.0, 0.0), (0.5, 2.0), (1.0, 0.0)])

ALL_KINDS = [
    Uniform(0.0, 1.0),
    Uniform(0.2, 0.7),
    BetaShaped(2.0, 3.0),
    BetaShaped(1.5, 1.2),
    TRIANGLE,
    PointMass(0.4),
]


def test_uniform_truncated_means():
    u = Uniform(0.0, 1.0)
    assert u.truncated_mean(0.0, 0.3) == pytest.approx(0.15, abs=1e-12)
    assert u.truncated_mean(0.8, 1.0) == pytest.approx(0.9, abs=1e-12)


def test_point_mass_truncated_mean():
    assert truncated_mean(PointMass(0.4), 0.0, 1.0) == 0.4
    # closed-interval convention keeps the atom when it sits on a bound
    assert truncated_mean(PointMass(0.4), 0.4, 1.0) == 0.4


def test_empty_truncation_raises():
    with pytest.raises(EmptyTruncation):
        Uniform(0.0, 0.5).truncated_mean(0.7, 0.9)
    with pytest.raises(EmptyTruncation):
        PointMass(0.3).truncated_mean(0.5, 0.9)


def test_triangle_closed_form_moments():
    # density 4x on [0, 1/2]: partial moment over it is 4x^3/3 -> 1/6
    assert TRIANGLE.mean() == pytest.approx(0.5, abs=1e-12)
    assert TRIANGLE.partial_moment(0.0, 0.5) == pytest.approx(1 / 6, abs=1e-12)
    assert TRIANGLE.truncated_mean(0.0, 0.5) == pytest.approx(1 / 3, abs=1e-12)


def test_unnormalized_density_rejected():
    with pytest.raises(ValueError, match="integrates"):
        PiecewiseLinearDensity([(0.0, 1.0), (1.0, 2.0)])
    with pytest.raises(ValueError, match="span"):
        PiecewiseLinearDensity([(0.1, 1.0), (1.0, 1.0)])
    with pytest.raises(ValueError, match="nonnegative"):
        PiecewiseLinearDensity([(0.0, 2.2), (0.5, -0.1), (1.0, 2.2)])


@pytest.mark.parametrize("dist", ALL_KINDS, ids=repr)
def test_cdf_monotone_on_quad_nodes(dist):
    xs = np.linspace(0.0, 1.0, 257)
    cdf = [dist.cdf(float(x)) for x in xs]
    assert cdf[0] >= 0.0 and cdf[-1] == pytest.approx(1.0, abs=1e-12)
    assert np.all(np.diff(cdf) >= -1e-15)


@pytest.mark.parametrize("dist", ALL_KINDS, ids=repr)
def test_truncated_mean_matches_unconditional(dist):
    assert dist.truncated_mean(0.0, 1.0) == pytest.approx(dist.mean(), abs=1e-9)


@pytest.mark.parametrize("dist", ALL_KINDS, ids=repr)
def test_expect_identity_equals_mean(dist):
    # fixed-node quadrature is exact for polynomial densities but only
    # approximate when the density has endpoint derivative singularities
    tol = 1e-4 if isinstance(dist, BetaShaped) and dist.alpha != 2.0 else 1e-9
    assert dist.expect(lambda x: x) == pytest.approx(dist.mean(), abs=tol)


def test_beta_moments_are_exact():
    b = BetaShaped(2.0, 3.0)
    assert b.mean() == pytest.approx(0.4, abs=1e-14)
    # non-integer shapes: the endpoint singularities in the derivatives would
    # defeat fixed-node quadrature, the incomplete-beta forms stay exact
    b2 = BetaShaped(1.5, 1.2)
    assert b2.mean() == pytest.approx(1.5 / 2.7, abs=1e-14)
    grid = np.linspace(0.0, 1.0, 200_001)
    trapz = np.trapezoid(grid * b2.pdf(grid), grid)
    assert b2.partial_moment(0.0, 1.0) == pytest.approx(float(trapz), abs=1e-6)


@pytest.mark.parametrize(
    "dist", [Uniform(0.1, 0.8), BetaShaped(2.0, 3.0), TRIANGLE], ids=repr
)
def test_ppf_roundtrip(dist):
    u = np.linspace(0.001, 0.999, 97)
    x = dist.ppf(u)
    back = np.array([dist.cdf(float(v)) for v in x])
    assert np.allclose(back, u, atol=1e-9)


def test_point_mass_ppf():
    assert np.all(PointMass(0.25).ppf(np.linspace(0, 1, 11)) == 0.25)


@given(
    a=st.floats(0.0, 0.5), width=st.floats(0.1, 0.5),
    lo=st.floats(0.0, 1.0), hi=st.floats(0.0, 1.0),
)
@settings(max_examples=200, deadline=None)
def test_truncated_mean_stays_inside_interval(a, width, lo, hi):
    lo, hi = min(lo, hi), max(lo, hi)
    dist = Uniform(a, min(a + width, 1.0))
    if dist.mass(lo, hi) <= 0.0:
        return
    m = dist.truncated_mean(lo, hi)
    assert lo - 1e-12 <= m <= hi + 1e-12


def test_from_spec_round_trip():
    for dist in ALL_KINDS:
        again = from_spec(dist.to_spec())
        assert type(again) is type(dist)
        assert again.to_spec() == dist.to_spec()


def test_from_spec_rejects_unknown():
    with pytest.raises(ConfigError, match="unknown distribution kind"):
        from_spec({"kind": "gaussian", "mu": 0.5})
    with pytest.raises(ConfigError, match="bad 'uniform'"):
        from_spec({"kind": "uniform", "a": 0.9, "b": 0.1})
