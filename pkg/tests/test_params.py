import pytest

from sharegames import (
    ConfigError,
    ModelParams,
    PointMass,
    Regime,
    Uniform,
    load_config,
    parse_config,
    validate,
)

VALID = dict(q=0.5, beta=0.5, eta=0.67, p_T=0.67,
             lambda_S=0.2, lambda_R=0.2, c_S=0.0, p_S=0.67, p_R=0.67)


def test_validate_clean():
    assert validate(ModelParams(**VALID), Regime.ABILITY) == []


def test_validate_lambda_bound():
    report = validate(ModelParams(**{**VALID, "lambda_S": 0.6}), Regime.ABILITY)
    assert report == ["lambda_S ∉ (0, 1/2)"]


def test_validate_ability_regime_rule():
    report = validate(ModelParams(**{**VALID, "eta": 0.6}), Regime.ABILITY)
    assert report == ["eta < p_R in ability regime"]
    assert validate(ModelParams(**{**VALID, "p_R": 0.4, "eta": 0.6}), Regime.ABILITY) == [
        "p_R ≤ 1/2 in ability regime"
    ]


def test_validate_worldview_override():
    p = ModelParams(**{**VALID, "eta": 0.9, "p_R": 0.1})
    assert validate(p, Regime.WORLDVIEW) != []
    assert validate(p, Regime.WORLDVIEW, worldview_override=True) == []
    assert validate(ModelParams(**{**VALID, "eta": 0.6, "p_R": 0.8}), Regime.WORLDVIEW) == []


def test_validate_collects_all_violations():
    p = ModelParams(q=1.5, beta=-0.1, eta=0.3, p_T=0.0,
                    lambda_S=0.5, lambda_R=0.0, c_S=-1.0, p_S=2.0, p_R=0.8)
    report = validate(p, Regime.ABILITY)
    assert len(report) >= 8


def test_parse_config_round_trip(tmp_path):
    cfg_text = """
regime = "worldview"
q = 0.3
beta = 0.4
eta = 0.6
p_T = 0.8
lambda_S = 0.2
lambda_R = 0.2
c_S = 0.05
p_S = 0.5
p_R = 0.8
F_S = { kind = "uniform", a = 0.0, b = 1.0 }
F_R = { kind = "point", x = 0.8 }
tol = 1e-11

[[sweep]]
parameter = "c_S"
min = 0.0
max = 0.2
steps = 5

[simulation]
n_draws = 1000
seed = 9
"""
    path = tmp_path / "exp.toml"
    path.write_text(cfg_text)
    cfg = load_config(path)
    assert cfg.regime is Regime.WORLDVIEW
    assert cfg.params.c_S == 0.05
    assert cfg.F_S == Uniform(0.0, 1.0)
    assert cfg.F_R == PointMass(0.8)
    assert cfg.tol == 1e-11
    assert cfg.sweep[0].parameter == "c_S" and cfg.sweep[0].steps == 5
    assert cfg.simulation.n_draws == 1000 and cfg.simulation.seed == 9


def test_parse_config_unknown_key_is_named():
    raw = {**VALID, "regime": "ability", "lamda_S": 0.2}
    with pytest.raises(ConfigError, match="lamda_S"):
        parse_config(raw)


def test_parse_config_missing_key_is_named():
    raw = {k: v for k, v in VALID.items() if k != "eta"}
    raw["regime"] = "ability"
    with pytest.raises(ConfigError, match="eta"):
        parse_config(raw)


def test_parse_config_default_receiver_is_point_mass():
    cfg = parse_config({**VALID, "regime": "worldview"})
    assert cfg.F_R == PointMass(VALID["p_R"])
    assert cfg.F_S == Uniform(0.0, 1.0)


def test_parse_config_receiver_mismatch():
    raw = {**VALID, "regime": "worldview", "F_R": {"kind": "point", "x": 0.3}}
    with pytest.raises(ConfigError, match="disagrees with p_R"):
        parse_config(raw)


def test_parse_config_sweep_validation():
    raw = {**VALID, "regime": "ability",
           "sweep": [{"parameter": "bogus", "min": 0, "max": 1, "steps": 3}]}
    with pytest.raises(ConfigError, match="bogus"):
        parse_config(raw)
    raw["sweep"] = [{"parameter": "q", "min": 0, "max": 1, "steps": 1}]
    with pytest.raises(ConfigError, match="steps"):
        parse_config(raw)


def test_load_config_parse_error_has_location(tmp_path):
    path = tmp_path / "broken.toml"
    path.write_text("q = = 0.5\n")
    with pytest.raises(ConfigError, match="line 1"):
        load_config(path)


def test_with_replaces_immutably():
    p = ModelParams(**VALID)
    p2 = p.with_(q=0.9)
    assert p.q == 0.5 and p2.q == 0.9
