"""Experiment configuration: a flat key = value text format.

Lines are `key = value`, blank lines and # comments ignored, no sections,
no nesting. Unknown keys are rejected so typos fail loudly. Every key has
a default; `budget` defaults to 10000 * dimension, `archive_capacity` and
`ranks` default from the population size.
"""

import hashlib
from dataclasses import dataclass

from .errors import ConfigurationError

_BOOL = {"true": True, "false": False}


def _parse_ranks(text):
    try:
        ranks = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ConfigurationError("ranks must be comma-separated integers") from None
    return ranks


@dataclass
class ExperimentConfig:
    """Resolved settings for one campaign (a batch of seeded runs)."""

    function: str = "sphere"
    function_seed: int = 0
    dimension: int = 10
    population: int = 100
    budget: int = None
    runs: int = 15
    seed: int = 1
    pam: str = "pshade"
    strategy: str = "current-to-pbest/1"
    pbest_fraction: float = 0.05
    archive_capacity: int = None
    boundary_repair: str = "midpoint"
    tau_f: float = 0.1
    tau_cr: float = 0.1
    learning_rate: float = 0.1
    memory_size: int = 10
    profile: bool = True
    render: bool = True
    grid_f: int = 50
    grid_c: int = 50
    ranks: tuple = None
    cadence: int = 1000
    first_checkpoint: int = 100
    stop_on_convergence: bool = True
    dump_populations: bool = False

    def __post_init__(self):
        if self.budget is None:
            self.budget = 10000 * self.dimension
        if self.archive_capacity is None:
            self.archive_capacity = self.population
        if self.ranks is None:
            self.ranks = (25, 50, 75, 100)
        self.ranks = tuple(sorted(self.ranks))
        self.validate()

    def validate(self):
        if self.dimension < 2:
            raise ConfigurationError("dimension must be at least 2")
        if self.population < 4:
            raise ConfigurationError("population must be at least 4")
        if self.budget < self.population:
            raise ConfigurationError("budget smaller than one initialization")
        if self.runs < 1:
            raise ConfigurationError("runs must be positive")
        if self.strategy not in ("rand/1", "current-to-pbest/1"):
            raise ConfigurationError("unknown strategy %r" % self.strategy)
        if self.boundary_repair not in ("midpoint", "clamp"):
            raise ConfigurationError("unknown boundary_repair %r" % self.boundary_repair)
        if not 0.0 < self.pbest_fraction <= 1.0:
            raise ConfigurationError("pbest_fraction must be in (0, 1]")
        if self.archive_capacity < 0:
            raise ConfigurationError("archive_capacity must be non-negative")
        if self.grid_f < 2 or self.grid_c < 2:
            raise ConfigurationError("grid resolution must be at least 2 per axis")
        if self.cadence < 1:
            raise ConfigurationError("cadence must be positive")
        if self.first_checkpoint < 1:
            raise ConfigurationError("first_checkpoint must be positive")
        if not self.ranks:
            raise ConfigurationError("ranks must not be empty")
        for r in self.ranks:
            if not 1 <= r <= self.population:
                raise ConfigurationError(
                    "rank %d outside 1..%d" % (r, self.population)
                )
        if self.memory_size < 1:
            raise ConfigurationError("memory_size must be positive")
        for name in ("tau_f", "tau_cr", "learning_rate"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ConfigurationError("%s must be in [0, 1]" % name)
        # pam name errors surface here rather than mid-run
        from .pams import make_pam

        make_pam(self.pam, self.population, h=self.memory_size)


_PARSERS = {
    "function": str,
    "function_seed": int,
    "dimension": int,
    "population": int,
    "budget": int,
    "runs": int,
    "seed": int,
    "pam": str,
    "strategy": str,
    "pbest_fraction": float,
    "archive_capacity": int,
    "boundary_repair": str,
    "tau_f": float,
    "tau_cr": float,
    "learning_rate": float,
    "memory_size": int,
    "profile": lambda v: _parse_bool(v, "profile"),
    "render": lambda v: _parse_bool(v, "render"),
    "grid_f": int,
    "grid_c": int,
    "ranks": _parse_ranks,
    "cadence": int,
    "first_checkpoint": int,
    "stop_on_convergence": lambda v: _parse_bool(v, "stop_on_convergence"),
    "dump_populations": lambda v: _parse_bool(v, "dump_populations"),
}


def _parse_bool(value, key):
    if value.lower() not in _BOOL:
        raise ConfigurationError("%s must be true or false, got %r" % (key, value))
    return _BOOL[value.lower()]


def parse_config_text(text):
    """Raw text to a kwargs dict; values typed per key."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError("line %d: expected key = value" % lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _PARSERS:
            raise ConfigurationError("line %d: unknown key %r" % (lineno, key))
        if key in values:
            raise ConfigurationError("line %d: duplicate key %r" % (lineno, key))
        try:
            values[key] = _PARSERS[key](value)
        except ConfigurationError as exc:
            raise ConfigurationError("line %d: %s" % (lineno, exc)) from None
        except ValueError:
            raise ConfigurationError(
                "line %d: bad value %r for %s" % (lineno, value, key)
            ) from None
    return values


def load_config(path, seed=None):
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigurationError("cannot read config %s: %s" % (path, exc)) from exc
    values = parse_config_text(text)
    if seed is not None:
        values["seed"] = seed
    return ExperimentConfig(**values)


def canonical_text(cfg):
    """Stable key = value rendition of the resolved config."""
    lines = []
    for key in sorted(_PARSERS):
        value = getattr(cfg, key)
        if key == "ranks":
            value = ",".join(str(r) for r in value)
        elif isinstance(value, bool):
            value = "true" if value else "false"
        lines.append("%s = %s\n" % (key, value))
    return "".join(lines)


def config_hash(cfg):
    return hashlib.sha256(canonical_text(cfg).encode()).hexdigest()[:12]
