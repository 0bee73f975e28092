"""apland: adaptive parameter landscape profiling for differential evolution.

Runs a DE engine (rand/1 or current-to-pbest/1 with archive) under one of
several parameter-adaptation methods, and profiles per-individual
landscapes over the (F, C) control plane by replaying frozen trials across
a parameter grid. Ships landscape measures (NZR, FDC, DISP), a campaign
harness with deterministic artifacts, and SVG rendering.
"""

from .config import ExperimentConfig, load_config
from .de import ParameterPair
from .errors import (
    BudgetError,
    ConfigurationError,
    DomainError,
    PamStateError,
)
from .functions import EvaluationCounter, error_value, make_function
from .harness import execute_run, run_experiment, select_median_run
from .kernels import BACKEND
from .measures import measure_snapshot
from .pams import make_pam
from .profiler import build_grid, snapshot_individual

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetError",
    "ConfigurationError",
    "DomainError",
    "EvaluationCounter",
    "ExperimentConfig",
    "PamStateError",
    "ParameterPair",
    "__version__",
    "build_grid",
    "error_value",
    "execute_run",
    "load_config",
    "make_function",
    "make_pam",
    "measure_snapshot",
    "run_experiment",
    "select_median_run",
    "snapshot_individual",
]
