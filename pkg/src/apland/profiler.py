"""Per-individual parameter-landscape profiling.

For one individual at one iteration, the profiler regenerates its trial
under every (f, cr) pair of a fixed grid, reusing the trial's frozen
factors, and scores each pair with the one-step greedy gain: the objective
improvement if the regenerated trial strictly beats the parent, else 0
(selection itself accepts ties; the gain does not). Grid evaluations are
uncounted, and the profiler draws no randomness, so profiling cannot
disturb the run being observed.

Snapshots serialize as a CSV (columns F, C, g1, g1_norm; g1 is the raw
gain) plus a JSON metadata sidecar.
"""

import json
from dataclasses import dataclass

import numpy as np

from . import kernels
from .de import ParameterPair, generate_trial, REPAIR_MODES
from .errors import ConfigurationError

DEFAULT_RESOLUTION = 50


@dataclass
class ParameterGrid:
    """Row-major grid over [0, 1]^2: index p = a * k_c + b for (f_a, cr_b)."""

    f_values: np.ndarray
    c_values: np.ndarray
    fs: np.ndarray
    cs: np.ndarray

    @property
    def k_f(self):
        return len(self.f_values)

    @property
    def k_c(self):
        return len(self.c_values)

    @property
    def m(self):
        return len(self.fs)

    def pair(self, p):
        return ParameterPair(float(self.fs[p]), float(self.cs[p]))


def build_grid(k_f=DEFAULT_RESOLUTION, k_c=DEFAULT_RESOLUTION):
    """Endpoint-inclusive lattice; f = 0 is a valid (dead) column."""
    if k_f < 2 or k_c < 2:
        raise ConfigurationError("grid needs at least 2 points per axis")
    f_values = np.linspace(0.0, 1.0, k_f)
    c_values = np.linspace(0.0, 1.0, k_c)
    fs = np.repeat(f_values, k_c)
    cs = np.tile(c_values, k_f)
    return ParameterGrid(f_values, c_values, fs, cs)


def greedy_gain(pair, pop, i, ff, func, counter=None, repair="midpoint"):
    """Gain of one regenerated trial; strict improvement or 0."""
    fx = float(pop.fxs[i])
    _, fu = generate_trial(pop, i, pair, ff, func, counter, counted=False, repair=repair)
    return fx - fu if fu < fx else 0.0


def score_grid(grid, pop, i, ff, func, counter=None, repair="midpoint"):
    """Gains for every grid pair via the kernel loop (m uncounted evals)."""
    b1, b2, b3 = ff.bases(pop)
    out = np.empty(grid.m)
    kernels.grid_g1(
        ff.strategy,
        pop.xs[i],
        np.ascontiguousarray(b1),
        np.ascontiguousarray(b2),
        np.ascontiguousarray(b3),
        ff.s,
        ff.j_rand,
        grid.fs,
        grid.cs,
        func.lower,
        func.upper,
        REPAIR_MODES[repair],
        func.kind,
        func.optimum_location,
        func.rotation,
        func.coeffs,
        float(pop.fxs[i]),
        out,
    )
    if counter is not None:
        counter.add_uncounted(grid.m)
    return out


def normalize_gains(g1):
    """Scale to [0, 1]; a snapshot is flat when every gain is 0.

    A degenerate all-equal-positive snapshot normalizes to zeros but is not
    flat (something improved, there is just no contrast).
    """
    lo = float(np.min(g1))
    hi = float(np.max(g1))
    if hi == lo:
        return np.zeros_like(g1), hi == 0.0
    return (g1 - lo) / (hi - lo), False


@dataclass
class LandscapeSnapshot:
    """One profiled individual: the gain grid plus provenance metadata."""

    run: int
    function: str
    function_seed: int
    d: int
    t: int
    fe: int
    individual: int
    rank: int
    pam: str
    strategy: str
    grid: ParameterGrid
    g1: np.ndarray
    g1_norm: np.ndarray
    best_pair: ParameterPair
    actual_pair: ParameterPair
    flat: bool


def snapshot_individual(
    pop, i, rank, grid, ff, actual_pair, func, counter,
    run=0, fe=0, pam="unknown", strategy="unknown", repair="midpoint",
):
    """Profile one individual with its frozen factors and actual pair."""
    g1 = score_grid(grid, pop, i, ff, func, counter, repair=repair)
    g1_norm, flat = normalize_gains(g1)
    best = int(np.argmax(g1))  # first maximum, i.e. lowest row-major index
    return LandscapeSnapshot(
        run=run,
        function=func.name,
        function_seed=func.seed,
        d=func.d,
        t=pop.t + 1,
        fe=fe,
        individual=i,
        rank=rank,
        pam=pam,
        strategy=strategy,
        grid=grid,
        g1=g1,
        g1_norm=g1_norm,
        best_pair=grid.pair(best),
        actual_pair=actual_pair,
        flat=flat,
    )


def snapshot_metadata(snap):
    return {
        "run": snap.run,
        "function": snap.function,
        "function_seed": snap.function_seed,
        "d": snap.d,
        "t": snap.t,
        "fe": snap.fe,
        "individual": snap.individual,
        "rank": snap.rank,
        "pam": snap.pam,
        "strategy": snap.strategy,
        "k_f": snap.grid.k_f,
        "k_c": snap.grid.k_c,
        "best_pair": [snap.best_pair.f, snap.best_pair.cr],
        "actual_pair": [float(snap.actual_pair.f), float(snap.actual_pair.cr)],
        "flat": snap.flat,
    }


def write_snapshot(snap, snapshots_dir):
    """Write <fe>/<rank>.csv and <fe>/<rank>.json; returns the CSV path."""
    fe_dir = snapshots_dir / str(snap.fe)
    fe_dir.mkdir(parents=True, exist_ok=True)
    csv_path = fe_dir / ("%d.csv" % snap.rank)
    lines = ["F,C,g1,g1_norm\n"]
    for p in range(snap.grid.m):
        lines.append(
            "%r,%r,%r,%r\n"
            % (
                float(snap.grid.fs[p]),
                float(snap.grid.cs[p]),
                float(snap.g1[p]),
                float(snap.g1_norm[p]),
            )
        )
    csv_path.write_text("".join(lines))
    meta_path = fe_dir / ("%d.json" % snap.rank)
    meta_path.write_text(
        json.dumps(snapshot_metadata(snap), sort_keys=True, separators=(",", ":")) + "\n"
    )
    return csv_path


def read_snapshot(csv_path):
    """Load a written snapshot back as (metadata dict, column arrays)."""
    meta_path = csv_path.with_suffix(".json")
    meta = json.loads(meta_path.read_text())
    rows = csv_path.read_text().splitlines()
    header = rows[0].split(",")
    if header != ["F", "C", "g1", "g1_norm"]:
        raise ConfigurationError("%s is not a snapshot CSV" % csv_path)
    data = np.array([[float(v) for v in row.split(",")] for row in rows[1:]])
    cols = {name: np.ascontiguousarray(data[:, k]) for k, name in enumerate(header)}
    return meta, cols
