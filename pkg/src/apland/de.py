"""Differential-evolution core: population state and the per-trial operators.

All randomness a trial needs is drawn up front into a FrozenFactors bundle
(indices, crossover uniforms, forced coordinate, pbest pick and the resolved
population-or-archive donor). Freezing is what lets the profiler regenerate
the same trial under many (F, cr) pairs: with the factors held fixed, trial
construction is a pure function of the parameter pair.

The composed operators (mutate, crossover_binomial, repair_to_bounds) and
the fused kernel path (generate_trial) must produce bit-identical vectors;
tests compare the two routes.
"""

from dataclasses import dataclass
from typing import NamedTuple

import math

import numpy as np

from . import kernels
from .errors import ConfigurationError
from .functions import evaluate

STRATEGIES = {
    "rand/1": kernels.RAND1,
    "current-to-pbest/1": kernels.CURRENT_TO_PBEST1,
}
REPAIR_MODES = {
    "midpoint": kernels.REPAIR_MIDPOINT,
    "clamp": kernels.REPAIR_CLAMP,
}
PBEST_FRACTION = 0.05


class ParameterPair(NamedTuple):
    """One (scale factor, crossover rate) control pair."""

    f: float
    cr: float


@dataclass
class Individual:
    x: np.ndarray
    fx: float


@dataclass
class Population:
    """n candidate solutions plus the iteration counter t (0 after init)."""

    xs: np.ndarray
    fxs: np.ndarray
    t: int

    @property
    def n(self):
        return self.xs.shape[0]

    @property
    def d(self):
        return self.xs.shape[1]

    def member(self, i):
        return Individual(self.xs[i].copy(), float(self.fxs[i]))


class Archive(list):
    """Replaced parents, capped at a capacity by random eviction."""

    def __init__(self, capacity):
        super().__init__()
        self.capacity = capacity

    def push(self, individual):
        self.append(individual)

    def evict_overflow(self, rng):
        while len(self) > self.capacity:
            del self[int(rng.integers(len(self)))]


@dataclass
class FrozenFactors:
    """Per-trial randomness, drawn once and replayable.

    r holds the parent indices: (r1, r2, r3) for rand/1, (r1, union_index)
    for current-to-pbest/1 where union_index runs over population then
    archive. archive_pick is the donor resolved to a vector copy at draw
    time, so replay does not depend on later archive mutation.
    """

    strategy: int
    r: tuple
    s: np.ndarray
    j_rand: int
    pbest_pos: int = -1
    pbest_index: int = -1
    archive_pick: np.ndarray = None

    def bases(self, pop):
        # the three donor vectors the mutation formula consumes, in order
        if self.strategy == kernels.RAND1:
            r1, r2, r3 = self.r
            return pop.xs[r1], pop.xs[r2], pop.xs[r3]
        return pop.xs[self.pbest_index], pop.xs[self.r[0]], self.archive_pick


@dataclass
class SuccessRecords:
    """Selection outcome of one iteration: flags plus the pairs used."""

    flags: np.ndarray
    f: np.ndarray
    cr: np.ndarray

    def success_sets(self):
        sf = [float(v) for v in self.f[self.flags]]
        scr = [float(v) for v in self.cr[self.flags]]
        return sf, scr


def initialize_population(n, func, rng, counter=None):
    """Uniform population over the domain; every member evaluated (counted)."""
    if n < 4:
        raise ConfigurationError("population size must be at least 4, got %d" % n)
    xs = rng.uniform(func.lower, func.upper, (n, func.d))
    fxs = np.empty(n)
    for i in range(n):
        fxs[i] = evaluate(func, xs[i], counter, counted=True)
    return Population(xs, fxs, 0)


def rank_order(pop):
    """Indices sorted best first; equal objectives keep index order."""
    return np.argsort(pop.fxs, kind="stable")


def pbest_pool(ranked, fraction=PBEST_FRACTION):
    """Top slice for current-to-pbest/1; never fewer than two members."""
    size = max(math.floor(len(ranked) * fraction), 2)
    return ranked[:size]


def _draw_excluding(rng, bound, taken):
    r = int(rng.integers(bound))
    while r in taken:
        r = int(rng.integers(bound))
    return r


def draw_frozen_factors(
    pop, i, strategy, archive, rng, ranked=None, pbest_fraction=PBEST_FRACTION
):
    """Draw one trial's randomness from the factors stream.

    Draw order is part of the contract (replays depend on it):
    rand/1: r1, r2, r3, s, j_rand.
    current-to-pbest/1: pbest position, r1, union index, s, j_rand.
    """
    n = pop.n
    if strategy == kernels.RAND1:
        r1 = _draw_excluding(rng, n, (i,))
        r2 = _draw_excluding(rng, n, (i, r1))
        r3 = _draw_excluding(rng, n, (i, r1, r2))
        s = rng.random(pop.d)
        j_rand = int(rng.integers(pop.d))
        return FrozenFactors(strategy, (r1, r2, r3), s, j_rand)
    if ranked is None:
        ranked = rank_order(pop)
    pool = pbest_pool(ranked, pbest_fraction)
    pbest_pos = int(rng.integers(len(pool)))
    pbest_index = int(pool[pbest_pos])
    r1 = _draw_excluding(rng, n, (i,))
    union = _draw_excluding(rng, n + len(archive), (i, r1))
    s = rng.random(pop.d)
    j_rand = int(rng.integers(pop.d))
    pick = pop.xs[union].copy() if union < n else archive[union - n].x.copy()
    return FrozenFactors(strategy, (r1, union), s, j_rand, pbest_pos, pbest_index, pick)


def mutate(pop, i, pair, ff):
    """Mutant vector from the frozen donors (composed numpy route)."""
    b1, b2, b3 = ff.bases(pop)
    f = pair.f
    if ff.strategy == kernels.RAND1:
        return b1 + f * (b2 - b3)
    x = pop.xs[i]
    return x + f * (b1 - x) + f * (b2 - b3)


def crossover_binomial(x, v, cr, s, j_rand):
    """Binomial crossover: take v where s <= cr, and always at j_rand."""
    mask = s <= cr
    mask[j_rand] = True
    return np.where(mask, v, x)


def repair_to_bounds(u, x, lo, hi, mode="midpoint"):
    if mode == "midpoint":
        u = np.where(u < lo, (x + lo) / 2.0, u)
        return np.where(u > hi, (x + hi) / 2.0, u)
    if mode == "clamp":
        return np.minimum(np.maximum(u, lo), hi)
    raise ConfigurationError("unknown repair mode %r" % mode)


def generate_trial(pop, i, pair, ff, func, counter=None, counted=True, repair="midpoint"):
    """Build and evaluate one trial via the kernel fast path."""
    b1, b2, b3 = ff.bases(pop)
    u = np.empty(pop.d)
    kernels.make_trial(
        ff.strategy,
        pop.xs[i],
        np.ascontiguousarray(b1),
        np.ascontiguousarray(b2),
        np.ascontiguousarray(b3),
        pair.f,
        pair.cr,
        ff.s,
        ff.j_rand,
        func.lower,
        func.upper,
        REPAIR_MODES[repair],
        u,
    )
    fu = evaluate(func, u, counter, counted=counted)
    return u, fu


def select_and_update(pop, archive, trial_xs, trial_fs, pairs, rng):
    """Pairwise selection; ties go to the trial, losers feed the archive."""
    flags = trial_fs <= pop.fxs
    for i in np.flatnonzero(flags):
        archive.push(pop.member(int(i)))
    archive.evict_overflow(rng)
    xs = np.where(flags[:, None], trial_xs, pop.xs)
    fxs = np.where(flags, trial_fs, pop.fxs)
    records = SuccessRecords(
        flags,
        np.asarray([p.f for p in pairs]),
        np.asarray([p.cr for p in pairs]),
    )
    return Population(xs, fxs, pop.t + 1), records
