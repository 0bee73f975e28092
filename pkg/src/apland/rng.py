"""Deterministic named RNG streams.

One master seed fans out into independent generators, one per concern, so
optional work never shifts the draws of the search itself: the profiler
consumes no randomness at all, and e.g. archive eviction draws cannot
perturb trial construction. Streams are derived with SeedSequence spawn
keys, which are stable across processes and platforms.
"""

import numpy as np

STREAM_NAMES = ("init", "factors", "pam", "archive")


def _generator(master_seed, run_index, stream_pos):
    ss = np.random.SeedSequence(master_seed, spawn_key=(run_index, stream_pos))
    return np.random.Generator(np.random.PCG64(ss))


class RunStreams:
    """The four generators one run draws from.

    init: initial population positions.
    factors: indices, crossover uniforms and j_rand for trial construction.
    pam: parameter-adaptation draws (tau coins, Cauchy/normal samples).
    archive: eviction choices.
    """

    def __init__(self, master_seed, run_index=0):
        self.master_seed = master_seed
        self.run_index = run_index
        for pos, name in enumerate(STREAM_NAMES):
            setattr(self, name, _generator(master_seed, run_index, pos))
