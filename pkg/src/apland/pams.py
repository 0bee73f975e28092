"""Parameter-adaptation methods for the scale factor and crossover rate.

Three adaptive schemes plus a fixed-pair stub:

* Pjde keeps a stored pair per individual; each is resampled with
  probability tau before use and the stored value is overwritten by the
  trial value only when the trial succeeds.
* Pjade samples around running means mu_f / mu_cr, updated from the
  successful values with a learning rate c (Lehmer mean for f, arithmetic
  mean for cr).
* Pshade keeps H memory slots; each sample draws a slot uniformly, and one
  slot per iteration is overwritten with the Lehmer means of the successful
  values, the write position cycling 1..H.

Every sampler guarantees f in (0, 1] and cr in [0, 1]. Updates with an
empty success set are skipped (memories keep their values, the Pshade write
position does not move).
"""

import math

from .de import ParameterPair
from .errors import ConfigurationError, PamStateError

CAUCHY_GAMMA = 0.1
NORMAL_SIGMA = 0.1
CAUCHY_MAX_REDRAWS = 100
CAUCHY_FLOOR = 1e-3


def randu(rng, a, b):
    return a + (b - a) * rng.random()


def sample_cauchy_positive(rng, mu, gamma=CAUCHY_GAMMA):
    """Cauchy draw truncated to 1 from above, redrawn while non-positive.

    Inverse-transform sampling (one uniform per attempt) keeps the draw
    count deterministic. After CAUCHY_MAX_REDRAWS failed attempts the value
    falls back to a small positive floor; with gamma = 0.1 and mu >= 0 that
    path is essentially unreachable but bounds the loop.
    """
    for _ in range(CAUCHY_MAX_REDRAWS):
        v = mu + gamma * math.tan(math.pi * (rng.random() - 0.5))
        if v > 1.0:
            return 1.0
        if v > 0.0:
            return v
    return CAUCHY_FLOOR


def sample_normal_clipped(rng, mu, sigma=NORMAL_SIGMA):
    v = rng.normal(mu, sigma)
    if v < 0.0:
        return 0.0
    if v > 1.0:
        return 1.0
    return float(v)


def lehmer_mean(values):
    """Sum of squares over sum; 0 when the sum is not positive.

    The guard covers a success set whose values are all exactly 0 (possible
    for clipped crossover rates); 0/0 would otherwise poison the memory.
    """
    num = 0.0
    den = 0.0
    for v in values:
        num += v * v
        den += v
    if den <= 0.0:
        return 0.0
    return num / den


def arithmetic_mean(values):
    acc = 0.0
    for v in values:
        acc += v
    return acc / len(values)


class FixedPam:
    """Constant pair; with it the engine reduces to classical DE."""

    name = "fixed"

    def __init__(self, f, cr):
        if not 0.0 < f <= 1.0:
            raise ConfigurationError("fixed f must be in (0, 1], got %r" % f)
        if not 0.0 <= cr <= 1.0:
            raise ConfigurationError("fixed cr must be in [0, 1], got %r" % cr)
        self.pair = ParameterPair(f, cr)

    def sample(self, i, rng):
        return self.pair

    def update(self, records):
        pass


class Pjde:
    """Per-individual stored pairs with tau-coin resampling.

    sample(i) draws two independent uniforms: with probability tau_f the
    trial f is redrawn from randu[0.1, 1], else the stored value is reused;
    likewise tau_cr and randu[0, 1] for cr. update() copies trial values
    into storage only at successful indices.
    """

    name = "pjde"

    def __init__(self, n, tau_f=0.1, tau_cr=0.1):
        self.n = n
        self.tau_f = tau_f
        self.tau_cr = tau_cr
        self.stored_f = [0.5] * n
        self.stored_cr = [0.9] * n
        self.trial_f = list(self.stored_f)
        self.trial_cr = list(self.stored_cr)
        self._sampled = False

    def sample(self, i, rng):
        f = randu(rng, 0.1, 1.0) if rng.random() < self.tau_f else self.stored_f[i]
        cr = randu(rng, 0.0, 1.0) if rng.random() < self.tau_cr else self.stored_cr[i]
        self.trial_f[i] = f
        self.trial_cr[i] = cr
        self._sampled = True
        return ParameterPair(f, cr)

    def update(self, records):
        if not self._sampled:
            raise PamStateError("update() before any sample() this iteration")
        for i in range(self.n):
            if records.flags[i]:
                self.stored_f[i] = self.trial_f[i]
                self.stored_cr[i] = self.trial_cr[i]
        self._sampled = False


class Pjade:
    """Running-mean adaptation: mu <- (1 - c) mu + c mean(successes)."""

    name = "pjade"

    def __init__(self, c=0.1):
        self.c = c
        self.mu_f = 0.5
        self.mu_cr = 0.5

    def sample(self, i, rng):
        f = sample_cauchy_positive(rng, self.mu_f)
        cr = sample_normal_clipped(rng, self.mu_cr)
        return ParameterPair(f, cr)

    def update(self, records):
        sf, scr = records.success_sets()
        if not sf:
            return
        c = self.c
        self.mu_f = (1.0 - c) * self.mu_f + c * lehmer_mean(sf)
        self.mu_cr = (1.0 - c) * self.mu_cr + c * arithmetic_mean(scr)


class Pshade:
    """H-slot success memories, written round-robin.

    Each sample records the slot it drew in last_r. An update with a
    non-empty success set writes the Lehmer means of both value sets into
    the current slot and advances it; memory_index reports the 1-based
    write position, wrapping back to 1 past H.
    """

    name = "pshade"

    def __init__(self, h=10):
        if h < 1:
            raise ConfigurationError("memory size must be at least 1, got %d" % h)
        self.h = h
        self.memory_f = [0.5] * h
        self.memory_cr = [0.5] * h
        self._k = 0
        self.last_r = None

    @property
    def memory_index(self):
        return self._k + 1

    def sample(self, i, rng):
        r = int(rng.integers(self.h))
        self.last_r = r
        f = sample_cauchy_positive(rng, self.memory_f[r])
        cr = sample_normal_clipped(rng, self.memory_cr[r])
        return ParameterPair(f, cr)

    def update(self, records):
        sf, scr = records.success_sets()
        if not sf:
            return
        self.memory_f[self._k] = lehmer_mean(sf)
        self.memory_cr[self._k] = lehmer_mean(scr)
        self._k = (self._k + 1) % self.h


def make_pam(spec, n, tau_f=0.1, tau_cr=0.1, c=0.1, h=10):
    """Build a PAM from its config name.

    Accepts pjde, pjade, pshade, or fixed:<f>:<cr>.
    """
    if spec == "pjde":
        return Pjde(n, tau_f=tau_f, tau_cr=tau_cr)
    if spec == "pjade":
        return Pjade(c=c)
    if spec == "pshade":
        return Pshade(h=h)
    if spec.startswith("fixed:"):
        parts = spec.split(":")
        if len(parts) != 3:
            raise ConfigurationError("fixed pam must look like fixed:<f>:<cr>")
        try:
            f, cr = float(parts[1]), float(parts[2])
        except ValueError:
            raise ConfigurationError("fixed pam must look like fixed:<f>:<cr>") from None
        return FixedPam(f, cr)
    raise ConfigurationError("unknown pam %r" % spec)
