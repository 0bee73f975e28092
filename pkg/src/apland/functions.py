"""Benchmark objective functions and evaluation counting.

Every function is minimized over [-5, 5]^d with optimum value 0 at a seeded
location drawn uniformly from [-4, 4]^d. Rotated variants apply a seeded
orthogonal matrix to the shifted point; the rotated Rosenbrock maps the
optimum to z == 1 internally so its location stays at the seeded shift.

The catalog spans the usual difficulty axes: separable unimodal (sphere),
high conditioning (ellipsoid), low-to-moderate conditioning with a bent
valley (rosenbrock-rotated), multimodal with adequate global structure
(rastrigin, rastrigin-rotated) and multimodal with weak global structure
(katsuura).
"""

import math

import numpy as np

from . import kernels
from .errors import BudgetError, ConfigurationError, DomainError

DOMAIN = (-5.0, 5.0)
SHIFT_RANGE = (-4.0, 4.0)

_CATALOG = {
    # name: (kind code, rotated, category)
    "sphere": (kernels.SPHERE, False, "separable, unimodal"),
    "ellipsoid": (kernels.ELLIPSOID, False, "unimodal, high conditioning"),
    "rosenbrock-rotated": (kernels.ROSENBROCK_ROT, True, "low-to-moderate conditioning"),
    "rastrigin": (kernels.RASTRIGIN, False, "separable, multimodal"),
    "rastrigin-rotated": (kernels.RASTRIGIN_ROT, True, "multimodal, adequate global structure"),
    "katsuura": (kernels.KATSUURA, False, "multimodal, weak global structure"),
}


class EvaluationCounter:
    """Split bookkeeping for objective calls.

    Counted evaluations are the search's own and are capped by the budget
    when one is set; uncounted evaluations belong to the profiler and may
    grow freely without touching the budget.
    """

    def __init__(self, budget=None):
        self.counted = 0
        self.uncounted = 0
        self.budget = budget

    def add_counted(self, k=1):
        if self.budget is not None and self.counted + k > self.budget:
            raise BudgetError(
                "counted evaluations would exceed budget %d" % self.budget
            )
        self.counted += k

    def add_uncounted(self, k=1):
        self.uncounted += k


class BenchmarkFunction:
    """A shifted (optionally rotated) analytic test function.

    Immutable after construction and safe to evaluate from many threads.
    `optimum_location` is the seeded shift; `optimum_value` is 0 for every
    catalog member. Calling the object evaluates one point without any
    counting; use `evaluate` for counted/uncounted bookkeeping.
    """

    def __init__(self, name, d, seed, kind, optimum_location, rotation, coeffs):
        self.name = name
        self.d = d
        self.seed = seed
        self.kind = kind
        self.optimum_location = optimum_location
        self.optimum_value = 0.0
        self.rotation = rotation
        self.coeffs = coeffs
        self.lower = np.full(d, DOMAIN[0])
        self.upper = np.full(d, DOMAIN[1])

    def __call__(self, x):
        x = np.ascontiguousarray(x, dtype=np.float64)
        return kernels.eval_point(
            self.kind, x, self.optimum_location, self.rotation, self.coeffs
        )

    def __repr__(self):
        return "BenchmarkFunction(%r, d=%d, seed=%d)" % (self.name, self.d, self.seed)


def catalog():
    """(name, category) rows in a fixed presentation order."""
    return [(name, spec[2]) for name, spec in _CATALOG.items()]


def make_function(name, d, seed, shift=None, rotation=None):
    """Construct a catalog function for dimension d.

    The seed fixes the shift and, for rotated variants, the orthogonal
    matrix (orthonormalized standard normal draws, QR with a positive
    diagonal). `shift` and `rotation` override the seeded draws; tests use
    them to pin analytically known cases.
    """
    if name not in _CATALOG:
        raise ConfigurationError(
            "unknown function %r (choose from %s)" % (name, ", ".join(_CATALOG))
        )
    if d < 2:
        raise DomainError("dimension must be at least 2, got %d" % d)
    kind, rotated, _ = _CATALOG[name]
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    drawn_shift = rng.uniform(SHIFT_RANGE[0], SHIFT_RANGE[1], d)
    if shift is None:
        shift = drawn_shift
    shift = np.ascontiguousarray(shift, dtype=np.float64)
    if shift.shape != (d,):
        raise ConfigurationError("shift must have shape (%d,)" % d)
    if rotated:
        if rotation is None:
            a = rng.standard_normal((d, d))
            q, r = np.linalg.qr(a)
            # fix signs so the factorization (hence the function) is unique
            q = q * np.where(np.diag(r) < 0.0, -1.0, 1.0)
            rotation = q
        rotation = np.ascontiguousarray(rotation, dtype=np.float64)
        if rotation.shape != (d, d):
            raise ConfigurationError("rotation must have shape (%d, %d)" % (d, d))
    else:
        rotation = None
    if kind == kernels.ELLIPSOID:
        coeffs = np.ascontiguousarray(
            [math.pow(10.0, 6.0 * j / (d - 1)) for j in range(d)]
        )
    else:
        coeffs = None
    return BenchmarkFunction(name, d, seed, kind, shift, rotation, coeffs)


def evaluate(func, x, counter=None, counted=True):
    """Evaluate one point, recording it on the counter when given."""
    if counter is not None:
        if counted:
            counter.add_counted()
        else:
            counter.add_uncounted()
    return func(x)


def error_value(best, optimum=0.0):
    """Distance to the optimum with the reporting floor applied.

    Values below 1e-8 are treated as exactly 0 so converged runs compare
    equal regardless of which side of machine noise they landed on.
    """
    err = best - optimum
    if err < 0.0:
        err = 0.0
    return 0.0 if err < 1e-8 else err
