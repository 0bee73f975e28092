"""Numeric kernels with a compiled fast path.

The compiled extension (_speedups, Cython) and the pure-Python module
(_pure) implement the same three operations with bit-identical results:

    eval_point(kind, x, opt, rot, coeffs) -> float
    make_trial(strategy, x, b1, b2, b3, f, cr, s, j_rand, lo, hi, repair, out)
    grid_g1(strategy, x, b1, b2, b3, s, j_rand, f_arr, c_arr, lo, hi, repair,
            kind, opt, rot, coeffs, fx, out)

Selection happens once at import: the extension if it built, else the pure
module. Set APLAND_KERNELS=pure or APLAND_KERNELS=compiled to force one
(forcing the extension raises if it is unavailable). All arrays must be
C-contiguous float64; all randomness is drawn by callers, never in here.
"""

import os

from . import _pure

RAND1 = _pure.RAND1
CURRENT_TO_PBEST1 = _pure.CURRENT_TO_PBEST1
SPHERE = _pure.SPHERE
ELLIPSOID = _pure.ELLIPSOID
RASTRIGIN = _pure.RASTRIGIN
ROSENBROCK_ROT = _pure.ROSENBROCK_ROT
RASTRIGIN_ROT = _pure.RASTRIGIN_ROT
KATSUURA = _pure.KATSUURA
REPAIR_MIDPOINT = _pure.REPAIR_MIDPOINT
REPAIR_CLAMP = _pure.REPAIR_CLAMP

_forced = os.environ.get("APLAND_KERNELS", "").strip().lower()
if _forced not in ("", "pure", "compiled"):
    raise ImportError("APLAND_KERNELS must be 'pure' or 'compiled', got %r" % _forced)

if _forced == "pure":
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "compiled"
    except ImportError:
        if _forced == "compiled":
            raise
        _impl = _pure
        BACKEND = "pure"

eval_point = _impl.eval_point
make_trial = _impl.make_trial
grid_g1 = _impl.grid_g1


def available_backends():
    """Names of importable backends, for tests and the benchmark."""
    out = {"pure": _pure}
    try:
        from . import _speedups

        out["compiled"] = _speedups
    except ImportError:
        pass
    return out
