# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels.

Line-for-line arithmetic mirror of _pure.py: sequential accumulation, libm
transcendentals, floor(v + 0.5) for nearest integer, no FMA (built with
-ffp-contract=off). Any change here must be made in _pure.py as well; the
parity tests compare the two backends for exact equality.
"""

from libc.math cimport M_PI, cos, fabs, floor, pow
from libc.stdlib cimport free, malloc

RAND1 = 0
CURRENT_TO_PBEST1 = 1

SPHERE = 0
ELLIPSOID = 1
RASTRIGIN = 2
ROSENBROCK_ROT = 3
RASTRIGIN_ROT = 4
KATSUURA = 5

REPAIR_MIDPOINT = 0
REPAIR_CLAMP = 1

cdef double TWO_PI = 2.0 * M_PI


cdef double _eval_c(int kind, double* x, double* opt, double* rot,
                    double* coeffs, double* diff, double* zbuf, int d):
    cdef int j, r
    cdef double acc, a, b, v, w, sj, tk, e, base, prod, pre
    cdef double* z
    for j in range(d):
        diff[j] = x[j] - opt[j]
    if rot != NULL:
        for r in range(d):
            acc = 0.0
            for j in range(d):
                acc = acc + rot[r * d + j] * diff[j]
            zbuf[r] = acc
        z = zbuf
    else:
        z = diff

    if kind == 0:  # sphere
        acc = 0.0
        for j in range(d):
            acc = acc + z[j] * z[j]
        return acc
    if kind == 1:  # ellipsoid
        acc = 0.0
        for j in range(d):
            acc = acc + coeffs[j] * z[j] * z[j]
        return acc
    if kind == 2 or kind == 4:  # rastrigin / rotated rastrigin
        acc = 0.0
        for j in range(d):
            acc = acc + (z[j] * z[j] - 10.0 * cos(TWO_PI * z[j]))
        return 10.0 * d + acc
    if kind == 3:  # rotated rosenbrock, optimum at z == 1
        for j in range(d):
            z[j] = z[j] + 1.0
        acc = 0.0
        for j in range(d - 1):
            a = z[j] * z[j] - z[j + 1]
            b = z[j] - 1.0
            acc = acc + (100.0 * a * a + b * b)
        return acc
    # katsuura
    e = 10.0 / pow(d, 1.2)
    prod = 1.0
    for j in range(d):
        sj = 0.0
        tk = 1.0
        for r in range(32):
            tk = tk * 2.0
            v = tk * z[j]
            w = v - floor(v + 0.5)
            sj = sj + fabs(w) / tk
        base = 1.0 + (j + 1.0) * sj
        prod = prod * pow(base, e)
    pre = 10.0 / (<double> d * <double> d)
    return pre * prod - pre


cdef void _trial_len(int strategy, double* x, double* b1, double* b2, double* b3,
                     double f, double cr, double* s, int j_rand,
                     double* lo, double* hi, int repair, double* u, int d):
    cdef int j
    cdef double v
    for j in range(d):
        if s[j] <= cr or j == j_rand:
            if strategy == 0:
                v = b1[j] + f * (b2[j] - b3[j])
            else:
                v = x[j] + f * (b1[j] - x[j]) + f * (b2[j] - b3[j])
        else:
            v = x[j]
        if repair == 0:
            if v < lo[j]:
                v = (x[j] + lo[j]) / 2.0
            elif v > hi[j]:
                v = (x[j] + hi[j]) / 2.0
        else:
            if v < lo[j]:
                v = lo[j]
            elif v > hi[j]:
                v = hi[j]
        u[j] = v


cdef _check_kind(int kind):
    if kind < 0 or kind > 5:
        raise ValueError("unknown function kind %r" % kind)


def eval_point(int kind, double[::1] x, double[::1] opt, rot, coeffs):
    _check_kind(kind)
    cdef int d = x.shape[0]
    cdef double[:, ::1] rotv
    cdef double[::1] coefv
    cdef double* rotp = NULL
    cdef double* coefp = NULL
    if rot is not None:
        rotv = rot
        rotp = &rotv[0, 0]
    if coeffs is not None:
        coefv = coeffs
        coefp = &coefv[0]
    cdef double* scratch = <double*> malloc(2 * d * sizeof(double))
    if scratch == NULL:
        raise MemoryError()
    try:
        return _eval_c(kind, &x[0], &opt[0], rotp, coefp, scratch, scratch + d, d)
    finally:
        free(scratch)


def make_trial(int strategy, double[::1] x, double[::1] b1, double[::1] b2,
               double[::1] b3, double f, double cr, double[::1] s, int j_rand,
               double[::1] lo, double[::1] hi, int repair, double[::1] out):
    cdef int d = x.shape[0]
    _trial_len(strategy, &x[0], &b1[0], &b2[0], &b3[0], f, cr, &s[0], j_rand,
               &lo[0], &hi[0], repair, &out[0], d)


def grid_g1(int strategy, double[::1] x, double[::1] b1, double[::1] b2,
            double[::1] b3, double[::1] s, int j_rand,
            double[::1] f_arr, double[::1] c_arr,
            double[::1] lo, double[::1] hi, int repair,
            int kind, double[::1] opt, rot, coeffs, double fx,
            double[::1] out):
    _check_kind(kind)
    cdef int d = x.shape[0]
    cdef int m = f_arr.shape[0]
    cdef int p
    cdef double fu
    cdef double[:, ::1] rotv
    cdef double[::1] coefv
    cdef double* rotp = NULL
    cdef double* coefp = NULL
    if rot is not None:
        rotv = rot
        rotp = &rotv[0, 0]
    if coeffs is not None:
        coefv = coeffs
        coefp = &coefv[0]
    cdef double* scratch = <double*> malloc(3 * d * sizeof(double))
    if scratch == NULL:
        raise MemoryError()
    try:
        for p in range(m):
            _trial_len(strategy, &x[0], &b1[0], &b2[0], &b3[0],
                       f_arr[p], c_arr[p], &s[0], j_rand,
                       &lo[0], &hi[0], repair, scratch, d)
            fu = _eval_c(kind, scratch, &opt[0], rotp, coefp,
                         scratch + d, scratch + 2 * d, d)
            # improvement only on strict decrease; acceptance in selection is <=
            out[p] = fx - fu if fu < fx else 0.0
    finally:
        free(scratch)
