"""Reference kernels in plain Python.

Mirrors _speedups.pyx operation for operation. The two backends must agree
bit for bit, so every accumulation here is sequential (no numpy reductions,
which sum pairwise), transcendentals go through libm via the math module,
and nearest-integer uses floor(v + 0.5) in both languages. Keep any edit in
lockstep with the Cython file.
"""

import math

# strategy codes
RAND1 = 0
CURRENT_TO_PBEST1 = 1

# function kind codes
SPHERE = 0
ELLIPSOID = 1
RASTRIGIN = 2
ROSENBROCK_ROT = 3
RASTRIGIN_ROT = 4
KATSUURA = 5

# repair codes
REPAIR_MIDPOINT = 0
REPAIR_CLAMP = 1

_TWO_PI = 2.0 * math.pi


def _eval(kind, x, opt, rot, coeffs):
    # x, opt: lists; rot: list of row lists or None; coeffs: list or None
    d = len(x)
    diff = [0.0] * d
    for j in range(d):
        diff[j] = x[j] - opt[j]
    if rot is not None:
        z = [0.0] * d
        for r in range(d):
            acc = 0.0
            row = rot[r]
            for j in range(d):
                acc = acc + row[j] * diff[j]
            z[r] = acc
    else:
        z = diff

    if kind == SPHERE:
        acc = 0.0
        for j in range(d):
            acc = acc + z[j] * z[j]
        return acc
    if kind == ELLIPSOID:
        acc = 0.0
        for j in range(d):
            acc = acc + coeffs[j] * z[j] * z[j]
        return acc
    if kind == RASTRIGIN or kind == RASTRIGIN_ROT:
        acc = 0.0
        for j in range(d):
            acc = acc + (z[j] * z[j] - 10.0 * math.cos(_TWO_PI * z[j]))
        return 10.0 * d + acc
    if kind == ROSENBROCK_ROT:
        # optimum pinned at z == 1 so the seeded shift stays inside the domain
        for j in range(d):
            z[j] = z[j] + 1.0
        acc = 0.0
        for j in range(d - 1):
            a = z[j] * z[j] - z[j + 1]
            b = z[j] - 1.0
            acc = acc + (100.0 * a * a + b * b)
        return acc
    if kind == KATSUURA:
        e = 10.0 / math.pow(d, 1.2)
        prod = 1.0
        for j in range(d):
            sj = 0.0
            tk = 1.0
            for _ in range(32):
                tk = tk * 2.0
                v = tk * z[j]
                # floor(v + 0.5), not round(): C round() halves away from
                # zero, Python round() to even; this form matches both ways
                w = v - math.floor(v + 0.5)
                sj = sj + abs(w) / tk
            base = 1.0 + (j + 1.0) * sj
            prod = prod * math.pow(base, e)
        pre = 10.0 / (d * d)
        return pre * prod - pre
    raise ValueError("unknown function kind %r" % (kind,))


def _trial(strategy, x, b1, b2, b3, f, cr, s, j_rand, lo, hi, repair, u):
    d = len(x)
    for j in range(d):
        if s[j] <= cr or j == j_rand:
            if strategy == RAND1:
                v = b1[j] + f * (b2[j] - b3[j])
            else:
                v = x[j] + f * (b1[j] - x[j]) + f * (b2[j] - b3[j])
        else:
            v = x[j]
        if repair == REPAIR_MIDPOINT:
            # parent is always in bounds, so the midpoint is too
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


def eval_point(kind, x, opt, rot, coeffs):
    return _eval(
        kind,
        x.tolist(),
        opt.tolist(),
        rot.tolist() if rot is not None else None,
        coeffs.tolist() if coeffs is not None else None,
    )


def make_trial(strategy, x, b1, b2, b3, f, cr, s, j_rand, lo, hi, repair, out):
    u = [0.0] * len(out)
    _trial(
        strategy,
        x.tolist(),
        b1.tolist(),
        b2.tolist(),
        b3.tolist(),
        f,
        cr,
        s.tolist(),
        j_rand,
        lo.tolist(),
        hi.tolist(),
        repair,
        u,
    )
    out[:] = u


def grid_g1(
    strategy,
    x,
    b1,
    b2,
    b3,
    s,
    j_rand,
    f_arr,
    c_arr,
    lo,
    hi,
    repair,
    kind,
    opt,
    rot,
    coeffs,
    fx,
    out,
):
    xs = x.tolist()
    b1s = b1.tolist()
    b2s = b2.tolist()
    b3s = b3.tolist()
    ss = s.tolist()
    los = lo.tolist()
    his = hi.tolist()
    fs = f_arr.tolist()
    cs = c_arr.tolist()
    opts = opt.tolist()
    rots = rot.tolist() if rot is not None else None
    coeffss = coeffs.tolist() if coeffs is not None else None
    m = len(fs)
    u = [0.0] * len(xs)
    res = [0.0] * m
    for p in range(m):
        _trial(strategy, xs, b1s, b2s, b3s, fs[p], cs[p], ss, j_rand, los, his, repair, u)
        fu = _eval(kind, u, opts, rots, coeffss)
        # improvement only on strict decrease; acceptance in selection is <=
        res[p] = fx - fu if fu < fx else 0.0
    out[:] = res
