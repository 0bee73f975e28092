"""Scalar summaries of one landscape snapshot.

All three work on the raw gains, never the normalized column:

* nonzero_ratio: fraction of grid pairs with any improvement at all.
* fitness_distance_correlation: Pearson correlation between each cell's
  distance to the best cell and its negated gain, so +1 means gains decay
  smoothly away from the peak. Undefined (None) when either side has zero
  variance.
* dispersion: mean pairwise distance among the top 10% of cells by gain
  (ties broken by row-major position). Undefined when that set has fewer
  than two members.

Records serialize as JSON lines; an undefined measure becomes null plus a
<name>_reason field.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

TOP_FRACTION = 0.1

REASON_ZERO_VARIANCE = "zero-variance"
REASON_TOO_FEW = "top-set-smaller-than-2"


def nonzero_ratio(g1):
    return float(np.count_nonzero(g1 > 0.0)) / len(g1)


def fitness_distance_correlation(g1, fs, cs):
    """Pearson r of (distance to argmax cell, -gain); None if degenerate."""
    best = int(np.argmax(g1))
    dist = np.sqrt((fs - fs[best]) ** 2 + (cs - cs[best]) ** 2)
    neg = -np.asarray(g1, dtype=float)
    dx = dist - dist.mean()
    dy = neg - neg.mean()
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))
    if sxx == 0.0 or syy == 0.0:
        return None
    return float(np.dot(dx, dy)) / math.sqrt(sxx * syy)


def dispersion(g1, fs, cs, fraction=TOP_FRACTION):
    """Mean pairwise distance of the top floor(fraction * m) cells."""
    m = len(g1)
    b = math.floor(fraction * m)
    if b < 2:
        return None
    order = np.argsort(-np.asarray(g1), kind="stable")[:b]
    pts = np.column_stack((np.asarray(fs)[order], np.asarray(cs)[order]))
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt((diff ** 2).sum(axis=2))
    iu = np.triu_indices(b, 1)
    return float(dist[iu].mean())


@dataclass
class MeasureRecord:
    """The three measures for one snapshot, with undefined reasons."""

    run: int
    t: int
    fe: int
    individual: int
    rank: int
    nzr: float
    fdc: float
    disp: float
    fdc_reason: str = None
    disp_reason: str = None


def measure_snapshot(snap):
    fdc = fitness_distance_correlation(snap.g1, snap.grid.fs, snap.grid.cs)
    disp = dispersion(snap.g1, snap.grid.fs, snap.grid.cs)
    return MeasureRecord(
        run=snap.run,
        t=snap.t,
        fe=snap.fe,
        individual=snap.individual,
        rank=snap.rank,
        nzr=nonzero_ratio(snap.g1),
        fdc=fdc,
        disp=disp,
        fdc_reason=None if fdc is not None else REASON_ZERO_VARIANCE,
        disp_reason=None if disp is not None else REASON_TOO_FEW,
    )


def measure_arrays(meta, cols):
    """measure_snapshot for a snapshot read back from disk."""
    g1, fs, cs = cols["g1"], cols["F"], cols["C"]
    fdc = fitness_distance_correlation(g1, fs, cs)
    disp = dispersion(g1, fs, cs)
    return MeasureRecord(
        run=meta["run"],
        t=meta["t"],
        fe=meta["fe"],
        individual=meta["individual"],
        rank=meta["rank"],
        nzr=nonzero_ratio(g1),
        fdc=fdc,
        disp=disp,
        fdc_reason=None if fdc is not None else REASON_ZERO_VARIANCE,
        disp_reason=None if disp is not None else REASON_TOO_FEW,
    )


def record_to_json(rec):
    payload = {
        "run": rec.run,
        "t": rec.t,
        "fe": rec.fe,
        "individual": rec.individual,
        "rank": rec.rank,
        "nzr": rec.nzr,
        "fdc": rec.fdc,
        "disp": rec.disp,
    }
    if rec.fdc is None:
        payload["fdc_reason"] = rec.fdc_reason
    if rec.disp is None:
        payload["disp_reason"] = rec.disp_reason
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def write_measures(records, path):
    path.write_text("".join(record_to_json(r) + "\n" for r in records))


def read_measures(path):
    out = []
    for line in path.read_text().splitlines():
        if line.strip():
            out.append(json.loads(line))
    return out
