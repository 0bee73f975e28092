"""Campaign orchestration: seeded runs, checkpoints, artifacts, aggregation.

A campaign executes `runs` independent runs of one configuration, each with
its own derived RNG streams. Within a run, profiling snapshots are captured
at the first iteration whose starting evaluation count has reached a
pending checkpoint (the first_checkpoint plus every cadence multiple up to
the budget). After the run, the reporting checkpoints {first, 0.5 and 0.75
of fe_stop, fe_stop} snap to the nearest captured one, ties toward the
smaller, where fe_stop is the evaluation at which the best-so-far value
last improved.

Artifact layout under <out>/<config-hash>/:
    config.txt            verbatim input (or the canonical form)
    config.resolved.txt   canonical resolved form
    run-<k>/trace.jsonl   one record per iteration: t, fe, best error
    run-<k>/record.json   run summary
    run-<k>/measures.jsonl
    run-<k>/snapshots/<fe>/<rank>.csv (+ .json sidecar)
    run-<k>/snapshots/<fe>-rank<r>.svg
Everything is byte-deterministic for a fixed config and seed.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from . import render
from .config import canonical_text, config_hash
from .de import (
    Archive,
    STRATEGIES,
    draw_frozen_factors,
    generate_trial,
    initialize_population,
    rank_order,
    select_and_update,
)
from .functions import EvaluationCounter, error_value, make_function
from .measures import measure_snapshot, read_measures, record_to_json
from .pams import make_pam
from .profiler import build_grid, snapshot_individual, snapshot_metadata, write_snapshot
from .rng import RunStreams


@dataclass
class RunRecord:
    """Summary of one run; everything the campaign tools need later."""

    run: int
    function: str
    function_seed: int
    seed: int
    budget: int
    final_error: float
    fe_at_best: int
    counted: int
    uncounted: int
    iterations: int
    snapshot_count: int
    captured_fes: list
    report: list


@dataclass
class RunResult:
    record: RunRecord
    trace: list
    snapshots: list
    measures: list


def checkpoint_fes(cfg):
    """Target checkpoint FEs: first_checkpoint plus cadence multiples."""
    targets = {cfg.first_checkpoint}
    fe = cfg.cadence
    while fe <= cfg.budget:
        targets.add(fe)
        fe += cfg.cadence
    return sorted(targets)


def snap_to_captured(target, captured):
    """Nearest captured checkpoint; ties resolve to the smaller FE."""
    best = None
    best_gap = None
    for fe in captured:
        gap = abs(fe - target)
        if best_gap is None or gap < best_gap or (gap == best_gap and fe < best):
            best, best_gap = fe, gap
    return best


def report_checkpoints(cfg, fe_stop, captured):
    targets = [
        cfg.first_checkpoint,
        math.floor(0.5 * fe_stop),
        math.floor(0.75 * fe_stop),
        fe_stop,
    ]
    return [
        {"target": t, "fe": snap_to_captured(t, captured)} for t in targets
    ]


def execute_run(cfg, run_index, run_dir=None):
    """One seeded run; writes artifacts when run_dir is given."""
    streams = RunStreams(cfg.seed, run_index)
    func = make_function(cfg.function, cfg.dimension, cfg.function_seed)
    counter = EvaluationCounter(budget=cfg.budget)
    strategy = STRATEGIES[cfg.strategy]
    pam = make_pam(
        cfg.pam,
        cfg.population,
        tau_f=cfg.tau_f,
        tau_cr=cfg.tau_cr,
        c=cfg.learning_rate,
        h=cfg.memory_size,
    )
    pop = initialize_population(cfg.population, func, streams.init, counter)
    archive = Archive(cfg.archive_capacity)
    n = cfg.population

    best = math.inf
    fe_at_best = 0
    for i in range(n):
        if pop.fxs[i] < best:
            best = float(pop.fxs[i])
            fe_at_best = i + 1
    error = error_value(best, func.optimum_value)
    trace = [(0, counter.counted, error)]

    grid = build_grid(cfg.grid_f, cfg.grid_c) if cfg.profile else None
    pending = checkpoint_fes(cfg)
    captured = []
    snapshots = []
    measures = []
    pop_dump = []
    if cfg.dump_populations:
        pop_dump.append(_population_line(pop, counter.counted))

    snapshots_dir = None
    if run_dir is not None:
        run_dir.mkdir(parents=True, exist_ok=True)
        snapshots_dir = run_dir / "snapshots"

    while True:
        start_fe = counter.counted
        if cfg.stop_on_convergence and error == 0.0:
            break
        if start_fe + n > cfg.budget:
            break
        ranked = rank_order(pop)
        # all randomness first: pairs, then frozen factors, both per index
        pairs = [pam.sample(i, streams.pam) for i in range(n)]
        ffs = [
            draw_frozen_factors(
                pop, i, strategy, archive, streams.factors, ranked,
                cfg.pbest_fraction,
            )
            for i in range(n)
        ]
        if grid is not None and pending and pending[0] <= start_fe:
            while pending and pending[0] <= start_fe:
                pending.pop(0)
            captured.append(start_fe)
            for rank in cfg.ranks:
                idx = int(ranked[rank - 1])
                snap = snapshot_individual(
                    pop, idx, rank, grid, ffs[idx], pairs[idx], func, counter,
                    run=run_index, fe=start_fe, pam=cfg.pam,
                    strategy=cfg.strategy, repair=cfg.boundary_repair,
                )
                snapshots.append(snap)
                measures.append(measure_snapshot(snap))
                if snapshots_dir is not None:
                    write_snapshot(snap, snapshots_dir)
                    if cfg.render:
                        _render_snapshot(snap, snapshots_dir)
        trial_xs = np.empty_like(pop.xs)
        trial_fs = np.empty(n)
        for i in range(n):
            u, fu = generate_trial(
                pop, i, pairs[i], ffs[i], func, counter,
                counted=True, repair=cfg.boundary_repair,
            )
            trial_xs[i] = u
            trial_fs[i] = fu
            if fu < best:
                best = fu
                fe_at_best = counter.counted
        pop, records = select_and_update(
            pop, archive, trial_xs, trial_fs, pairs, streams.archive
        )
        pam.update(records)
        error = error_value(best, func.optimum_value)
        trace.append((pop.t, counter.counted, error))
        if cfg.dump_populations:
            pop_dump.append(_population_line(pop, counter.counted))

    record = RunRecord(
        run=run_index,
        function=cfg.function,
        function_seed=cfg.function_seed,
        seed=cfg.seed,
        budget=cfg.budget,
        final_error=error,
        fe_at_best=fe_at_best,
        counted=counter.counted,
        uncounted=counter.uncounted,
        iterations=pop.t,
        snapshot_count=len(snapshots),
        captured_fes=captured,
        report=report_checkpoints(cfg, fe_at_best, captured),
    )
    if run_dir is not None:
        _write_run_artifacts(run_dir, record, trace, measures, pop_dump, cfg)
    return RunResult(record, trace, snapshots, measures)


def _population_line(pop, fe):
    return json.dumps(
        {
            "t": pop.t,
            "fe": fe,
            "xs": [[float(v) for v in row] for row in pop.xs],
            "fxs": [float(v) for v in pop.fxs],
        },
        sort_keys=True,
        separators=(",", ":"),
    )


def _render_snapshot(snap, snapshots_dir):
    svg = render.render_snapshot(snapshot_metadata(snap), snap.g1_norm)
    if svg is not None:
        (snapshots_dir / render.svg_name(snap.fe, snap.rank)).write_text(svg)


def _write_run_artifacts(run_dir, record, trace, measures, pop_dump, cfg):
    lines = []
    for t, fe, err in trace:
        lines.append(
            json.dumps(
                {"t": t, "fe": fe, "error": err},
                sort_keys=True,
                separators=(",", ":"),
            )
        )
    (run_dir / "trace.jsonl").write_text("\n".join(lines) + "\n")
    (run_dir / "record.json").write_text(
        json.dumps(record.__dict__, sort_keys=True, separators=(",", ":")) + "\n"
    )
    (run_dir / "measures.jsonl").write_text(
        "".join(record_to_json(m) + "\n" for m in measures)
    )
    if cfg.dump_populations:
        (run_dir / "populations.jsonl").write_text("\n".join(pop_dump) + "\n")


def run_experiment(cfg, out_dir, config_text=None):
    """Execute all runs of a campaign; returns (campaign_dir, records)."""
    campaign_dir = out_dir / config_hash(cfg)
    campaign_dir.mkdir(parents=True, exist_ok=True)
    canonical = canonical_text(cfg)
    (campaign_dir / "config.txt").write_text(
        canonical if config_text is None else config_text
    )
    (campaign_dir / "config.resolved.txt").write_text(canonical)
    records = []
    for k in range(cfg.runs):
        result = execute_run(cfg, k, campaign_dir / ("run-%d" % k))
        records.append(result.record)
    return campaign_dir, records


def select_median_run(records):
    """Median by (final error, fe_at_best), lower index on full ties."""
    ordered = sorted(records, key=lambda r: (r.final_error, r.fe_at_best))
    return ordered[(len(ordered) - 1) // 2]


def _sorted_mean(values):
    # sort before summing so aggregation is permutation-invariant
    ordered = sorted(values)
    acc = 0.0
    for v in ordered:
        acc += v
    return acc / len(ordered)


def aggregate_measures(rows):
    """Group measure records by (fe, rank); per-measure defined means."""
    groups = {}
    for row in rows:
        groups.setdefault((row["fe"], row["rank"]), []).append(row)
    out = []
    for (fe, rank) in sorted(groups):
        entry = {"fe": fe, "rank": rank}
        for name in ("fdc", "disp", "nzr"):
            defined = [r[name] for r in groups[(fe, rank)] if r[name] is not None]
            entry[name + "_mean"] = _sorted_mean(defined) if defined else None
            entry[name + "_n"] = len(defined)
        out.append(entry)
    return out


def write_aggregate(rows, path):
    lines = ["fe,rank,fdc_mean,fdc_n,disp_mean,disp_n,nzr_mean,nzr_n\n"]
    for row in rows:
        cells = [str(row["fe"]), str(row["rank"])]
        for name in ("fdc", "disp", "nzr"):
            mean = row[name + "_mean"]
            cells.append("" if mean is None else repr(mean))
            cells.append(str(row[name + "_n"]))
        lines.append(",".join(cells) + "\n")
    path.write_text("".join(lines))


def load_campaign_records(campaign_dir):
    """RunRecords parsed back from run-*/record.json, ordered by run."""
    records = []
    for path in sorted(
        campaign_dir.glob("run-*/record.json"),
        key=lambda p: int(p.parent.name.split("-")[1]),
    ):
        records.append(RunRecord(**json.loads(path.read_text())))
    return records


def load_campaign_measures(campaign_dir):
    rows = []
    for path in sorted(
        campaign_dir.glob("run-*/measures.jsonl"),
        key=lambda p: int(p.parent.name.split("-")[1]),
    ):
        rows.extend(read_measures(path))
    return rows
