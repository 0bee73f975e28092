"""Command-line interface.

Subcommands: run, median, measure, aggregate, render, functions. Exit
codes: 0 success, 1 usage error, 2 runtime failure.
"""

import argparse
import sys
from pathlib import Path

from . import kernels, render
from .config import ExperimentConfig, load_config
from .errors import ConfigurationError
from .functions import catalog
from .harness import (
    aggregate_measures,
    load_campaign_measures,
    load_campaign_records,
    run_experiment,
    select_median_run,
    write_aggregate,
)
from .measures import measure_arrays, write_measures
from .profiler import read_snapshot


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser():
    parser = _Parser(prog="apland", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("run", help="execute a campaign of seeded runs")
    p.add_argument("--config", type=Path, help="flat key = value config file")
    p.add_argument("--seed", type=int, help="override the master seed")
    p.add_argument("--out-dir", type=Path, default=Path("apland-out"))

    p = sub.add_parser("median", help="pick the median run of a campaign")
    p.add_argument("campaign", type=Path, help="campaign directory")

    p = sub.add_parser("measure", help="recompute measures for snapshot files")
    p.add_argument("snapshots", type=Path, help="directory containing snapshot CSVs")
    p.add_argument("--out", type=Path, help="output JSONL (default <dir>/measures.jsonl)")

    p = sub.add_parser("aggregate", help="aggregate measures across a campaign")
    p.add_argument("campaign", type=Path, help="campaign directory")
    p.add_argument("--out", type=Path, help="output CSV (default <dir>/aggregate.csv)")

    p = sub.add_parser("render", help="render snapshots to SVG")
    p.add_argument("path", type=Path, help="snapshot CSV or a directory of them")

    sub.add_parser("functions", help="list the benchmark function catalog")
    return parser


def _snapshot_csvs(root):
    if root.is_file():
        return [root]
    found = [
        p for p in sorted(root.rglob("*.csv")) if p.with_suffix(".json").exists()
    ]
    return found


def _cmd_run(args):
    if args.config is not None:
        cfg = load_config(args.config, seed=args.seed)
        config_text = args.config.read_text()
    else:
        kwargs = {} if args.seed is None else {"seed": args.seed}
        cfg = ExperimentConfig(**kwargs)
        config_text = None
    campaign_dir, records = run_experiment(cfg, args.out_dir, config_text)
    print("kernel backend: %s" % kernels.BACKEND)
    print("campaign: %s" % campaign_dir)
    for rec in records:
        print(
            "run %d: error=%r fe_at_best=%d counted=%d snapshots=%d"
            % (rec.run, rec.final_error, rec.fe_at_best, rec.counted,
               rec.snapshot_count)
        )
    med = select_median_run(records)
    print("median run: %d (error=%r)" % (med.run, med.final_error))
    return 0


def _cmd_median(args):
    records = load_campaign_records(args.campaign)
    if not records:
        raise ConfigurationError("no run records under %s" % args.campaign)
    med = select_median_run(records)
    print(
        "median run: %d (error=%r, fe_at_best=%d)"
        % (med.run, med.final_error, med.fe_at_best)
    )
    return 0


def _cmd_measure(args):
    csvs = _snapshot_csvs(args.snapshots)
    if not csvs:
        raise ConfigurationError("no snapshot CSVs under %s" % args.snapshots)
    loaded = [read_snapshot(p) for p in csvs]
    loaded.sort(key=lambda mc: (mc[0]["run"], mc[0]["fe"], mc[0]["rank"]))
    records = [measure_arrays(meta, cols) for meta, cols in loaded]
    out = args.out
    if out is None:
        root = args.snapshots if args.snapshots.is_dir() else args.snapshots.parent
        out = root / "measures.jsonl"
    write_measures(records, out)
    print("measured %d snapshots -> %s" % (len(records), out))
    return 0


def _cmd_aggregate(args):
    rows = load_campaign_measures(args.campaign)
    if not rows:
        raise ConfigurationError("no measures.jsonl under %s" % args.campaign)
    out = args.out if args.out is not None else args.campaign / "aggregate.csv"
    write_aggregate(aggregate_measures(rows), out)
    print("aggregated %d records -> %s" % (len(rows), out))
    return 0


def _svg_target(csv_path, meta):
    # snapshots live at <root>/<fe>/<rank>.csv; the SVG sits at the root
    if csv_path.parent.name == str(meta["fe"]):
        return csv_path.parent.parent / render.svg_name(meta["fe"], meta["rank"])
    return csv_path.parent / render.svg_name(meta["fe"], meta["rank"])


def _cmd_render(args):
    csvs = _snapshot_csvs(args.path)
    if not csvs:
        raise ConfigurationError("no snapshot CSVs under %s" % args.path)
    rendered = 0
    for csv_path in csvs:
        meta, cols = read_snapshot(csv_path)
        svg = render.render_snapshot(meta, cols["g1_norm"])
        if svg is None:
            print("flat landscape, skipped: %s" % csv_path)
            continue
        target = _svg_target(csv_path, meta)
        target.write_text(svg)
        rendered += 1
    print("rendered %d snapshots" % rendered)
    return 0


def _cmd_functions(args):
    width = max(len(name) for name, _ in catalog())
    for name, category in catalog():
        print("%-*s  %s  [-5, 5]^d" % (width, name, category))
    return 0


_COMMANDS = {
    "run": _cmd_run,
    "median": _cmd_median,
    "measure": _cmd_measure,
    "aggregate": _cmd_aggregate,
    "render": _cmd_render,
    "functions": _cmd_functions,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 1
    try:
        return _COMMANDS[args.command](args)
    except Exception as exc:  # runtime failures map to exit code 2
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
