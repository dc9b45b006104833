"""Command-line benchmark driver.

Exit codes: 0 success, 1 configuration error, 2 numeric failure during
solving, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import experiment, plots
from .experiment import ExperimentConfig, StageError
from .partition import AssembleError
from .rbf import DuplicatePointsError, FactorizationError

_NUMERIC_ERRORS = (DuplicatePointsError, FactorizationError, AssembleError,
                   np.linalg.LinAlgError)


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; remap to 1 (config error)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(sub, density: bool):
    sub.add_argument("--domain", required=True,
                     help="triangle|disk|hexagon|pyramid|cylinder|hexprism|cube|hull:FILE")
    sub.add_argument("--dim", type=int, choices=(2, 3), required=True)
    if density:
        group = sub.add_mutually_exclusive_group(required=True)
        group.add_argument("--k-level", type=int, help="density level, 1..5")
        group.add_argument("--n", type=int, help="exact in-domain point count")
    sub.add_argument("--shape", type=float, default=0.1, help="kernel shape parameter")
    sub.add_argument("--eval-per-axis", type=int, default=40,
                     help="evaluation grid resolution per axis")
    sub.add_argument("--threads", type=int, default=None,
                     help="worker threads (default: machine count)")
    sub.add_argument("--constant", type=float, default=None,
                     help="replace the test function by this constant value")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="puinterp",
                     description="Partition-of-unity RBF interpolation benchmarks")
    subs = parser.add_subparsers(dest="command", required=True)

    run = subs.add_parser("run", help="single benchmark run")
    _add_common(run, density=True)
    run.add_argument("--out", help="write the run record as CSV")

    table = subs.add_parser("table", help="error table over density levels 1..5")
    _add_common(table, density=False)
    table.add_argument("--max-n", type=int, default=None,
                       help="skip levels with more than this many points")
    table.add_argument("--out", help="write the run records as CSV")
    table.add_argument("--fig", help="render a convergence figure (PNG)")

    sweep = subs.add_parser("sweep", help="RMSE across kernel shape parameters")
    _add_common(sweep, density=True)
    sweep.add_argument("--shape-min", type=float, default=0.1)
    sweep.add_argument("--shape-max", type=float, default=3.0)
    sweep.add_argument("--samples", type=int, default=30)
    sweep.add_argument("--out", help="write the (shape, RMSE) series as CSV")
    sweep.add_argument("--fig", help="render the sweep figure (PNG)")

    fld = subs.add_parser("field", help="per-point error export on the evaluation grid")
    _add_common(fld, density=True)
    fld.add_argument("--out", required=True, help="error field CSV path")
    fld.add_argument("--fig", help="render the error field figure (PNG)")

    return parser


def _config(args) -> ExperimentConfig:
    return ExperimentConfig(
        domain=args.domain,
        dim=args.dim,
        k_level=getattr(args, "k_level", None),
        n=getattr(args, "n", None),
        kernel_shape=args.shape,
        eval_per_axis=args.eval_per_axis,
        workers=args.threads,
        constant_value=args.constant,
    )


def _cmd_run(args) -> None:
    record = experiment.run_experiment(_config(args))
    print(experiment.format_record(record))
    if args.out:
        experiment.write_records(args.out, [record])
        print(f"wrote {args.out}")


def _cmd_table(args) -> None:
    cfg = ExperimentConfig(
        domain=args.domain, dim=args.dim, k_level=1, kernel_shape=args.shape,
        eval_per_axis=args.eval_per_axis, workers=args.threads,
        constant_value=args.constant,
    )
    records = experiment.run_table(cfg, max_n=args.max_n)
    print(experiment.format_table(records))
    if args.out:
        experiment.write_records(args.out, records)
        print(f"wrote {args.out}")
    if args.fig:
        plots.plot_convergence(records, args.fig)
        print(f"wrote {args.fig}")


def _cmd_sweep(args) -> None:
    series = experiment.shape_sweep(_config(args), shape_min=args.shape_min,
                                    shape_max=args.shape_max, samples=args.samples)
    best_shape, best = min(series, key=lambda sr: sr[1].rmse)
    print(f"swept {len(series)} shapes in [{args.shape_min:g}, {args.shape_max:g}]; "
          f"best RMSE {best.rmse:.2E} at shape {best_shape:.4g}")
    if args.out:
        experiment.write_sweep(args.out, series)
        print(f"wrote {args.out}")
    if args.fig:
        plots.plot_sweep(series, args.fig)
        print(f"wrote {args.fig}")


def _cmd_field(args) -> None:
    result = experiment.export_error_field(_config(args), args.out)
    print(experiment.format_record(result.record))
    print(f"wrote {args.out}")
    if args.fig:
        plots.plot_error_field(result.eval_points, np.abs(result.approx - result.truth),
                               args.fig)
        print(f"wrote {args.fig}")


_COMMANDS = {"run": _cmd_run, "table": _cmd_table, "sweep": _cmd_sweep, "field": _cmd_field}


def _exit_code(exc: BaseException) -> int:
    if isinstance(exc, StageError):
        return _exit_code(exc.cause)
    if isinstance(exc, _NUMERIC_ERRORS):
        return 2
    if isinstance(exc, OSError):
        return 3
    return 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except (StageError, ValueError, OSError, np.linalg.LinAlgError,
            FactorizationError, AssembleError) as exc:
        print(f"puinterp: error: {exc}", file=sys.stderr)
        return _exit_code(exc)
    return 0


if __name__ == "__main__":
    sys.exit(main())
