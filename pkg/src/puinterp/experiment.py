"""Benchmark orchestration: dataset generation, runs, tables, sweeps, exports."""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field, fields, replace

import numpy as np

from . import evaluation, geometry, halton, partition, rbf

K_LEVELS = (1, 2, 3, 4, 5)


class StageError(RuntimeError):
    """A pipeline stage failed; carries the stage name and original error."""

    def __init__(self, stage, cause):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage '{stage}' failed: {cause}")


@dataclass(frozen=True)
class ExperimentConfig:
    """One benchmark run: a domain, a data density, and a kernel shape."""

    domain: str
    dim: int
    k_level: int | None = None
    n: int | None = None
    kernel_shape: float = 0.1
    eval_per_axis: int = 40
    workers: int | None = None
    constant_value: float | None = None

    def __post_init__(self):
        if (self.k_level is None) == (self.n is None):
            raise ValueError("exactly one of k_level and n must be set")
        if self.k_level is not None and self.k_level < 1:
            raise ValueError(f"k_level must be >= 1, got {self.k_level}")
        if self.n is not None and self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not self.kernel_shape > 0:
            raise ValueError(f"kernel_shape must be positive, got {self.kernel_shape}")
        if self.eval_per_axis < 1:
            raise ValueError(f"eval_per_axis must be >= 1, got {self.eval_per_axis}")


@dataclass(frozen=True)
class RunRecord:
    """Summary of one benchmark run; all numeric outputs are deterministic."""

    domain: str
    dim: int
    k_level: int | None
    n: int
    d: int
    grid_total: int
    radius: float
    kernel_shape: float
    mae: float
    rmse: float
    s: int
    max_overlap: int
    empty_count: int
    uncovered_count: int
    t_generate_ms: float
    t_build_ms: float
    t_assemble_ms: float
    t_evaluate_ms: float

    @property
    def t_total_ms(self) -> float:
        return self.t_generate_ms + self.t_build_ms + self.t_assemble_ms + self.t_evaluate_ms


@dataclass(frozen=True)
class ExperimentResult:
    """A run record plus the artifacts behind it, for exports and tests."""

    record: RunRecord
    domain: geometry.ConvexDomain
    model: partition.PUModel = field(repr=False)
    data_points: np.ndarray = field(repr=False)
    data_values: np.ndarray = field(repr=False)
    eval_points: np.ndarray = field(repr=False)
    truth: np.ndarray = field(repr=False)
    approx: np.ndarray = field(repr=False)
    uncovered: np.ndarray = field(repr=False)


def resolve_domain(label: str, dim: int) -> geometry.ConvexDomain:
    """Map a CLI domain label (builtin name or hull:FILE) to a domain."""
    if label.startswith("hull:"):
        dom = geometry.load_domain_file(label[len("hull:"):])
        if dom.dim != dim:
            raise ValueError(f"domain file has dimension {dom.dim}, expected {dim}")
        return dom
    return geometry.make_domain(label, dim)


def candidate_count(k_level: int, dim: int) -> int:
    """Halton candidates drawn in the unit cube before domain filtering."""
    return (10 * k_level) ** dim


def generate_dataset(config: ExperimentConfig, domain: geometry.ConvexDomain):
    """Halton points inside the domain plus test-function values.

    With k_level set, all in-domain points among (10k)^dim candidates are
    kept.  With an explicit n, the candidate count is bisected to the
    smallest prefix of the sequence containing exactly n in-domain points.
    Returns (points, values, volume_fraction).
    """
    dim = domain.dim

    def kept(count):
        pts, _ = geometry.filter_points(domain, halton.halton_points(count, dim))
        return pts

    if config.k_level is not None:
        total = candidate_count(config.k_level, dim)
        points = kept(total)
        if len(points) == 0:
            raise ValueError("no Halton candidates landed inside the domain")
    else:
        total = config.n
        while len(kept(total)) < config.n:
            total *= 2
            if total > 2 ** 40:
                raise ValueError(f"cannot reach n={config.n} in-domain points")
        lo, hi = total // 2, total  # kept(lo) < n <= kept(hi)
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if len(kept(mid)) >= config.n:
                hi = mid
            else:
                lo = mid
        total = hi
        points = kept(total)

    if config.constant_value is not None:
        values = np.full(len(points), float(config.constant_value))
    else:
        values = evaluation.test_function(points)
    return points, values, len(points) / total


def _timed(stage, fn):
    start = time.perf_counter()
    try:
        out = fn()
    except Exception as exc:
        raise StageError(stage, exc) from exc
    return out, (time.perf_counter() - start) * 1000.0


def run_detailed(config: ExperimentConfig) -> ExperimentResult:
    """Run the full pipeline and keep the intermediate artifacts."""
    domain = resolve_domain(config.domain, config.dim)

    (data, values, frac), t_gen = _timed(
        "generate", lambda: generate_dataset(config, domain)
    )

    def build():
        covering = partition.make_covering(domain, len(data), config.dim,
                                           volume_fraction=frac)
        grid = geometry.grid_points(config.dim, config.eval_per_axis)
        eval_points, _ = geometry.filter_points(domain, grid)
        return covering, eval_points

    (covering, eval_points), t_build = _timed("build", build)

    model, t_asm = _timed("assemble", lambda: partition.assemble(
        domain, data, values, covering, model_kernel(config), workers=config.workers
    ))

    def run_eval():
        approx, uncovered = partition.evaluate(model, eval_points, workers=config.workers)
        if config.constant_value is not None:
            truth = np.full(len(eval_points), float(config.constant_value))
        else:
            truth = evaluation.test_function(eval_points)
        report = evaluation.error_report(truth, approx)
        overlap = partition.max_overlap(model, eval_points)
        return approx, uncovered, truth, report, overlap

    (approx, uncovered, truth, report, overlap), t_eval = _timed("evaluate", run_eval)

    record = RunRecord(
        domain=domain.label,
        dim=config.dim,
        k_level=config.k_level,
        n=len(data),
        d=covering.n_subdomains,
        grid_total=covering.grid_total,
        radius=covering.radius,
        kernel_shape=config.kernel_shape,
        mae=report.mae,
        rmse=report.rmse,
        s=report.s,
        max_overlap=overlap,
        empty_count=model.empty_count,
        uncovered_count=len(uncovered),
        t_generate_ms=t_gen,
        t_build_ms=t_build,
        t_assemble_ms=t_asm,
        t_evaluate_ms=t_eval,
    )
    return ExperimentResult(
        record=record, domain=domain, model=model, data_points=data,
        data_values=values, eval_points=eval_points, truth=truth,
        approx=approx, uncovered=uncovered,
    )


def run_experiment(config: ExperimentConfig) -> RunRecord:
    """Run the pipeline and return the summary record."""
    return run_detailed(config).record


def run_table(config: ExperimentConfig, max_n: int | None = None) -> list[RunRecord]:
    """One run per density level k = 1..5, skipping levels larger than max_n."""
    records = []
    for k in K_LEVELS:
        cfg = replace(config, k_level=k, n=None)
        domain = resolve_domain(cfg.domain, cfg.dim)
        points, _, _ = generate_dataset(cfg, domain)
        if max_n is not None and len(points) > max_n:
            continue
        records.append(run_experiment(cfg))
    return records


def shape_sweep(config: ExperimentConfig, shape_min: float = 0.1,
                shape_max: float = 3.0, samples: int = 30):
    """Rerun assembly and evaluation over log-spaced kernel shapes.

    The dataset and covering are generated once and reused, since neither
    depends on the kernel shape.  Returns a list of (shape, RunRecord).
    """
    if not 0 < shape_min <= shape_max:
        raise ValueError("need 0 < shape_min <= shape_max")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    out = []
    for delta in np.geomspace(shape_min, shape_max, samples):
        out.append((float(delta), run_experiment(replace(config, kernel_shape=float(delta)))))
    return out


def export_error_field(config: ExperimentConfig, path: str) -> ExperimentResult:
    """Write per-point truth, interpolant value, and absolute error to CSV."""
    result = run_detailed(config)
    coords = [f"x{i + 1}" for i in range(config.dim)]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(coords + ["f", "interp", "abserr"])
        for p, t, a in zip(result.eval_points, result.truth, result.approx):
            writer.writerow([_fmt(v) for v in p] + [_fmt(t), _fmt(a), _fmt(abs(a - t))])
    return result


def model_kernel(config: ExperimentConfig) -> rbf.Kernel:
    return rbf.Kernel(shape=config.kernel_shape)


# ---------------------------------------------------------------------------
# Delimited output and pretty tables

def _fmt(value) -> str:
    """Full-precision decimal rendering that round-trips exactly."""
    return f"{float(value):.17g}"


_INT_FIELDS = {"dim", "k_level", "n", "d", "grid_total", "s", "max_overlap",
               "empty_count", "uncovered_count"}


def write_records(path: str, records: list[RunRecord]) -> None:
    names = [f.name for f in fields(RunRecord)]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(names)
        for rec in records:
            row = []
            for name in names:
                val = getattr(rec, name)
                if val is None:
                    row.append("")
                elif name in _INT_FIELDS:
                    row.append(str(val))
                elif name == "domain":
                    row.append(val)
                else:
                    row.append(_fmt(val))
            writer.writerow(row)


def read_records(path: str) -> list[RunRecord]:
    out = []
    with open(path, "r", newline="") as fh:
        for row in csv.DictReader(fh):
            kwargs = {}
            for name, raw in row.items():
                if raw == "":
                    kwargs[name] = None
                elif name == "domain":
                    kwargs[name] = raw
                elif name in _INT_FIELDS:
                    kwargs[name] = int(raw)
                else:
                    kwargs[name] = float(raw)
            out.append(RunRecord(**kwargs))
    return out


def write_sweep(path: str, series) -> None:
    """Two-column series file (kernel shape, RMSE)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["kernel_shape", "rmse"])
        for shape, rec in series:
            writer.writerow([_fmt(shape), _fmt(rec.rmse)])


def format_table(records: list[RunRecord]) -> str:
    """Aligned text table with 3-significant-digit scientific errors."""
    header = f"{'k':>2} {'n':>8} {'d':>7} {'MAE':>10} {'RMSE':>10} {'time_s':>8}"
    lines = [header, "-" * len(header)]
    for rec in records:
        k = "-" if rec.k_level is None else str(rec.k_level)
        lines.append(
            f"{k:>2} {rec.n:>8} {rec.d:>7} {rec.mae:>10.2E} {rec.rmse:>10.2E} "
            f"{rec.t_total_ms / 1000.0:>8.2f}"
        )
    return "\n".join(lines)


def format_record(rec: RunRecord) -> str:
    return (
        f"domain={rec.domain} dim={rec.dim} n={rec.n} d={rec.d} "
        f"shape={rec.kernel_shape:g} MAE={rec.mae:.2E} RMSE={rec.rmse:.2E} "
        f"s={rec.s} overlap={rec.max_overlap} empty={rec.empty_count} "
        f"uncovered={rec.uncovered_count} time_s={rec.t_total_ms / 1000.0:.2f}"
    )
