"""Partition-of-unity RBF interpolation on convex domains."""

from .evaluation import ErrorReport, error_report, franke2, franke3, mae, rmse
from .experiment import (
    ExperimentConfig,
    ExperimentResult,
    RunRecord,
    StageError,
    generate_dataset,
    run_detailed,
    run_experiment,
    run_table,
    shape_sweep,
)
from .geometry import (
    BUILTIN_SHAPES,
    ConvexDomain,
    Halfspace,
    contains,
    filter_points,
    grid_points,
    load_domain_file,
    make_domain,
)
from .halton import HaltonConfig, halton_points, radical_inverse
from .kdtree import SpatialIndex
from .partition import (
    AssembleError,
    Covering,
    PUModel,
    assemble,
    evaluate,
    fill_distance,
    make_covering,
    max_overlap,
    shepard_weights,
)
from .rbf import (
    DuplicatePointsError,
    FactorizationError,
    Kernel,
    LocalInterpolant,
    eval_local,
    fit_local,
    kernel_matrix,
    solve_coefficients,
    wendland_c2,
)

__version__ = "0.1.0"

__all__ = [
    "AssembleError",
    "BUILTIN_SHAPES",
    "ConvexDomain",
    "Covering",
    "DuplicatePointsError",
    "ErrorReport",
    "ExperimentConfig",
    "ExperimentResult",
    "FactorizationError",
    "Halfspace",
    "HaltonConfig",
    "Kernel",
    "LocalInterpolant",
    "PUModel",
    "RunRecord",
    "SpatialIndex",
    "StageError",
    "assemble",
    "contains",
    "error_report",
    "eval_local",
    "evaluate",
    "fill_distance",
    "filter_points",
    "fit_local",
    "franke2",
    "franke3",
    "generate_dataset",
    "grid_points",
    "halton_points",
    "kernel_matrix",
    "load_domain_file",
    "mae",
    "make_covering",
    "make_domain",
    "max_overlap",
    "radical_inverse",
    "rmse",
    "run_detailed",
    "run_experiment",
    "run_table",
    "shape_sweep",
    "shepard_weights",
    "solve_coefficients",
    "wendland_c2",
]
