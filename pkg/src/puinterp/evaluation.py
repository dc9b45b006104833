"""Franke test functions and error metrics for interpolation benchmarks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def franke2(x, y):
    """Franke's bivariate test function.

    Note the second term decays linearly in y inside the exponential; that
    asymmetry is part of the standard definition.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    t1 = 0.75 * np.exp(-((9 * x - 2) ** 2 + (9 * y - 2) ** 2) / 4.0)
    t2 = 0.75 * np.exp(-((9 * x + 1) ** 2) / 49.0 - (9 * y + 1) / 10.0)
    t3 = 0.5 * np.exp(-((9 * x - 7) ** 2 + (9 * y - 3) ** 2) / 4.0)
    t4 = -0.2 * np.exp(-((9 * x - 4) ** 2) - (9 * y - 7) ** 2)
    return t1 + t2 + t3 + t4


def franke3(x, y, z):
    """Trivariate analogue of Franke's function."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    t1 = 0.75 * np.exp(
        -((9 * x - 2) ** 2 + (9 * y - 2) ** 2 + (9 * z - 2) ** 2) / 4.0
    )
    t2 = 0.75 * np.exp(
        -((9 * x + 1) ** 2) / 49.0 - (9 * y + 1) / 10.0 - (9 * z + 1) / 10.0
    )
    t3 = 0.5 * np.exp(
        -((9 * x - 7) ** 2 + (9 * y - 3) ** 2 + (9 * z - 5) ** 2) / 4.0
    )
    t4 = -0.2 * np.exp(-((9 * x - 4) ** 2) - (9 * y - 7) ** 2 - (9 * z - 5) ** 2)
    return t1 + t2 + t3 + t4


def test_function(points) -> np.ndarray:
    """Evaluate the benchmark test function matching the point dimension."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] not in (2, 3):
        raise ValueError(f"expected (n, 2) or (n, 3) points, got shape {pts.shape}")
    if pts.shape[1] == 2:
        return franke2(pts[:, 0], pts[:, 1])
    return franke3(pts[:, 0], pts[:, 1], pts[:, 2])


def mae(truth, approx) -> float:
    """Maximum absolute error."""
    t, a = _paired(truth, approx)
    return float(np.abs(a - t).max())


def rmse(truth, approx) -> float:
    """Root mean squared error."""
    t, a = _paired(truth, approx)
    return float(np.sqrt(np.mean((a - t) ** 2)))


def _paired(truth, approx):
    t = np.asarray(truth, dtype=float)
    a = np.asarray(approx, dtype=float)
    if t.shape != a.shape or t.ndim != 1 or len(t) == 0:
        raise ValueError(f"expected equal-length nonempty vectors, got {t.shape} and {a.shape}")
    return t, a


@dataclass(frozen=True)
class ErrorReport:
    """Error summary over an evaluation set of s points."""

    mae: float
    rmse: float
    s: int


def error_report(truth, approx) -> ErrorReport:
    t, a = _paired(truth, approx)
    return ErrorReport(mae=mae(t, a), rmse=rmse(t, a), s=len(t))
