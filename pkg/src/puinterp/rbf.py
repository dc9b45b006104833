"""Compactly supported Wendland C2 kernel and local RBF interpolants."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import lapack
from scipy.spatial.distance import cdist, pdist, squareform

logger = logging.getLogger(__name__)

# Two data sites closer than this are treated as duplicates: the kernel
# matrix would be numerically singular.
DUPLICATE_TOL = 1e-14


class DuplicatePointsError(ValueError):
    """Two interpolation sites coincide (up to DUPLICATE_TOL)."""

    def __init__(self, pair):
        self.pair = tuple(int(i) for i in pair)
        super().__init__(f"duplicate interpolation points at indices {self.pair}")


class FactorizationError(RuntimeError):
    """Cholesky factorization hit a non-positive pivot."""

    def __init__(self, pivot):
        self.pivot = int(pivot)
        super().__init__(f"kernel matrix is not positive definite (pivot {self.pivot})")


@dataclass(frozen=True)
class Kernel:
    """Wendland C2 kernel with support radius 1/shape."""

    shape: float

    def __post_init__(self):
        if not self.shape > 0:
            raise ValueError(f"shape parameter must be positive, got {self.shape}")

    @property
    def support_radius(self) -> float:
        return 1.0 / self.shape


def wendland_c2(r, shape: float):
    """phi(r) = (1 - shape*r)^4_+ (4*shape*r + 1); scalar in, scalar out."""
    if not shape > 0:
        raise ValueError(f"shape parameter must be positive, got {shape}")
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 0):
        raise ValueError("distances must be nonnegative")
    t = np.minimum(shape * arr, 1.0)
    out = (1.0 - t) ** 4 * (4.0 * t + 1.0)
    return float(out) if np.isscalar(r) else out


def kernel_matrix(points, kernel: Kernel) -> np.ndarray:
    """Symmetric collocation matrix phi(|x_i - x_k|) over one site set.

    Each pairwise distance is computed once, so the result is exactly
    symmetric with a unit diagonal.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or len(pts) < 1:
        raise ValueError(f"points must be a nonempty (n, dim) array, got shape {pts.shape}")
    if len(pts) == 1:
        return np.array([[1.0]])
    d = pdist(pts)
    if d.min() < DUPLICATE_TOL:
        iu = np.triu_indices(len(pts), 1)
        k = int(np.argmin(d))
        raise DuplicatePointsError((iu[0][k], iu[1][k]))
    mat = squareform(wendland_c2(d, kernel.shape))
    np.fill_diagonal(mat, 1.0)
    return mat


def solve_coefficients(matrix: np.ndarray, values: np.ndarray,
                       jitter: float = 0.0) -> np.ndarray:
    """Solve the SPD collocation system by Cholesky factorization.

    Nearly flat kernels make these systems badly conditioned, so the
    triangular solve is followed by a few steps of iterative refinement,
    which keeps the residual near machine precision.  A nonzero `jitter`
    adds that multiple of the identity as a rescue for borderline systems;
    it trades away exact interpolation and is therefore logged.
    """
    a = np.asarray(matrix, dtype=float)
    f = np.asarray(values, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if f.shape != (a.shape[0],):
        raise ValueError(f"values have shape {f.shape}, expected ({a.shape[0]},)")
    if jitter:
        logger.warning(
            "solving with diagonal jitter %g: interpolation is no longer exact", jitter
        )
        a = a + jitter * np.eye(len(a))

    chol, info = lapack.dpotrf(a, lower=1)
    if info > 0:
        raise FactorizationError(info - 1)
    if info < 0:
        raise ValueError(f"illegal value in factorization argument {-info}")

    coeff, _ = lapack.dpotrs(chol, f, lower=1)
    scale = max(1.0, float(np.abs(f).max()))
    for _ in range(4):
        resid = f - a @ coeff
        if np.abs(resid).max() <= 1e-13 * scale:
            break
        update, _ = lapack.dpotrs(chol, resid, lower=1)
        coeff = coeff + update
    return coeff


@dataclass(frozen=True)
class LocalInterpolant:
    """RBF expansion sum_k c_k phi(|x - x_k|) over one site set."""

    centers: np.ndarray
    coefficients: np.ndarray
    kernel: Kernel

    def __post_init__(self):
        if len(self.centers) != len(self.coefficients) or len(self.centers) < 1:
            raise ValueError("centers and coefficients must have equal nonzero length")


def fit_local(points, values, kernel: Kernel) -> LocalInterpolant:
    """Interpolate (points, values) with the given kernel."""
    mat = kernel_matrix(points, kernel)
    coeff = solve_coefficients(mat, np.asarray(values, dtype=float))
    return LocalInterpolant(np.asarray(points, dtype=float), coeff, kernel)


def eval_local(interp: LocalInterpolant, x) -> np.ndarray | float:
    """Evaluate a local interpolant at one point or a batch of points."""
    pts = np.asarray(x, dtype=float)
    single = pts.ndim == 1
    if single:
        pts = pts[None, :]
    if pts.shape[1] != interp.centers.shape[1]:
        raise ValueError(
            f"evaluation points have dim {pts.shape[1]}, interpolant has {interp.centers.shape[1]}"
        )
    vals = wendland_c2(cdist(pts, interp.centers), interp.kernel.shape) @ interp.coefficients
    return float(vals[0]) if single else vals
