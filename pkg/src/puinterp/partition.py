"""Partition-of-unity blending of local RBF interpolants over a covering."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import cdist

from . import geometry, halton, rbf
from .kdtree import SpatialIndex

# Grid resolutions whose cell count would exceed this are rejected while
# searching for a covering of a very thin domain.
_MAX_GRID_TOTAL = 1e8


class AssembleError(RuntimeError):
    """A local interpolant could not be built; carries the subdomain index."""

    def __init__(self, subdomain, cause):
        self.subdomain = int(subdomain)
        super().__init__(f"subdomain {self.subdomain}: {cause}")


@dataclass(frozen=True)
class Covering:
    """Overlapping balls of equal radius centered on grid cells inside the domain."""

    centers: np.ndarray  # (d, dim) ball centers, in grid order
    radius: float
    per_axis: int        # grid resolution m
    grid_total: int      # m^dim, before dropping cells outside the domain

    def __post_init__(self):
        if len(self.centers) < 1:
            raise ValueError("covering must contain at least one subdomain")
        if self.grid_total != self.per_axis ** self.centers.shape[1]:
            raise ValueError("grid_total must equal per_axis ** dim")
        if abs(self.radius * self.per_axis - math.sqrt(2.0)) > 1e-12:
            raise ValueError("radius must be sqrt(2) / per_axis")

    @property
    def n_subdomains(self) -> int:
        return len(self.centers)


def make_covering(domain: geometry.ConvexDomain, n: int, dim: int,
                  volume_fraction: float | None = None) -> Covering:
    """Choose a covering so each ball holds about 2^(dim+1) of the n data points.

    The grid resolution solves m^dim * rho = n / 2^(dim+1), where rho is the
    fraction of the unit cube occupied by the domain (estimated with a Halton
    probe when not supplied), then grows until at least one grid cell center
    lands inside the domain.
    """
    if dim != domain.dim:
        raise ValueError(f"dim {dim} does not match domain dimension {domain.dim}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if volume_fraction is None:
        probe, frac = geometry.filter_points(domain, halton.halton_points(4096, dim))
        volume_fraction = max(frac, 1.0 / 4096.0)
    if not 0 < volume_fraction <= 1:
        raise ValueError(f"volume_fraction must be in (0, 1], got {volume_fraction}")

    target = n / 2 ** (dim + 1)
    m = max(1, round((target / volume_fraction) ** (1.0 / dim)))
    while True:
        if m ** dim > _MAX_GRID_TOTAL:
            raise ValueError(f"domain too thin: no covering below {_MAX_GRID_TOTAL:g} cells")
        centers, _ = geometry.filter_points(domain, geometry.grid_points(dim, m))
        if len(centers) >= 1:
            break
        m += 1
    return Covering(centers=centers, radius=math.sqrt(2.0) / m,
                    per_axis=m, grid_total=m ** dim)


def wendland_window(t):
    """Shepard localizer (1 - t)^4_+ (4t + 1) on normalized distance t."""
    return rbf.wendland_c2(t, 1.0)


def shepard_weights(x, active) -> np.ndarray:
    """Normalized window weights of the subdomains covering one point.

    `active` is a sequence of (center, radius) pairs whose balls contain x.
    """
    if len(active) == 0:
        raise ValueError("point is not covered by any subdomain")
    p = np.asarray(x, dtype=float)
    w = np.array([
        wendland_window(np.linalg.norm(p - np.asarray(c)) / r) for c, r in active
    ])
    total = w.sum()
    if total <= 0:
        raise ValueError("all covering subdomains have zero window weight at this point")
    return w / total


@dataclass
class PUModel:
    """Assembled partition-of-unity interpolant."""

    covering: Covering
    locals: list  # LocalInterpolant or None per subdomain, in covering order
    data_points: np.ndarray
    data_values: np.ndarray
    kernel: rbf.Kernel
    empty_count: int
    data_index: SpatialIndex = field(repr=False, default=None)
    centers_index: SpatialIndex = field(repr=False, default=None)


def _default_workers(workers):
    if workers is None:
        return os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    return int(workers)


def assemble(domain: geometry.ConvexDomain, points, values, covering: Covering,
             kernel: rbf.Kernel, workers: int | None = 1) -> PUModel:
    """Fit one local RBF interpolant per subdomain.

    Subdomains whose ball contains no data point get no interpolant and are
    counted in empty_count.  Solve failures are re-raised tagged with the
    subdomain index.
    """
    pts = np.asarray(points, dtype=float)
    vals = np.asarray(values, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != domain.dim:
        raise ValueError(f"points have shape {pts.shape}, expected (*, {domain.dim})")
    if vals.shape != (len(pts),):
        raise ValueError("values must match points in length")
    inside = geometry.contains_many(domain, pts)
    if not np.all(inside):
        raise ValueError(f"data point {int(np.argmin(inside))} lies outside the domain")

    workers = _default_workers(workers)
    data_index = SpatialIndex(pts)
    members = data_index.range_query_many(covering.centers, covering.radius)

    def fit_range(lo, hi):
        out = []
        for j in range(lo, hi):
            idx = members[j]
            if len(idx) == 0:
                out.append(None)
                continue
            try:
                out.append(rbf.fit_local(pts[idx], vals[idx], kernel))
            except Exception as exc:
                raise AssembleError(j, exc) from exc
        return out

    d = covering.n_subdomains
    if workers == 1 or d < 2 * workers:
        locals_ = fit_range(0, d)
    else:
        bounds = np.linspace(0, d, workers + 1, dtype=int)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda b: fit_range(*b), zip(bounds[:-1], bounds[1:])))
        locals_ = [loc for chunk in chunks for loc in chunk]

    return PUModel(
        covering=covering,
        locals=locals_,
        data_points=pts,
        data_values=vals,
        kernel=kernel,
        empty_count=sum(loc is None for loc in locals_),
        data_index=data_index,
        centers_index=SpatialIndex(covering.centers),
    )


def evaluate(model: PUModel, points, workers: int | None = 1) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate the blended interpolant at a batch of points.

    Returns the values together with the indices of points not covered by
    any fitted subdomain; those fall back to the value at the nearest data
    point.  Per-subdomain contributions are applied in subdomain order, so
    the output does not depend on the worker count.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != model.data_points.shape[1]:
        raise ValueError(
            f"points have shape {pts.shape}, expected (*, {model.data_points.shape[1]})"
        )
    if len(pts) == 0:
        return np.empty(0), np.empty(0, dtype=np.int64)

    workers = _default_workers(workers)
    cov = model.covering
    neighbors = model.centers_index.range_query_many(pts, cov.radius)
    lengths = np.array([len(nb) for nb in neighbors], dtype=np.int64)

    # invert the point -> subdomains map into per-subdomain point groups
    groups = [None] * cov.n_subdomains
    if lengths.sum() > 0:
        eids = np.repeat(np.arange(len(pts), dtype=np.int64), lengths)
        subs = np.concatenate([nb for nb in neighbors if len(nb)])
        order = np.argsort(subs, kind="stable")
        eids, subs = eids[order], subs[order]
        starts = np.searchsorted(subs, np.arange(cov.n_subdomains + 1))
        for j in range(cov.n_subdomains):
            if starts[j] < starts[j + 1] and model.locals[j] is not None:
                groups[j] = eids[starts[j]:starts[j + 1]]

    def contribution(j):
        grp = groups[j]
        x = pts[grp]
        w = wendland_window(np.linalg.norm(x - cov.centers[j], axis=1) / cov.radius)
        return w, w * rbf.eval_local(model.locals[j], x)

    active = [j for j in range(cov.n_subdomains) if groups[j] is not None]
    if workers == 1 or len(active) < 2 * workers:
        parts = {j: contribution(j) for j in active}
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = dict(zip(active, pool.map(contribution, active)))

    num = np.zeros(len(pts))
    den = np.zeros(len(pts))
    for j in active:
        w, wr = parts[j]
        num[groups[j]] += wr
        den[groups[j]] += w

    covered = den > 0
    values = np.zeros(len(pts))
    values[covered] = num[covered] / den[covered]
    uncovered = np.flatnonzero(~covered)
    if len(uncovered):
        nearest = cdist(pts[uncovered], model.data_points).argmin(axis=1)
        values[uncovered] = model.data_values[nearest]
    return values, uncovered


def max_overlap(model: PUModel, points) -> int:
    """Largest number of subdomain balls containing any one of the points."""
    pts = np.asarray(points, dtype=float)
    neighbors = model.centers_index.range_query_many(pts, model.covering.radius)
    return max((len(nb) for nb in neighbors), default=0)


def fill_distance(data_points, probes, chunk: int = 1024) -> float:
    """max over probes of the distance to the nearest data point."""
    data = np.asarray(data_points, dtype=float)
    prb = np.asarray(probes, dtype=float)
    if data.ndim != 2 or len(data) < 1:
        raise ValueError("data_points must be a nonempty (n, dim) array")
    if prb.ndim != 2 or prb.shape[1] != data.shape[1]:
        raise ValueError("probes must match data_points in dimension")
    worst = 0.0
    for lo in range(0, len(prb), chunk):
        d = cdist(prb[lo:lo + chunk], data).min(axis=1)
        worst = max(worst, float(d.max()))
    return worst
