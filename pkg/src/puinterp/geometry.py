"""Convex domains in [0,1]^N described by halfspace intersections."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

# Tolerance for the closed containment test: a point is inside when every
# halfspace inequality holds up to this slack.
CONTAIN_TOL = 1e-12

# Number of sides of the polygon that stands in for the circular cross
# section of the disk and cylinder domains.
CIRCLE_SIDES = 128

BUILTIN_SHAPES = ("triangle", "disk", "hexagon", "pyramid", "cylinder", "hexprism", "cube")


@dataclass(frozen=True)
class Halfspace:
    """One constraint ``normal . x <= offset`` with a unit normal."""

    normal: np.ndarray
    offset: float


@dataclass(frozen=True)
class ConvexDomain:
    """Intersection of halfspaces inside the unit cube.

    The first ``2 * dim`` halfspaces are always the cube facets; any facets
    of the shape itself follow (some may coincide with cube facets, which is
    harmless for containment).
    """

    dim: int
    label: str
    normals: np.ndarray  # (n_halfspaces, dim), unit rows
    offsets: np.ndarray  # (n_halfspaces,)
    interior_point: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError(f"ambient dimension must be >= 2, got {self.dim}")
        norms = np.linalg.norm(self.normals, axis=1)
        if np.any(np.abs(norms - 1.0) > 1e-12):
            raise ValueError("halfspace normals must be unit vectors")
        if self.interior_point is None or not np.all(
            self.normals @ self.interior_point < self.offsets
        ):
            raise ValueError("domain has no strictly interior point")

    @property
    def halfspaces(self) -> tuple[Halfspace, ...]:
        return tuple(
            Halfspace(n.copy(), float(o)) for n, o in zip(self.normals, self.offsets)
        )

    @property
    def shape_halfspaces(self) -> tuple[Halfspace, ...]:
        """Facets beyond the bounding-cube constraints."""
        return self.halfspaces[2 * self.dim:]


def _box_constraints(dim):
    normals = np.zeros((2 * dim, dim))
    offsets = np.empty(2 * dim)
    for axis in range(dim):
        normals[2 * axis, axis] = -1.0
        offsets[2 * axis] = 0.0
        normals[2 * axis + 1, axis] = 1.0
        offsets[2 * axis + 1] = 1.0
    return normals, offsets


def _polygon_constraints(vertices):
    """Halfspaces of a convex polygon given its vertices in CCW order."""
    verts = np.asarray(vertices, dtype=float)
    normals, offsets = [], []
    for a, b in zip(verts, np.roll(verts, -1, axis=0)):
        edge = b - a
        n = np.array([edge[1], -edge[0]])
        n /= np.linalg.norm(n)
        normals.append(n)
        offsets.append(n @ a)
    return np.array(normals), np.array(offsets)


def _ngon_constraints(center, radius, sides):
    """Inscribed regular polygon approximating a circle of given radius."""
    angles = 2.0 * np.pi * np.arange(sides) / sides
    normals = np.column_stack([np.cos(angles), np.sin(angles)])
    offsets = normals @ np.asarray(center) + radius * np.cos(np.pi / sides)
    return normals, offsets


def _extrude(normals2d, offsets2d):
    """Lift 2-d cross-section constraints to a prism over z in [0,1]."""
    side_n = np.column_stack([normals2d, np.zeros(len(normals2d))])
    cap_n = np.array([[0.0, 0.0, -1.0], [0.0, 0.0, 1.0]])
    cap_o = np.array([0.0, 1.0])
    return np.vstack([side_n, cap_n]), np.concatenate([offsets2d, cap_o])


_TRIANGLE_VERTS = [(0.0, 0.0), (1.0, 0.0), (0.5, 1.0)]
_HEXAGON_VERTS = [(0.5, 0.0), (1.0, 0.0), (1.0, 0.5), (0.5, 1.0), (0.0, 1.0), (0.0, 0.5)]


def _pyramid_constraints():
    # Square base on z = 0, apex at (0.5, 0.5, 1).
    slants = np.array(
        [
            [-1.0, 0.0, 0.5],
            [1.0, 0.0, 0.5],
            [0.0, -1.0, 0.5],
            [0.0, 1.0, 0.5],
        ]
    )
    offsets = np.array([0.0, 1.0, 0.0, 1.0])
    norms = np.linalg.norm(slants, axis=1)
    return slants / norms[:, None], offsets / norms


def make_domain(shape: str, dim: int) -> ConvexDomain:
    """Build one of the named benchmark domains.

    2-d shapes: triangle, disk, hexagon.  3-d shapes: pyramid, cylinder,
    hexprism.  The cube is available in any dimension and adds no facets
    beyond the bounding box.
    """
    if shape not in BUILTIN_SHAPES:
        raise ValueError(f"unknown shape {shape!r}; expected one of {BUILTIN_SHAPES}")
    required = {"triangle": 2, "disk": 2, "hexagon": 2,
                "pyramid": 3, "cylinder": 3, "hexprism": 3}.get(shape)
    if required is not None and dim != required:
        raise ValueError(f"shape {shape!r} requires dim={required}, got {dim}")

    box_n, box_o = _box_constraints(dim)
    if shape == "cube":
        extra_n = np.empty((0, dim))
        extra_o = np.empty(0)
        interior = np.full(dim, 0.5)
    elif shape == "triangle":
        extra_n, extra_o = _polygon_constraints(_TRIANGLE_VERTS)
        interior = np.array([0.5, 1.0 / 3.0])
    elif shape == "disk":
        extra_n, extra_o = _ngon_constraints((0.5, 0.5), 0.5, CIRCLE_SIDES)
        interior = np.array([0.5, 0.5])
    elif shape == "hexagon":
        extra_n, extra_o = _polygon_constraints(_HEXAGON_VERTS)
        interior = np.array([0.5, 0.5])
    elif shape == "pyramid":
        extra_n, extra_o = _pyramid_constraints()
        interior = np.array([0.5, 0.5, 0.25])
    elif shape == "cylinder":
        n2, o2 = _ngon_constraints((0.5, 0.5), 0.5, CIRCLE_SIDES)
        extra_n, extra_o = _extrude(n2, o2)
        interior = np.array([0.5, 0.5, 0.5])
    else:  # hexprism
        n2, o2 = _polygon_constraints(_HEXAGON_VERTS)
        extra_n, extra_o = _extrude(n2, o2)
        interior = np.array([0.5, 0.5, 0.5])

    return ConvexDomain(
        dim=dim,
        label=shape,
        normals=np.vstack([box_n, extra_n]),
        offsets=np.concatenate([box_o, extra_o]),
        interior_point=interior,
    )


def contains(domain: ConvexDomain, point) -> bool:
    """Closed containment test for a single point."""
    p = np.asarray(point, dtype=float)
    if p.shape != (domain.dim,):
        raise ValueError(f"point has shape {p.shape}, expected ({domain.dim},)")
    return bool(np.all(domain.normals @ p <= domain.offsets + CONTAIN_TOL))


def contains_many(domain: ConvexDomain, points) -> np.ndarray:
    """Vectorized containment test; returns a boolean mask."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != domain.dim:
        raise ValueError(f"points have shape {pts.shape}, expected (*, {domain.dim})")
    return np.all(pts @ domain.normals.T <= domain.offsets + CONTAIN_TOL, axis=1)


def filter_points(domain: ConvexDomain, points) -> tuple[np.ndarray, float]:
    """Keep the points inside the domain, preserving order.

    Returns the kept points and the kept fraction.
    """
    pts = np.asarray(points, dtype=float)
    mask = contains_many(domain, pts)
    frac = float(mask.mean()) if len(pts) else 0.0
    return pts[mask], frac


def boundary_distance(domain: ConvexDomain, points) -> np.ndarray:
    """Distance from interior points to the nearest facet hyperplane."""
    pts = np.asarray(points, dtype=float)
    slack = domain.offsets - pts @ domain.normals.T
    return slack.min(axis=1)


def grid_points(dim: int, per_axis: int) -> np.ndarray:
    """Cell centers of a uniform per_axis^dim grid on the unit cube.

    Coordinates are (2i - 1) / (2 * per_axis) for i = 1..per_axis, listed in
    lexicographic axis-major order.
    """
    if dim < 1 or per_axis < 1:
        raise ValueError("dim and per_axis must be positive")
    total = per_axis ** dim
    if total > 1e8:
        raise ValueError(f"grid of {per_axis}^{dim} = {total} points is too large")
    axis = (2.0 * np.arange(1, per_axis + 1) - 1.0) / (2.0 * per_axis)
    mesh = np.meshgrid(*([axis] * dim), indexing="ij")
    return np.column_stack([m.ravel() for m in mesh])


def load_domain_file(path: str) -> ConvexDomain:
    """Read a custom convex domain from a halfspace file.

    Format: first line ``N H`` (dimension and halfspace count), then H lines
    of N+1 reals ``n_1 ... n_N offset`` each meaning ``n . x <= offset``.
    Rows are normalized to unit normals; the bounding-cube constraints are
    always added.  Raises ValueError with a line number on malformed input
    and when the resulting domain has an empty interior.
    """
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    rows = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        raise ValueError(f"{path}: empty domain file")

    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"{path}: line {lineno}: expected 'N H', got {header!r}")
    try:
        dim, count = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"{path}: line {lineno}: expected two integers, got {header!r}") from None
    if not 2 <= dim <= 6:
        raise ValueError(f"{path}: line {lineno}: dimension {dim} outside 2..6")
    if count < 0:
        raise ValueError(f"{path}: line {lineno}: negative halfspace count {count}")
    if len(rows) - 1 != count:
        raise ValueError(
            f"{path}: expected {count} halfspace lines after the header, found {len(rows) - 1}"
        )

    normals, offsets = [], []
    for lineno, line in rows[1:]:
        fields = line.split()
        if len(fields) != dim + 1:
            raise ValueError(
                f"{path}: line {lineno}: expected {dim + 1} values, got {len(fields)}"
            )
        try:
            vals = [float(f) for f in fields]
        except ValueError:
            raise ValueError(f"{path}: line {lineno}: non-numeric value") from None
        n = np.array(vals[:dim])
        norm = np.linalg.norm(n)
        if norm < 1e-14:
            raise ValueError(f"{path}: line {lineno}: zero-length normal")
        normals.append(n / norm)
        offsets.append(vals[dim] / norm)

    box_n, box_o = _box_constraints(dim)
    all_n = np.vstack([box_n] + [np.array(normals)]) if normals else box_n
    all_o = np.concatenate([box_o, np.array(offsets)]) if offsets else box_o

    interior = _chebyshev_center(all_n, all_o)
    if interior is None:
        raise ValueError(f"{path}: halfspaces leave no interior volume inside the unit cube")

    import os

    label = "hull:" + os.path.basename(path)
    return ConvexDomain(dim=dim, label=label, normals=all_n, offsets=all_o,
                        interior_point=interior)


def _chebyshev_center(normals, offsets):
    """Deepest interior point of the intersection, or None when empty."""
    h, dim = normals.shape
    # Variables (x, t): maximize t subject to n.x + t <= offset.
    a_ub = np.column_stack([normals, np.ones(h)])
    c = np.zeros(dim + 1)
    c[-1] = -1.0
    bounds = [(None, None)] * dim + [(None, 1.0)]
    res = linprog(c, A_ub=a_ub, b_ub=offsets, bounds=bounds, method="highs")
    if not res.success or res.x[-1] <= 1e-9:
        return None
    return res.x[:-1]
