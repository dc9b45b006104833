"""kd-tree over a fixed point set, specialized for Euclidean ball queries."""

from __future__ import annotations

import numpy as np

DEFAULT_BUCKET = 16


class SpatialIndex:
    """Static kd-tree supporting closed-ball range queries.

    Splits on the axis of largest coordinate spread at the median, breaking
    coordinate ties by original point index, so construction is fully
    determined by the input order.  Distance comparisons use squared radii;
    a point at distance exactly `radius` is returned.
    """

    def __init__(self, points, bucket_size: int = DEFAULT_BUCKET):
        pts = np.array(points, dtype=float, copy=True)
        if pts.ndim != 2 or pts.shape[0] < 1:
            raise ValueError(f"points must be a nonempty (n, dim) array, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points must be finite")
        if bucket_size < 1:
            raise ValueError(f"bucket_size must be >= 1, got {bucket_size}")
        self.points = pts
        self.points.setflags(write=False)
        self.bucket_size = int(bucket_size)
        self.dim = pts.shape[1]

        self._axis, self._split = [], []
        self._left, self._right = [], []
        self._start, self._end = [], []
        perm: list[np.ndarray] = []
        self._build(np.arange(len(pts), dtype=np.int64), perm, 1)
        self.leaf_order = np.concatenate(perm)
        self._axis = np.array(self._axis, dtype=np.int64)
        self._split = np.array(self._split)
        self._left = np.array(self._left, dtype=np.int64)
        self._right = np.array(self._right, dtype=np.int64)
        self._start = np.array(self._start, dtype=np.int64)
        self._end = np.array(self._end, dtype=np.int64)

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def n_nodes(self) -> int:
        return len(self._axis)

    @property
    def depth(self) -> int:
        return self._depth

    def _build(self, subset, perm, level):
        self._depth = max(getattr(self, "_depth", 0), level)
        node = len(self._axis)
        self._axis.append(-1)
        self._split.append(0.0)
        self._left.append(-1)
        self._right.append(-1)
        self._start.append(-1)
        self._end.append(-1)

        if len(subset) <= self.bucket_size:
            offset = sum(len(p) for p in perm)
            perm.append(subset)
            self._start[node] = offset
            self._end[node] = offset + len(subset)
            return node

        coords = self.points[subset]
        axis = int(np.argmax(coords.max(axis=0) - coords.min(axis=0)))
        # Stable median split: sort by (coordinate, original index) so equal
        # coordinates always land on the same side.
        order = np.lexsort((subset, coords[:, axis]))
        half = len(subset) // 2
        split = float(self.points[subset[order[half]], axis])

        self._axis[node] = axis
        self._split[node] = split
        self._left[node] = self._build(subset[order[:half]], perm, level + 1)
        self._right[node] = self._build(subset[order[half:]], perm, level + 1)
        return node

    def range_query(self, center, radius: float) -> np.ndarray:
        """Indices of all points within `radius` of `center`, ascending."""
        idx, _ = self.range_query_counted(center, radius)
        return idx

    def range_query_counted(self, center, radius: float) -> tuple[np.ndarray, int]:
        """Like range_query, also reporting how many tree nodes were visited."""
        c = np.asarray(center, dtype=float).ravel()
        if c.shape != (self.dim,):
            raise ValueError(f"center has shape {c.shape}, expected ({self.dim},)")
        if radius < 0:
            raise ValueError(f"radius must be >= 0, got {radius}")
        r2 = radius * radius
        found = []
        visits = 0
        stack = [0]
        while stack:
            node = stack.pop()
            visits += 1
            if self._axis[node] < 0:
                idx = self.leaf_order[self._start[node]:self._end[node]]
                d2 = ((self.points[idx] - c) ** 2).sum(axis=1)
                hit = idx[d2 <= r2]
                if len(hit):
                    found.append(hit)
            else:
                diff = c[self._axis[node]] - self._split[node]
                if diff <= radius:
                    stack.append(self._left[node])
                if -diff <= radius:
                    stack.append(self._right[node])
        if not found:
            return np.empty(0, dtype=np.int64), visits
        return np.sort(np.concatenate(found)), visits

    def range_query_many(self, centers, radius: float) -> list[np.ndarray]:
        """Batched range_query: one ascending index array per center."""
        cs = np.asarray(centers, dtype=float)
        if cs.ndim == 1:
            cs = cs[None, :]
        if cs.ndim != 2 or cs.shape[1] != self.dim:
            raise ValueError(f"centers have shape {cs.shape}, expected (*, {self.dim})")
        if radius < 0:
            raise ValueError(f"radius must be >= 0, got {radius}")
        nq = len(cs)
        if nq == 0:
            return []
        pair_q: list[np.ndarray] = []
        pair_p: list[np.ndarray] = []
        self._visit_many(0, np.arange(nq, dtype=np.int64), cs, float(radius),
                         radius * radius, pair_q, pair_p)
        if not pair_q:
            return [np.empty(0, dtype=np.int64) for _ in range(nq)]
        qs = np.concatenate(pair_q)
        ps = np.concatenate(pair_p)
        order = np.lexsort((ps, qs))
        qs, ps = qs[order], ps[order]
        bounds = np.searchsorted(qs, np.arange(nq + 1))
        return [ps[bounds[i]:bounds[i + 1]] for i in range(nq)]

    def _visit_many(self, node, qidx, centers, radius, r2, pair_q, pair_p):
        if self._axis[node] < 0:
            idx = self.leaf_order[self._start[node]:self._end[node]]
            d2 = ((centers[qidx, None, :] - self.points[idx][None, :, :]) ** 2).sum(axis=2)
            rows, cols = np.nonzero(d2 <= r2)
            if len(rows):
                pair_q.append(qidx[rows])
                pair_p.append(idx[cols])
            return
        diff = centers[qidx, self._axis[node]] - self._split[node]
        left = qidx[diff <= radius]
        if len(left):
            self._visit_many(self._left[node], left, centers, radius, r2, pair_q, pair_p)
        right = qidx[diff >= -radius]
        if len(right):
            self._visit_many(self._right[node], right, centers, radius, r2, pair_q, pair_p)
