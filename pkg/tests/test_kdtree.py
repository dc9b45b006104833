"""Tests for the kd-tree range queries against brute force."""

import math

import numpy as np
import pytest

from puinterp.kdtree import SpatialIndex


def brute_force(points, center, radius):
    """Reference implementation with the same squared-distance comparison."""
    d2 = ((points - np.asarray(center)) ** 2).sum(axis=1)
    return np.flatnonzero(d2 <= radius * radius)


def test_matches_brute_force_randomized():
    rng = np.random.default_rng(2024)
    for trial in range(10):
        n = int(rng.integers(1, 2000))
        dim = int(rng.integers(2, 4))
        pts = rng.random((n, dim))
        tree = SpatialIndex(pts)
        for _ in range(30):
            center = rng.random(dim) * 1.2 - 0.1
            radius = float(rng.random() * 0.4)
            expect = brute_force(pts, center, radius)
            got, visits = tree.range_query_counted(center, radius)
            np.testing.assert_array_equal(got, expect)
            assert visits <= n


def test_batch_matches_single():
    rng = np.random.default_rng(5)
    pts = rng.random((1500, 2))
    tree = SpatialIndex(pts)
    centers = rng.random((200, 2))
    batch = tree.range_query_many(centers, 0.15)
    assert len(batch) == 200
    for c, got in zip(centers, batch):
        np.testing.assert_array_equal(got, tree.range_query(c, 0.15))


def test_results_sorted_ascending():
    rng = np.random.default_rng(8)
    pts = rng.random((800, 3))
    tree = SpatialIndex(pts)
    idx = tree.range_query(np.full(3, 0.5), 0.4)
    assert np.all(np.diff(idx) > 0)


def test_boundary_point_included():
    # distances representable exactly: the query ball just reaches the point
    pts = np.array([[0.75, 0.5], [0.5, 0.75], [0.25, 0.5], [0.1, 0.1]])
    tree = SpatialIndex(pts, bucket_size=1)
    idx = tree.range_query([0.5, 0.5], 0.25)
    np.testing.assert_array_equal(idx, [0, 1, 2])


def test_zero_radius():
    pts = np.array([[0.2, 0.2], [0.4, 0.4]])
    tree = SpatialIndex(pts)
    np.testing.assert_array_equal(tree.range_query([0.2, 0.2], 0.0), [0])
    assert len(tree.range_query([0.3, 0.3], 0.0)) == 0


def test_leaf_order_is_permutation():
    rng = np.random.default_rng(12)
    for n in (1, 16, 17, 100, 1000):
        tree = SpatialIndex(rng.random((n, 2)))
        np.testing.assert_array_equal(np.sort(tree.leaf_order), np.arange(n))


def test_duplicate_coordinates_terminate():
    pts = np.tile([[0.5, 0.5]], (100, 1))
    tree = SpatialIndex(pts)
    np.testing.assert_array_equal(tree.range_query([0.5, 0.5], 0.01), np.arange(100))
    np.testing.assert_array_equal(np.sort(tree.leaf_order), np.arange(100))


def test_build_is_deterministic():
    rng = np.random.default_rng(77)
    pts = rng.random((512, 3))
    a, b = SpatialIndex(pts), SpatialIndex(pts)
    np.testing.assert_array_equal(a.leaf_order, b.leaf_order)
    np.testing.assert_array_equal(a._split, b._split)
    np.testing.assert_array_equal(a._axis, b._axis)


def test_depth_bound():
    rng = np.random.default_rng(3)
    for n in (50, 1000, 20000):
        tree = SpatialIndex(rng.random((n, 2)))
        assert tree.depth <= 2 * math.log2(n) + 4


def test_node_count_and_bucket():
    tree = SpatialIndex(np.random.default_rng(1).random((10, 2)))
    assert tree.n_nodes == 1  # everything fits one bucket of 16
    tree2 = SpatialIndex(np.random.default_rng(1).random((17, 2)))
    assert tree2.n_nodes == 3


def test_input_validation():
    with pytest.raises(ValueError):
        SpatialIndex(np.empty((0, 2)))
    with pytest.raises(ValueError):
        SpatialIndex(np.array([[np.nan, 0.0]]))
    tree = SpatialIndex(np.array([[0.1, 0.2]]))
    with pytest.raises(ValueError):
        tree.range_query([0.1, 0.2], -0.5)
    with pytest.raises(ValueError):
        tree.range_query([0.1, 0.2, 0.3], 0.5)


def test_points_are_read_only():
    tree = SpatialIndex(np.array([[0.1, 0.2], [0.3, 0.4]]))
    with pytest.raises(ValueError):
        tree.points[0, 0] = 9.0
