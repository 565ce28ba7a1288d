"""Shared generators for randomized tests."""

import numpy as np
import pytest
from scipy.sparse.csgraph import shortest_path

from coarsepd import Diagram, canonicalize, validate_metric


def random_diagram(rng, max_size=5, scale=10.0, size=None):
    """Random diagram with points in a [0, 2*scale] box above the diagonal."""
    if size is None:
        size = int(rng.integers(0, max_size + 1))
    pts = []
    for _ in range(size):
        b = float(rng.uniform(0.0, scale))
        d = b + float(rng.uniform(1e-3, scale))
        pts.append((b, d))
    return canonicalize(pts)


def random_connected_metric(rng, n):
    """Shortest-path metric of a random connected weighted graph on n points."""
    weights = np.full((n, n), np.inf)
    np.fill_diagonal(weights, 0.0)
    order = rng.permutation(n)
    for k in range(1, n):
        a = order[k]
        b = order[int(rng.integers(0, k))]
        w = float(rng.uniform(0.5, 2.0))
        weights[a, b] = weights[b, a] = w
    extra = int(rng.integers(0, n))
    for _ in range(extra):
        a, b = rng.integers(0, n, size=2)
        if a != b:
            w = float(rng.uniform(0.5, 2.0))
            weights[a, b] = weights[b, a] = min(weights[a, b], w)
    dist = shortest_path(np.where(np.isinf(weights), 0.0, weights), method="D",
                         directed=False, unweighted=False)
    return validate_metric(dist)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
