"""Shared generators for randomized property tests.

Everything is seeded, so failures reproduce exactly.
"""

import numpy as np
import pytest

from bvselect.metric import CompactSet, MetricSpace
from bvselect.multifun import Grid, GridMultifunction


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def table_space_from_plane(rng: np.random.Generator, n: int = 5) -> MetricSpace:
    """A finite metric space induced by n random points in the plane, so all
    axioms hold by construction."""
    while True:
        pts = rng.uniform(-1.0, 1.0, size=(n, 2))
        m = np.sqrt(((pts[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2))
        if (m + np.eye(n) > 1e-3).all():
            return MetricSpace.from_table(m)


def random_space(rng: np.random.Generator) -> MetricSpace:
    if rng.random() < 0.5:
        return MetricSpace.euclidean(2)
    return table_space_from_plane(rng)


def random_set(rng: np.random.Generator, space: MetricSpace, max_pts: int = 5) -> CompactSet:
    k = int(rng.integers(1, max_pts + 1))
    if space.kind == "table":
        idx = rng.choice(space.dim, size=min(k, space.dim), replace=False)
        return CompactSet(space, tuple(int(i) for i in idx))
    pts = rng.uniform(-1.0, 1.0, size=(k, space.dim))
    return CompactSet(space, tuple(map(tuple, pts)))


def random_multifunction(
    rng: np.random.Generator,
    space: MetricSpace | None = None,
    max_nodes: int = 6,
    max_pts: int = 5,
) -> GridMultifunction:
    if space is None:
        space = random_space(rng)
    n = int(rng.integers(2, max_nodes + 1))
    nodes = np.sort(rng.choice(np.arange(0, 20), size=n, replace=False)).astype(float)
    values = tuple(random_set(rng, space, max_pts) for _ in range(n))
    return GridMultifunction(space, Grid(tuple(nodes)), values)


@pytest.fixture
def rng() -> np.random.Generator:
    return make_rng(20250825)
