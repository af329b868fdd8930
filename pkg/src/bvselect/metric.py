"""Metric spaces, finite compact sets, and the asymmetric distance primitives.

A point is a tuple of floats (coordinate spaces) or a plain int (table
spaces).  Sets are finite, nonempty, deduplicated, and kept in a canonical
order so that identical inputs always produce identical outputs downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import cdist

DEFAULT_TOL = 1e-9

Point = tuple[float, ...] | int


class SpaceMismatchError(ValueError):
    """Operands live in different metric spaces."""


@dataclass(frozen=True)
class MetricSpace:
    """A distance oracle: Euclidean R^dim, R^dim with the 1-norm, or an
    explicit symmetric distance table validated for the metric axioms."""

    kind: str  # "euclidean" | "l1seq" | "table"
    dim: int = 0
    matrix: tuple[tuple[float, ...], ...] = ()

    def __post_init__(self):
        if self.kind in ("euclidean", "l1seq"):
            if self.dim < 1:
                raise ValueError("coordinate space needs dim >= 1")
        elif self.kind == "table":
            _validate_table(np.asarray(self.matrix, dtype=float))
            object.__setattr__(self, "dim", len(self.matrix))
        else:
            raise ValueError(f"unknown metric space kind {self.kind!r}")

    @classmethod
    def euclidean(cls, dim: int) -> "MetricSpace":
        return cls("euclidean", dim)

    @classmethod
    def l1seq(cls, dim: int) -> "MetricSpace":
        """Summable-sequence space truncated to the first `dim` coordinates."""
        return cls("l1seq", dim)

    @classmethod
    def from_table(cls, matrix) -> "MetricSpace":
        rows = tuple(tuple(float(v) for v in row) for row in matrix)
        return cls("table", matrix=rows)

    def dist(self, x: Point, y: Point) -> float:
        if self.kind == "table":
            return self.matrix[x][y]
        a = np.asarray(x, dtype=float)
        b = np.asarray(y, dtype=float)
        if self.kind == "euclidean":
            return float(np.linalg.norm(a - b))
        return float(np.abs(a - b).sum())

    def check_point(self, p: Point) -> Point:
        if self.kind == "table":
            i = int(p)
            if not 0 <= i < self.dim:
                raise ValueError(f"table index {i} out of range [0, {self.dim})")
            return i
        coords = tuple(float(v) for v in p)
        if len(coords) != self.dim:
            raise ValueError(f"point has {len(coords)} coordinates, space has dim {self.dim}")
        return coords


def _validate_table(m: np.ndarray, tol: float = DEFAULT_TOL) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError("distance table must be a nonempty square matrix")
    n = m.shape[0]
    if (m < -tol).any():
        raise ValueError("distance table has negative entries")
    if np.abs(np.diag(m)).max() > tol:
        raise ValueError("distance table has nonzero diagonal")
    if np.abs(m - m.T).max() > tol:
        raise ValueError("distance table is not symmetric")
    off = m + np.eye(n)
    if (off <= tol).sum() > n:
        raise ValueError("distinct table points closer than tolerance")
    # triangle inequality, O(n^3) but tables are desk scale
    for k in range(n):
        if (m > m[:, k, None] + m[None, k, :] + tol).any():
            raise ValueError("distance table violates the triangle inequality")


class CompactSet:
    """A nonempty finite point set, deduplicated within `tol` and stored in
    canonical (lexicographic / ascending) order.

    Accepts an (n, dim) array or any iterable of points.  Large coordinate
    sets are canonicalized with array ops (merging exact duplicates and
    chains of order-adjacent near-duplicates) and keep their data as an
    array; the `points` tuple is materialized on first access.  Treat
    instances as immutable."""

    __slots__ = ("space", "tol", "_points", "_coords")

    def __init__(self, space: MetricSpace, points=(), tol: float = DEFAULT_TOL):
        self.space = space
        self.tol = tol
        self._points = None
        self._coords = None
        if len(points) == 0:
            raise ValueError("a compact set must be nonempty")
        if space.kind != "table" and len(points) > 64:
            arr = np.asarray(points, dtype=float)
            if arr.ndim != 2 or arr.shape[1] != space.dim:
                raise ValueError("points do not match the space dimension")
            if arr.shape[1] == 1:
                arr = np.sort(arr[:, 0])[:, None]
            else:
                arr = arr[np.lexsort(arr.T[::-1])]
            diff = np.diff(arr, axis=0)
            if space.kind == "euclidean":
                gaps = np.sqrt((diff * diff).sum(axis=1))
            else:
                gaps = np.abs(diff).sum(axis=1)
            keep = np.empty(len(arr), dtype=bool)
            keep[0] = True
            keep[1:] = gaps > tol
            self._coords = arr[keep]
        else:
            pts = sorted(space.check_point(p) for p in points)
            kept = []
            for p in pts:
                if all(space.dist(p, q) > tol for q in kept):
                    kept.append(p)
            self._points = tuple(kept)

    @property
    def points(self) -> tuple:
        if self._points is None:
            arr = self._coords
            cols = [arr[:, j].tolist() for j in range(arr.shape[1])]
            self._points = tuple(zip(*cols))
        return self._points

    @property
    def coords(self) -> np.ndarray:
        """(n, dim) float array for coordinate spaces, (n,) int array for tables."""
        if self._coords is None:
            dtype = int if self.space.kind == "table" else float
            self._coords = np.asarray(self._points, dtype=dtype)
        return self._coords

    def __len__(self) -> int:
        if self._coords is not None:
            return len(self._coords)
        return len(self._points)

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompactSet):
            return NotImplemented
        return self.space == other.space and np.array_equal(self.coords, other.coords)

    def __hash__(self) -> int:
        return hash((self.space, self.points))

    def __repr__(self) -> str:
        return f"CompactSet({len(self)} points, {self.space.kind})"

    def contains(self, x: Point, tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        return dist_point_set(x, self) <= tol

    def issubset(self, other: "CompactSet", tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        return excess(self, other) <= tol


def _check_same_space(X: CompactSet, Y: CompactSet) -> None:
    if X.space != Y.space:
        raise SpaceMismatchError("operands belong to different metric spaces")


def _cross_dist(X: CompactSet, Y: CompactSet) -> np.ndarray:
    """All pairwise distances as an (|X|, |Y|) matrix."""
    sp = X.space
    if sp.kind == "table":
        m = np.asarray(sp.matrix, dtype=float)
        return m[np.ix_(X.coords, Y.coords)]
    metric = "euclidean" if sp.kind == "euclidean" else "cityblock"
    return cdist(X.coords, Y.coords, metric)


def _is_sorted_1d(X: CompactSet) -> bool:
    return X.space.kind in ("euclidean", "l1seq") and X.space.dim == 1


def _min_dists_to(X: CompactSet, Y: CompactSet) -> np.ndarray:
    """d(x, Y) for every x in X."""
    if _is_sorted_1d(X) and (len(X) > 64 or len(Y) > 64):
        # canonical order is ascending, so 1-d sets are already sorted
        xs = X.coords[:, 0]
        ys = Y.coords[:, 0]
        idx = np.searchsorted(ys, xs)
        left = ys[np.clip(idx - 1, 0, len(ys) - 1)]
        right = ys[np.clip(idx, 0, len(ys) - 1)]
        return np.minimum(np.abs(xs - left), np.abs(xs - right))
    return _cross_dist(X, Y).min(axis=1)


def dist_point_set(x: Point, Y: CompactSet) -> float:
    """Distance from a point to a finite set: the minimum over elements."""
    x = Y.space.check_point(x)
    return float(min(Y.space.dist(x, y) for y in Y))


def excess(X: CompactSet, Y: CompactSet) -> float:
    """Asymmetric excess of X over Y: sup over x in X of d(x, Y).

    Zero exactly when X is contained in Y (up to the dedup tolerance)."""
    _check_same_space(X, Y)
    if X is Y:
        return 0.0
    return float(_min_dists_to(X, Y).max())


def hausdorff(X: CompactSet, Y: CompactSet) -> float:
    """Symmetric set distance: the larger of the two excesses."""
    _check_same_space(X, Y)
    return max(excess(X, Y), excess(Y, X))


def project_onto(X: CompactSet, Y: CompactSet, tol: float | None = None) -> CompactSet:
    """Points of Y that attain the distance from some point of X.

    The result is a nonempty subset of Y with hausdorff(X, result)
    bounded by excess(X, Y); all minimizers within `tol` are kept."""
    _check_same_space(X, Y)
    tol = X.tol if tol is None else tol
    d = _cross_dist(X, Y)
    near = d <= d.min(axis=1)[:, None] + tol
    keep = [y for j, y in enumerate(Y.points) if near[:, j].any()]
    return CompactSet(Y.space, tuple(keep), tol=Y.tol)
