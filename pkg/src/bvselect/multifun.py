"""Grid multifunctions and their variation functionals.

A grid multifunction is a step map from a strictly increasing finite grid
into finite compact sets.  On a finite grid every variational supremum is
attained by the finest partition, so all quantities here are plain sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .metric import (
    DEFAULT_TOL,
    CompactSet,
    MetricSpace,
    SpaceMismatchError,
    excess,
    hausdorff,
)


@dataclass(frozen=True)
class Grid:
    """Strictly increasing finite list of real nodes."""

    nodes: tuple[float, ...]

    def __post_init__(self):
        nodes = tuple(float(t) for t in self.nodes)
        if not nodes:
            raise ValueError("grid must be nonempty")
        if any(b <= a for a, b in zip(nodes, nodes[1:])):
            raise ValueError("grid nodes must be strictly increasing")
        object.__setattr__(self, "nodes", nodes)

    def __len__(self) -> int:
        return len(self.nodes)

    def index_of(self, t: float, tol: float = DEFAULT_TOL) -> int:
        for i, node in enumerate(self.nodes):
            if abs(node - t) <= tol:
                return i
        raise ValueError(f"{t} is not a grid node")

    def indices_in(self, lo: float, hi: float, tol: float = DEFAULT_TOL) -> list[int]:
        return [i for i, t in enumerate(self.nodes) if lo - tol <= t <= hi + tol]


@dataclass(frozen=True)
class GridMultifunction:
    """One compact set per grid node, all in the same metric space."""

    space: MetricSpace
    grid: Grid
    values: tuple[CompactSet, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if len(values) != len(self.grid):
            raise ValueError("need exactly one value per grid node")
        for v in values:
            if v.space != self.space:
                raise SpaceMismatchError("all values must share the multifunction's space")
        object.__setattr__(self, "values", values)

    def value_at(self, t: float, tol: float = DEFAULT_TOL) -> CompactSet:
        return self.values[self.grid.index_of(t, tol)]

    def restrict(self, indices: list[int]) -> "GridMultifunction":
        return GridMultifunction(
            self.space,
            Grid(tuple(self.grid.nodes[i] for i in indices)),
            tuple(self.values[i] for i in indices),
        )

    def reversed(self) -> "GridMultifunction":
        """Mirror t -> -t; swaps the roles of the two excess directions."""
        return GridMultifunction(
            self.space,
            Grid(tuple(-t for t in reversed(self.grid.nodes))),
            tuple(reversed(self.values)),
        )


@dataclass
class VariationReport:
    """All variation functionals of one multifunction, per node and total."""

    jordan: float
    right: float
    left: float
    v_profile: list[float]
    v_right_profile: list[float]
    v_left_profile: list[float]
    modulus: list[float] = field(default_factory=list)


def _step_sums(F: GridMultifunction, indices: list[int]):
    """(symmetric, right-excess, left-excess) increments over consecutive
    selected nodes."""
    sym, right, left = [], [], []
    for i, j in zip(indices, indices[1:]):
        a, b = F.values[i], F.values[j]
        e_right = excess(a, b)
        e_left = excess(b, a)
        sym.append(max(e_right, e_left))
        right.append(e_right)
        left.append(e_left)
    return sym, right, left


def _full_range(F: GridMultifunction):
    return list(range(len(F.grid)))


def jordan_variation(F: GridMultifunction, lo: float | None = None, hi: float | None = None) -> float:
    """Total variation with respect to the symmetric set distance; sums the
    consecutive increments over nodes inside [lo, hi]."""
    idx = _select(F, lo, hi)
    sym, _, _ = _step_sums(F, idx)
    return float(sum(sym))


def dir_variation_right(F: GridMultifunction, lo: float | None = None, hi: float | None = None) -> float:
    """Sum of excesses of each value over its successor's value."""
    idx = _select(F, lo, hi)
    _, right, _ = _step_sums(F, idx)
    return float(sum(right))


def dir_variation_left(F: GridMultifunction, lo: float | None = None, hi: float | None = None) -> float:
    """Sum of excesses of each value over its predecessor's value."""
    idx = _select(F, lo, hi)
    _, _, left = _step_sums(F, idx)
    return float(sum(left))


def _select(F: GridMultifunction, lo, hi) -> list[int]:
    if lo is None and hi is None:
        return _full_range(F)
    lo = F.grid.nodes[0] if lo is None else lo
    hi = F.grid.nodes[-1] if hi is None else hi
    if lo > hi:
        raise ValueError("need lo <= hi")
    return F.grid.indices_in(lo, hi)


def variation_profile(F: GridMultifunction, with_modulus: bool = True) -> VariationReport:
    """Prefix variations at every node, plus totals and the modulus sequence."""
    idx = _full_range(F)
    sym, right, left = _step_sums(F, idx)

    def prefix(steps):
        out = [0.0]
        for s in steps:
            out.append(out[-1] + s)
        return out

    m = len(F.grid) - 1
    report = VariationReport(
        jordan=float(sum(sym)),
        right=float(sum(right)),
        left=float(sum(left)),
        v_profile=prefix(sym),
        v_right_profile=prefix(right),
        v_left_profile=prefix(left),
    )
    if with_modulus and m >= 1:
        report.modulus = [modulus_of_variation(F, k) for k in range(1, m + 1)]
    return report


def modulus_of_variation(F: GridMultifunction, k: int) -> float:
    """Largest total symmetric increment over k interleaved node pairs
    s1 <= t1 <= s2 <= ... <= sk <= tk, by dynamic programming."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = len(F.grid)
    if n < 2:
        return 0.0
    dh = [[hausdorff(F.values[i], F.values[j]) for j in range(n)] for i in range(n)]
    # best[i]: optimum with all chosen pairs inside nodes[0..i]
    best = [0.0] * n
    for _ in range(k):
        nxt = [0.0] * n
        for i in range(n):
            # close a pair (s, i) for some s <= i; earlier pairs fit in [0..s]
            cand = max(best[s] + dh[s][i] for s in range(i + 1))
            nxt[i] = max(nxt[i - 1], cand) if i > 0 else cand
        best = nxt
    return float(best[n - 1])


def is_nondecreasing(F: GridMultifunction, tol: float = DEFAULT_TOL) -> bool:
    """Consecutive containment F(t_i) within F(t_{i+1}) at every step."""
    return all(
        excess(F.values[i], F.values[i + 1]) <= tol for i in range(len(F.grid) - 1)
    )


def is_nonincreasing(F: GridMultifunction, tol: float = DEFAULT_TOL) -> bool:
    return all(
        excess(F.values[i + 1], F.values[i]) <= tol for i in range(len(F.grid) - 1)
    )


def canonical_majorant(F: GridMultifunction) -> list[float]:
    """The right-variation prefix profile: the canonical nondecreasing
    function whose increments dominate all forward excesses."""
    idx = _full_range(F)
    _, right, _ = _step_sums(F, idx)
    out = [0.0]
    for s in right:
        out.append(out[-1] + s)
    return out


def check_majorant(
    F: GridMultifunction,
    phi: list[float],
    side: str = "right",
    tol: float = DEFAULT_TOL,
) -> bool:
    """True iff phi is nondecreasing and phi(t) - phi(s) dominates the
    excess for every node pair s <= t (all pairs, not just consecutive)."""
    if len(phi) != len(F.grid):
        raise ValueError("majorant length must match the grid")
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    if any(b < a - tol for a, b in zip(phi, phi[1:])):
        return False
    n = len(F.grid)
    for i in range(n):
        for j in range(i + 1, n):
            if side == "right":
                e = excess(F.values[i], F.values[j])
            else:
                e = excess(F.values[j], F.values[i])
            if e > phi[j] - phi[i] + tol:
                return False
    return True


def jump_at(F: GridMultifunction, t0: float, side: str, tol: float = DEFAULT_TOL) -> float:
    """Symmetric gap to the adjacent node on the given side; zero at the
    extreme node of that side."""
    i = F.grid.index_of(t0, tol)
    if side == "left":
        if i == 0:
            return 0.0
        return hausdorff(F.values[i - 1], F.values[i])
    if side == "right":
        if i == len(F.grid) - 1:
            return 0.0
        return hausdorff(F.values[i], F.values[i + 1])
    raise ValueError("side must be 'left' or 'right'")
