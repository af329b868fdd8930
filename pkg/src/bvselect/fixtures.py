"""Ready-made truncated instances with closed-form expected values.

Each builder returns a Fixture bundling the object under test with the
numbers it should produce, so tests and the command line replay the same
scenarios.  Sequence-space instances live in R^dim with the 1-norm, dim
chosen so every vector involved fits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .inclusion import InclusionProblem
from .metric import CompactSet, MetricSpace
from .multifun import Grid, GridMultifunction


@dataclass
class Fixture:
    name: str
    multifunction: GridMultifunction | None = None
    problem: InclusionProblem | None = None
    expected: dict = field(default_factory=dict)
    seeds: dict = field(default_factory=dict)


def _unit(dim: int, n: int, scale: float = 1.0) -> tuple[float, ...]:
    """scale * n-th basis vector (1-based index)."""
    v = [0.0] * dim
    v[n - 1] = scale
    return tuple(v)


def head_removal(trunc: int = 100) -> Fixture:
    """Two-valued nonincreasing step map: the isolated head point u_1 is
    dropped after the first node, leaving only the shrinking tail
    (1 + 1/n) u_n for 2 <= n <= trunc."""
    if trunc < 2:
        raise ValueError("trunc must be >= 2")
    space = MetricSpace.l1seq(trunc)
    alpha = lambda n: 1.0 + 1.0 / n
    tail = [_unit(trunc, n, alpha(n)) for n in range(2, trunc + 1)]
    X = CompactSet(space, tuple([_unit(trunc, 1)] + tail))
    Y = CompactSet(space, tuple(tail))
    F = GridMultifunction(space, Grid((0.0, 0.5, 1.0)), (X, Y, Y))
    v_right = 1.0 + alpha(trunc)
    return Fixture(
        name="head_removal",
        multifunction=F,
        expected={
            "v_right": v_right,
            "v_left": 0.0,
            "jordan": v_right,
            "v_right_limit": 2.0,
        },
    )


def tail_swap(alpha: float = 1.0, N: int = 2, trunc: int = 10) -> Fixture:
    """Step map that swaps a compact head set for its non-head tail at the
    last node; coefficients a_n = alpha (n+1)/n decrease strictly in
    magnitude."""
    if alpha == 0 or N < 2 or trunc <= N:
        raise ValueError("need alpha != 0, N >= 2, trunc > N")
    space = MetricSpace.l1seq(trunc)
    a = lambda n: alpha * (n + 1) / n
    X = CompactSet(space, tuple(_unit(trunc, n, a(n)) for n in range(1, N + 1)))
    Y = CompactSet(space, tuple(_unit(trunc, n, a(n)) for n in range(N + 1, trunc + 1)))
    F = GridMultifunction(space, Grid((0.0, 0.5, 1.0)), (X, X, Y))
    return Fixture(
        name="tail_swap",
        multifunction=F,
        expected={
            "v_right": abs(a(1)) + abs(a(trunc)),
            "v_left": abs(a(N + 1)) + abs(a(N)),
            "projection_target": (_unit(trunc, N, a(N)),),
        },
        seeds={
            "left_anchor_seed": CompactSet(space, (_unit(trunc, N + 1, a(N + 1)),)),
        },
    )


def growing_union(N: int = 1, steps: int = 30) -> Fixture:
    """Nondecreasing step map: the value gains a block of N coefficients
    1/i at each grid node tau_k = 1 - 2^{-k}; the final node repeats the
    largest set, standing in for the infinite union at truncation."""
    if N < 1 or steps < 2:
        raise ValueError("need N >= 1 and steps >= 2")
    dim = (steps + 1) * N
    space = MetricSpace.l1seq(dim)

    def level(j: int) -> CompactSet:
        return CompactSet(
            space, tuple(_unit(dim, i, 1.0 / i) for i in range(1, j * N + 1))
        )

    nodes = [0.0] + [1.0 - 2.0 ** (-k) for k in range(1, steps + 1)] + [1.0]
    values = [level(k + 1) for k in range(steps + 1)] + [level(steps + 1)]
    F = GridMultifunction(space, Grid(tuple(nodes)), tuple(values))
    alpha = lambda n: 1.0 / n
    v_left = sum(alpha(n * N + 1) + alpha(n * N) for n in range(1, steps + 1))
    return Fixture(
        name="growing_union",
        multifunction=F,
        expected={"v_right": 0.0, "v_left": v_left},
        seeds={"first_level": level(1)},
    )


def growing_union_anchor(fix: Fixture, n: int) -> tuple[float, CompactSet, float]:
    """Interior anchor data for the growing-union map: anchor node tau_n,
    the seed made of all points the first level lacks, and the provable
    lower bound on the gap to any nonempty subset of the first level."""
    F = fix.multifunction
    t0 = F.grid.nodes[n]
    level1 = fix.seeds["first_level"]
    anchor_value = F.values[n]
    extra = [p for p in anchor_value.points if not level1.contains(p)]
    X0 = CompactSet(F.space, tuple(extra))
    N = len(level1)  # points per block
    bound = 1.0 / ((n + 1) * N)
    return t0, X0, bound


def unit_ladder(m: int = 10) -> Fixture:
    """Nondecreasing ladder of unit vectors: the value at node n is the
    first n basis vectors, so every backward step has excess 2."""
    if m < 2:
        raise ValueError("need m >= 2")
    space = MetricSpace.l1seq(m)
    values = tuple(
        CompactSet(space, tuple(_unit(m, i) for i in range(1, n + 1)))
        for n in range(1, m + 1)
    )
    F = GridMultifunction(space, Grid(tuple(float(n) for n in range(1, m + 1))), values)
    return Fixture(
        name="unit_ladder",
        multifunction=F,
        expected={"v_right": 0.0, "v_left": 2.0 * (m - 1), "jordan": 2.0 * (m - 1)},
    )


DEFAULT_CANTOR_GRID = (0.0, 0.1, 0.2, 1.0 / 3.0, 0.4, 0.5)


def cantor_map(t: float, X: CompactSet) -> CompactSet:
    """Union of the two affine copies t*x and 1 - t + t*x of the input."""
    xs = X.coords[:, 0]
    pts = np.concatenate([t * xs, 1.0 - t + t * xs])
    return CompactSet(X.space, pts[:, None])


def cantor_problem(
    grid_nodes=DEFAULT_CANTOR_GRID,
    quantization: float = 1e-6,
    tol: float = 1e-6,
    max_iter: int = 40,
    cardinality_cap: int = 1 << 17,
) -> Fixture:
    """Inclusion problem whose solution interpolates Cantor-type attractors;
    the classical middle-thirds construction sits at the node t = 1/3."""
    nodes = tuple(float(t) for t in grid_nodes)
    if nodes[0] != 0.0 or nodes[-1] > 0.5:
        raise ValueError("grid must start at 0 and stay within [0, 1/2]")
    space = MetricSpace.l1seq(1)
    bound_sample = CompactSet(space, tuple((x,) for x in np.linspace(0.0, 1.0, 1001)))
    problem = InclusionProblem(
        space=space,
        grid=Grid(nodes),
        map=cantor_map,
        mu=0.5,
        phi=nodes,
        K=tuple(bound_sample for _ in nodes),
        X0=CompactSet(space, ((0.0,), (1.0,))),
        quantization=quantization,
        max_iter=max_iter,
        tol=tol,
        cardinality_cap=cardinality_cap,
        k_margin=6e-4,  # covering radius of the 1001-point bound sample
    )
    return Fixture(
        name="cantor",
        problem=problem,
        expected={
            "anchor_set": ((0.0,), (1.0,)),
            "variation_bound": 1.0,
            "probe_node": 1.0 / 3.0,
            "probe_points": (0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0),
        },
    )


def scaling_problem(
    grid_nodes=(0.0, 0.1, 0.2, 0.3, 0.4, 0.5),
    x0: float = 0.0,
    quantization: float = 1e-6,
    tol: float = 1e-6,
    max_iter: int = 40,
) -> Fixture:
    """Inclusion problem for the pure scaling map t*X on [0, 1/2]; the
    origin is a fixed point, so the trajectory from {0} is constant."""
    nodes = tuple(float(t) for t in grid_nodes)
    if nodes[-1] >= 1.0:
        raise ValueError("scaling factors must stay below 1")
    space = MetricSpace.l1seq(1)
    base = np.linspace(0.0, 1.0, 101)

    def scale_map(t: float, X: CompactSet) -> CompactSet:
        return CompactSet(space, tuple((float(t * x),) for x in X.coords[:, 0]))

    problem = InclusionProblem(
        space=space,
        grid=Grid(nodes),
        map=scale_map,
        mu=max(nodes),
        phi=nodes,  # phi(t) = t * max norm over the bound set = t
        K=tuple(
            CompactSet(space, tuple((float(t * x),) for x in base) if t > 0 else ((0.0,),))
            for t in nodes
        ),
        X0=CompactSet(space, ((float(x0),),)),
        quantization=quantization,
        max_iter=max_iter,
        tol=tol,
        k_margin=6e-3,  # covering radius of the scaled 101-point samples
    )
    return Fixture(
        name="scaling",
        problem=problem,
        expected={"fixed_point": ((0.0,),), "variation": 0.0, "residual": 0.0},
    )


BUILDERS = {
    "head_removal": head_removal,
    "tail_swap": tail_swap,
    "growing_union": growing_union,
    "unit_ladder": unit_ladder,
    "cantor": cantor_problem,
    "scaling": scaling_problem,
}


def make_fixture(name: str, **params) -> Fixture:
    if name not in BUILDERS:
        raise ValueError(f"unknown fixture {name!r}; known: {sorted(BUILDERS)}")
    return BUILDERS[name](**params)
