"""Greedy metric-projection construction of bounded-variation selectors,
with certificates that recompute every guaranteed inequality from scratch.

The forward pass projects the seed onto the first value, then each result
onto the next value.  An interior anchor splits the grid into two passes;
the unavoidable gap between them is reported as the `jump` term.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .metric import (
    DEFAULT_TOL,
    CompactSet,
    Point,
    dist_point_set,
    excess,
    hausdorff,
    project_onto,
)
from .multifun import (
    Grid,
    GridMultifunction,
    dir_variation_left,
    dir_variation_right,
    jordan_variation,
)


@dataclass
class Inequality:
    name: str
    lhs: float
    rhs: float
    ok: bool


@dataclass
class SelectorCertificate:
    direction: str
    containment_ok: bool
    initial_gap: tuple[float, float]
    forward_segment: tuple[float, float]
    backward_segment: tuple[float, float]
    jump: float
    total_bound: tuple[float, float]
    inequalities: list[Inequality] = field(default_factory=list)
    all_pass: bool = False


def _as_multifunction(F: GridMultifunction, points: list[Point]) -> GridMultifunction:
    values = tuple(CompactSet(F.space, (p,)) for p in points)
    return GridMultifunction(F.space, F.grid, values)


def verify_certificate(
    F: GridMultifunction,
    G: GridMultifunction,
    t0: float,
    X0: CompactSet,
    direction: str = "right",
    tol: float = DEFAULT_TOL,
    x0: Point | None = None,
) -> SelectorCertificate:
    """Recompute the selector inequalities for an arbitrary candidate G.

    Independent of how G was built: uses only the variation functionals and
    the distance primitives.  `x0` switches the initial gap to the
    point-to-set form used by single-valued selectors."""
    if F.grid != G.grid:
        raise ValueError("selector and multifunction must share the grid")
    nodes = F.grid.nodes
    i0 = F.grid.index_of(t0, tol)
    a, b = nodes[0], nodes[-1]

    containment_ok = all(
        excess(G.values[i], F.values[i]) <= tol for i in range(len(nodes))
    )

    if x0 is not None:
        init = (dist_point_set(x0, G.values[i0]), dist_point_set(x0, F.values[i0]))
    else:
        init = (hausdorff(X0, G.values[i0]), excess(X0, F.values[i0]))

    ineqs = [Inequality("initial_gap", init[0], init[1], init[0] <= init[1] + tol)]

    if direction == "right":
        fwd = (jordan_variation(G, t0, b), dir_variation_right(F, t0, b))
        if i0 > 0:
            s0 = nodes[i0 - 1]
            bwd = (jordan_variation(G, a, s0), dir_variation_right(F, a, s0))
            jump = hausdorff(G.values[i0 - 1], G.values[i0])
        else:
            bwd, jump = (0.0, 0.0), 0.0
        total = (jordan_variation(G) - jump, bwd[1] + fwd[1])
    elif direction == "left":
        fwd = (jordan_variation(G, a, t0), dir_variation_left(F, a, t0))
        if i0 < len(nodes) - 1:
            s0 = nodes[i0 + 1]
            bwd = (jordan_variation(G, s0, b), dir_variation_left(F, s0, b))
            jump = hausdorff(G.values[i0], G.values[i0 + 1])
        else:
            bwd, jump = (0.0, 0.0), 0.0
        total = (jordan_variation(G) - jump, bwd[1] + fwd[1])
    elif direction == "two_sided":
        fwd = (jordan_variation(G, t0, b), dir_variation_right(F, t0, b))
        bwd = (jordan_variation(G, a, t0), dir_variation_left(F, a, t0))
        jump = 0.0
        total = (jordan_variation(G), fwd[1] + bwd[1])
        ineqs.append(
            Inequality(
                "total_vs_jordan",
                total[0],
                jordan_variation(F),
                total[0] <= jordan_variation(F) + tol,
            )
        )
    else:
        raise ValueError("direction must be 'right', 'left', or 'two_sided'")

    ineqs.append(Inequality("forward_segment", fwd[0], fwd[1], fwd[0] <= fwd[1] + tol))
    ineqs.append(Inequality("backward_segment", bwd[0], bwd[1], bwd[0] <= bwd[1] + tol))
    ineqs.append(Inequality("total_bound", total[0], total[1], total[0] <= total[1] + tol))

    cert = SelectorCertificate(
        direction=direction,
        containment_ok=containment_ok,
        initial_gap=init,
        forward_segment=fwd,
        backward_segment=bwd,
        jump=jump,
        total_bound=total,
        inequalities=ineqs,
    )
    cert.all_pass = containment_ok and all(q.ok for q in ineqs)
    return cert


def _chain(seed: CompactSet, values, tol: float) -> list[CompactSet]:
    out = [project_onto(seed, values[0], tol=tol)]
    for Y in values[1:]:
        out.append(project_onto(out[-1], Y, tol=tol))
    return out


def select_bv_right(
    F: GridMultifunction,
    t0: float,
    X0: CompactSet,
    seed_before: CompactSet | None = None,
    tol: float = DEFAULT_TOL,
) -> tuple[GridMultifunction, SelectorCertificate]:
    """Forward greedy projection pass anchored at t0; nodes before t0 get
    their own forward pass from the first node, seeded with `seed_before`
    (defaults to X0)."""
    i0 = F.grid.index_of(t0, tol)
    fwd = _chain(X0, F.values[i0:], tol)
    if i0 > 0:
        seed = X0 if seed_before is None else seed_before
        bwd = _chain(seed, F.values[:i0], tol)
    else:
        bwd = []
    G = GridMultifunction(F.space, F.grid, tuple(bwd + fwd))
    return G, verify_certificate(F, G, t0, X0, "right", tol)


def select_bv_left(
    F: GridMultifunction,
    t0: float,
    X0: CompactSet,
    seed_before: CompactSet | None = None,
    tol: float = DEFAULT_TOL,
) -> tuple[GridMultifunction, SelectorCertificate]:
    """Mirror of the forward construction under t -> -t."""
    Grev, _ = select_bv_right(F.reversed(), -t0, X0, seed_before, tol)
    G = Grev.reversed()
    return G, verify_certificate(F, G, t0, X0, "left", tol)


def select_bv_two_sided(
    F: GridMultifunction,
    t0: float,
    X0: CompactSet,
    tol: float = DEFAULT_TOL,
) -> tuple[GridMultifunction, SelectorCertificate]:
    """Forward pass on nodes >= t0 seeded with X0, backward pass on nodes
    <= t0 seeded with the anchor value, spliced at t0."""
    i0 = F.grid.index_of(t0, tol)
    fwd = _chain(X0, F.values[i0:], tol)
    if i0 > 0:
        rev = _chain(fwd[0], tuple(reversed(F.values[: i0 + 1])), tol)
        bwd = list(reversed(rev))[:-1]  # drop the duplicate anchor value
    else:
        bwd = []
    G = GridMultifunction(F.space, F.grid, tuple(bwd + fwd))
    return G, verify_certificate(F, G, t0, X0, "two_sided", tol)


def _nearest_point(x: Point, Y: CompactSet, tol: float) -> Point:
    best = min(Y.space.dist(x, y) for y in Y)
    # deterministic tie-break: canonically smallest attaining point
    return min(y for y in Y if Y.space.dist(x, y) <= best + tol)


def _point_chain(seed: Point, values, tol: float) -> list[Point]:
    out = [_nearest_point(seed, values[0], tol)]
    for Y in values[1:]:
        out.append(_nearest_point(out[-1], Y, tol))
    return out


def select_single_valued(
    F: GridMultifunction,
    t0: float,
    x0: Point,
    direction: str = "right",
    tol: float = DEFAULT_TOL,
) -> tuple[list[Point], SelectorCertificate]:
    """Single-valued variant: each projection is replaced by one nearest
    point, so the result is one point of F(t) per node."""
    x0 = F.space.check_point(x0)
    i0 = F.grid.index_of(t0, tol)
    if direction == "right":
        fwd = _point_chain(x0, F.values[i0:], tol)
        bwd = _point_chain(x0, F.values[:i0], tol) if i0 > 0 else []
        pts = bwd + fwd
    elif direction == "left":
        fwd = _point_chain(x0, tuple(reversed(F.values[: i0 + 1])), tol)
        bwd = (
            _point_chain(x0, tuple(reversed(F.values[i0 + 1 :])), tol)
            if i0 < len(F.grid) - 1
            else []
        )
        pts = list(reversed(fwd)) + list(reversed(bwd))
    elif direction == "two_sided":
        fwd = _point_chain(x0, F.values[i0:], tol)
        if i0 > 0:
            rev = _point_chain(fwd[0], tuple(reversed(F.values[: i0 + 1])), tol)
            pts = list(reversed(rev))[:-1] + fwd
        else:
            pts = fwd
    else:
        raise ValueError("direction must be 'right', 'left', or 'two_sided'")
    G = _as_multifunction(F, pts)
    X0 = CompactSet(F.space, (x0,))
    cert = verify_certificate(F, G, t0, X0, direction, tol, x0=x0)
    return pts, cert
