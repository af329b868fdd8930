"""Fixed-set solver for inclusions X(t) inside F(t, X(t)) on a finite grid.

Iterates X_{n+1}(t) = snap(F(t, X_n(t))) per node, with the anchor node
re-projected from the prescribed initial set each round.  Under the
contraction hypothesis the per-node steps shrink geometrically, so the
iteration stops once the largest step falls below the tolerance (or the
effective lattice pitch, whichever is coarser).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .metric import CompactSet, MetricSpace, excess, hausdorff, project_onto
from .multifun import Grid, GridMultifunction, jordan_variation

MapOracle = Callable[[float, CompactSet], CompactSet]


@dataclass
class InclusionProblem:
    space: MetricSpace
    grid: Grid
    map: MapOracle
    mu: float
    phi: tuple[float, ...]
    K: tuple[CompactSet, ...]
    X0: CompactSet
    quantization: float = 1e-6
    max_iter: int = 100
    tol: float = 1e-6
    cardinality_cap: int = 4096
    k_margin: float = 0.0  # covering slack of the sampled bound sets

    def __post_init__(self):
        if not 0.0 <= self.mu < 1.0:
            raise ValueError("contraction constant must lie in [0, 1)")
        if any(b < a for a, b in zip(self.phi, self.phi[1:])):
            raise ValueError("majorant values must be nondecreasing")
        if len(self.phi) != len(self.grid) or len(self.K) != len(self.grid):
            raise ValueError("phi and K need one entry per grid node")
        if self.quantization <= 0 or self.tol <= 0 or self.max_iter < 1:
            raise ValueError("quantization, tol, and max_iter must be positive")

    def phi_variation(self) -> float:
        return float(self.phi[-1] - self.phi[0])


@dataclass
class ValidationCheck:
    condition: str
    worst_slack: float  # positive = margin, negative = violation
    ok: bool
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list[ValidationCheck]
    all_ok: bool


@dataclass
class InclusionSolution:
    trajectory: GridMultifunction
    iterations: int
    converged: bool
    residual: float
    step_history: list[float]
    per_node_steps: list[list[float]]
    variation_check: tuple[float, float]
    initial_check: tuple[float, float]
    effective_quantization: float
    iteration_residuals: list[float] = field(default_factory=list)


def _snap(space: MetricSpace, X: CompactSet, pitch: float, cap: int) -> tuple[CompactSet, float]:
    """Round coordinates to a lattice of the given pitch and dedup; coarsen
    the pitch (x2) until the set fits under the cardinality cap."""
    if space.kind == "table":
        return X, pitch
    while True:
        # distinct lattice points sit >= pitch apart, so the default
        # dedup tolerance already merges exact rounding collisions
        snapped = np.round(X.coords / pitch) * pitch
        Y = CompactSet(space, snapped)
        if len(Y) <= cap:
            return Y, pitch
        pitch *= 2


def validate_problem(P: InclusionProblem, samples: int = 20, seed: int = 0) -> ValidationReport:
    """Sampling check of the three solvability conditions.

    Draws random subsets of the per-node bound sets; a pass is evidence,
    a reported violation is a proof.  Slack is (rhs - lhs), worst case."""
    rng = np.random.default_rng(seed)
    nodes = P.grid.nodes

    def draw(i: int) -> CompactSet:
        pool = P.K[i].points
        k = int(rng.integers(1, min(len(pool), 6) + 1))
        idx = rng.choice(len(pool), size=k, replace=False)
        return CompactSet(P.space, tuple(pool[j] for j in idx))

    worst_a = worst_b = worst_c = np.inf
    for _ in range(samples):
        X = draw(int(rng.integers(len(nodes))))
        images = [P.map(t, X) for t in nodes]
        # (a): forward excess dominated by the majorant increments
        for i in range(len(nodes)):
            for j in range(i + 1, len(nodes)):
                slack = (P.phi[j] - P.phi[i]) - excess(images[i], images[j])
                worst_a = min(worst_a, slack)
        # (c): images stay inside the sampled bound sets
        for i, img in enumerate(images):
            worst_c = min(worst_c, P.k_margin - excess(img, P.K[i]))
        # (b): per-node contraction against a second sample
        Y = draw(int(rng.integers(len(nodes))))
        for i, t in enumerate(nodes):
            lhs = excess(images[i], P.map(t, Y))
            worst_b = min(worst_b, P.mu * hausdorff(X, Y) - lhs)

    tol = P.tol
    checks = [
        ValidationCheck("majorant_dominates_time_excess", float(worst_a), worst_a >= -tol),
        ValidationCheck("state_contraction", float(worst_b), worst_b >= -tol),
        ValidationCheck("images_inside_bound", float(worst_c), worst_c >= -tol),
    ]
    return ValidationReport(checks, all(c.ok for c in checks))


def solve_inclusion(P: InclusionProblem) -> InclusionSolution:
    """Iterate the per-node set map to a fixed trajectory.

    Each round evaluates the map at every node on the current trajectory,
    snaps the images to the quantization lattice, and re-projects the
    anchor node from the prescribed initial set (so the anchor keeps the
    initial-condition guarantee).  Raises if an image escapes its bound
    set by more than the declared covering margin."""
    nodes = P.grid.nodes
    current = [P.X0 for _ in nodes]
    pitch = [P.quantization] * len(nodes)  # coarsened independently per node
    step_history: list[float] = []
    per_node_steps: list[list[float]] = []
    iteration_residuals: list[float] = []
    converged = False
    iterations = 0

    for _ in range(P.max_iter):
        iterations += 1
        images = []
        for i, t in enumerate(nodes):
            img = P.map(t, current[i])
            img, pitch[i] = _snap(P.space, img, pitch[i], P.cardinality_cap)
            if excess(img, P.K[i]) > P.k_margin + P.tol + pitch[i]:
                raise ValueError(f"map image escapes the bound set at t={t}")
            images.append(img)
        iteration_residuals.append(
            max(excess(current[i], images[i]) for i in range(len(nodes)))
        )
        nxt = [project_onto(P.X0, images[0])] + images[1:]
        steps = [hausdorff(nxt[i], current[i]) for i in range(len(nodes))]
        per_node_steps.append(steps)
        step_history.append(max(steps))
        current = nxt
        if all(s <= max(P.tol, p) for s, p in zip(steps, pitch)):
            converged = True
            break

    X = GridMultifunction(P.space, P.grid, tuple(current))
    residual = max(
        excess(current[i], P.map(t, current[i])) for i, t in enumerate(nodes)
    )
    return InclusionSolution(
        trajectory=X,
        iterations=iterations,
        converged=converged,
        residual=float(residual),
        step_history=step_history,
        per_node_steps=per_node_steps,
        variation_check=(jordan_variation(X), P.phi_variation() / (1.0 - P.mu)),
        initial_check=(
            hausdorff(P.X0, current[0]),
            excess(P.X0, P.map(nodes[0], current[0])),
        ),
        effective_quantization=max(pitch),
        iteration_residuals=iteration_residuals,
    )


def residual(F_map: MapOracle, X: GridMultifunction) -> float:
    """Worst-node excess of the trajectory over its own image; zero (up to
    tolerance) certifies the inclusion."""
    return float(
        max(
            excess(X.values[i], F_map(t, X.values[i]))
            for i, t in enumerate(X.grid.nodes)
        )
    )
