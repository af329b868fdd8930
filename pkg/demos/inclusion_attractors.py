"""Solve set inclusions X(t) inside F(t, X(t)) by contraction iteration.

The map here sends a set X to the union of its two affine images
t*X and 1 - t + t*X.  For t < 1/2 this is a contraction in the symmetric
set distance, so iterating from the initial set {0, 1} converges to a
family of self-similar attractors: the classical middle-thirds set at
t = 1/3, thinner Cantor dusts below it, and the full interval at t = 1/2.

Run:  python demos/inclusion_attractors.py
"""

from bvselect.fixtures import cantor_problem, scaling_problem
from bvselect.inclusion import solve_inclusion, validate_problem
from bvselect.multifun import jordan_variation


def main():
    fix = cantor_problem()
    P = fix.problem

    print("validating the contraction hypotheses by sampling...")
    rep = validate_problem(P)
    for c in rep.checks:
        print(f"  {c.condition:32s} ok={c.ok}  worst slack={c.worst_slack:+.2e}")

    print("\niterating to the fixed trajectory...")
    sol = solve_inclusion(P)
    print(f"  converged={sol.converged} after {sol.iterations} iterations, "
          f"residual={sol.residual:.2e}")
    print(f"  total variation {sol.variation_check[0]:.4f} "
          f"<= guaranteed bound {sol.variation_check[1]:.4f}")
    print(f"  effective lattice pitch: {sol.effective_quantization:.1e}")
    print("\n  per-node attractor sizes (points on the quantization lattice):")
    for t, V in zip(P.grid.nodes, sol.trajectory.values):
        print(f"    t={t:<8.4f} |X(t)| = {len(V)}")

    X13 = sol.trajectory.value_at(1.0 / 3.0)
    probes = [0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0]
    hit = [X13.contains((p,), tol=2e-6) for p in probes]
    print(f"\n  middle-thirds probes at t=1/3: {dict(zip(probes, hit))}")

    # contrast: a pure scaling map fixes the origin, so the trajectory
    # started there never moves
    sol2 = solve_inclusion(scaling_problem(x0=0.0).problem)
    print(f"\nscaling map from {{0}}: residual={sol2.residual}, "
          f"V={jordan_variation(sol2.trajectory)}, "
          f"iterations={sol2.iterations}")


if __name__ == "__main__":
    main()
