"""Walk through the variation functionals on the bundled step maps.

The two directional variations measure one-sided set growth: a map whose
values only gain points has zero forward variation, one that only loses
points has zero backward variation, and the symmetric (Jordan) variation
is sandwiched between the larger of the two and their sum.

Run:  python demos/variation_profiles.py
"""

from bvselect.fixtures import growing_union, head_removal, unit_ladder
from bvselect.multifun import (
    canonical_majorant,
    check_majorant,
    is_nondecreasing,
    is_nonincreasing,
    variation_profile,
)


def describe(name, F):
    r = variation_profile(F)
    print(f"\n=== {name} ({len(F.grid)} nodes) ===")
    print(f"  jordan variation   V  = {r.jordan:.6f}")
    print(f"  forward variation  V+ = {r.right:.6f}")
    print(f"  backward variation V- = {r.left:.6f}")
    print(f"  sandwich: max(V+,V-) <= V <= V+ + V-  ->  "
          f"{max(r.right, r.left):.4f} <= {r.jordan:.4f} <= {r.right + r.left:.4f}")
    print(f"  nondecreasing={is_nondecreasing(F)}  nonincreasing={is_nonincreasing(F)}")
    print(f"  modulus sequence (increasing to V): "
          f"{[round(x, 4) for x in r.modulus[:5]]}{'...' if len(r.modulus) > 5 else ''}")
    phi = canonical_majorant(F)
    print(f"  canonical majorant profile: {[round(x, 4) for x in phi[:6]]}"
          f"{'...' if len(phi) > 6 else ''}  valid={check_majorant(F, phi)}")


def main():
    # drops an isolated point after the first node: pure shrinkage
    describe("head removal (trunc=100)", head_removal(100).multifunction)

    # gains a coefficient block at each node: pure growth, yet the
    # backward variation diverges with the harmonic series
    describe("growing union (30 steps)", growing_union(steps=30).multifunction)

    # the ladder of unit vectors: every backward step costs exactly 2
    describe("unit ladder (m=10)", unit_ladder(10).multifunction)


if __name__ == "__main__":
    main()
