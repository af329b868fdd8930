"""Selector constructions: every certificate must pass on randomized
instances, per-edge contraction of the projection chain, and a candidate
that is not a selector must fail verification."""

import pytest

from bvselect.metric import CompactSet, MetricSpace, excess, hausdorff
from bvselect.multifun import (
    Grid,
    GridMultifunction,
    dir_variation_right,
    jordan_variation,
)
from bvselect.selector import (
    select_bv_left,
    select_bv_right,
    select_bv_two_sided,
    select_single_valued,
    verify_certificate,
)

from conftest import make_rng, random_multifunction, random_set


def pick_anchor(rng, F):
    i0 = int(rng.integers(len(F.grid)))
    return F.grid.nodes[i0], i0


def test_right_selector_certificates_pass():
    rng = make_rng(101)
    for _ in range(60):
        F = random_multifunction(rng)
        t0, _ = pick_anchor(rng, F)
        X0 = random_set(rng, F.space)
        G, cert = select_bv_right(F, t0, X0)
        assert cert.all_pass, cert
        assert cert.direction == "right"


def test_left_selector_certificates_pass():
    rng = make_rng(103)
    for _ in range(60):
        F = random_multifunction(rng)
        t0, _ = pick_anchor(rng, F)
        X0 = random_set(rng, F.space)
        G, cert = select_bv_left(F, t0, X0)
        assert cert.all_pass, cert


def test_two_sided_selector_bounded_by_total_variation():
    rng = make_rng(107)
    for _ in range(60):
        F = random_multifunction(rng)
        t0, _ = pick_anchor(rng, F)
        X0 = random_set(rng, F.space)
        G, cert = select_bv_two_sided(F, t0, X0)
        assert cert.all_pass, cert
        assert jordan_variation(G) <= jordan_variation(F) + 1e-9


def test_single_valued_certificates_pass():
    rng = make_rng(109)
    for _ in range(40):
        F = random_multifunction(rng)
        t0, i0 = pick_anchor(rng, F)
        x0 = random_set(rng, F.space, 1).points[0]
        direction = ("right", "left", "two_sided")[int(rng.integers(3))]
        pts, cert = select_single_valued(F, t0, x0, direction)
        assert cert.all_pass, cert
        assert len(pts) == len(F.grid)
        for p, V in zip(pts, F.values):
            assert V.contains(p, tol=1e-9)


def test_forward_chain_edge_bound():
    # each projection step moves by at most the forward excess of the data
    rng = make_rng(113)
    for _ in range(40):
        F = random_multifunction(rng)
        X0 = random_set(rng, F.space)
        t0 = F.grid.nodes[0]
        G, _ = select_bv_right(F, t0, X0)
        for i in range(len(F.grid) - 1):
            lhs = hausdorff(G.values[i], G.values[i + 1])
            rhs = excess(F.values[i], F.values[i + 1])
            assert lhs <= rhs + 1e-9


def test_right_selector_total_bound_decomposition():
    # V(G) - jump <= forward-variation before the anchor + after the anchor
    rng = make_rng(127)
    for _ in range(40):
        F = random_multifunction(rng)
        t0, i0 = pick_anchor(rng, F)
        X0 = random_set(rng, F.space)
        G, cert = select_bv_right(F, t0, X0)
        a, b = F.grid.nodes[0], F.grid.nodes[-1]
        before = (
            dir_variation_right(F, a, F.grid.nodes[i0 - 1]) if i0 > 0 else 0.0
        )
        assert jordan_variation(G) - cert.jump <= before + dir_variation_right(
            F, t0, b
        ) + 1e-9


def test_selector_values_are_subsets(rng):
    F = random_multifunction(rng)
    X0 = random_set(rng, F.space)
    G, _ = select_bv_right(F, F.grid.nodes[0], X0)
    for g, f in zip(G.values, F.values):
        assert excess(g, f) <= 1e-12


def test_non_selector_candidate_fails_verification():
    sp = MetricSpace.euclidean(1)
    F = GridMultifunction(
        sp,
        Grid((0.0, 1.0)),
        (CompactSet(sp, ((0.0,), (1.0,))), CompactSet(sp, ((2.0,),))),
    )
    bad = GridMultifunction(
        sp,
        Grid((0.0, 1.0)),
        (CompactSet(sp, ((9.0,),)), CompactSet(sp, ((2.0,),))),
    )
    cert = verify_certificate(F, bad, 0.0, F.values[0], "right")
    assert not cert.containment_ok and not cert.all_pass


def test_high_variation_candidate_fails_total_bound():
    # a genuine selector that zig-zags can exceed the guaranteed bound
    sp = MetricSpace.euclidean(1)
    V = CompactSet(sp, ((0.0,), (10.0,)))
    F = GridMultifunction(sp, Grid((0.0, 1.0, 2.0)), (V, V, V))
    zig = GridMultifunction(
        sp,
        Grid((0.0, 1.0, 2.0)),
        (
            CompactSet(sp, ((0.0,),)),
            CompactSet(sp, ((10.0,),)),
            CompactSet(sp, ((0.0,),)),
        ),
    )
    cert = verify_certificate(F, zig, 0.0, CompactSet(sp, ((0.0,),)), "right")
    assert cert.containment_ok and not cert.all_pass


def test_certificate_requires_shared_grid(rng):
    F = random_multifunction(rng)
    other = GridMultifunction(
        F.space, Grid(tuple(t + 100.0 for t in F.grid.nodes)), F.values
    )
    with pytest.raises(ValueError):
        verify_certificate(F, other, F.grid.nodes[0], F.values[0])


def test_anchor_must_be_grid_node(rng):
    F = random_multifunction(rng)
    with pytest.raises(ValueError):
        select_bv_right(F, F.grid.nodes[0] - 0.123, random_set(rng, F.space))
