"""JSON/CSV round trips for every wire format."""

import json

import pytest

from bvselect import serialize as ser
from bvselect.fixtures import cantor_problem, head_removal, scaling_problem
from bvselect.inclusion import solve_inclusion
from bvselect.metric import CompactSet, MetricSpace
from bvselect.multifun import variation_profile
from bvselect.selector import select_bv_right

from conftest import make_rng, random_multifunction, random_set, table_space_from_plane


def test_space_round_trip(rng):
    for sp in (MetricSpace.euclidean(3), MetricSpace.l1seq(2), table_space_from_plane(rng)):
        assert ser.space_from_json(json.loads(json.dumps(ser.space_to_json(sp)))) == sp


def test_set_round_trip(rng):
    for _ in range(10):
        sp = MetricSpace.euclidean(2) if rng.random() < 0.5 else table_space_from_plane(rng)
        X = random_set(rng, sp)
        back = ser.set_from_json(json.loads(json.dumps(ser.set_to_json(X))), sp)
        assert back == X


def test_multifunction_round_trip(rng):
    F = random_multifunction(rng)
    back = ser.multifunction_from_json(json.loads(ser.dumps(ser.multifunction_to_json(F))))
    assert back.grid == F.grid and back.values == F.values


def test_certificate_serialization(rng):
    F = random_multifunction(rng)
    _, cert = select_bv_right(F, F.grid.nodes[0], random_set(rng, F.space))
    obj = ser.certificate_to_json(cert)
    assert obj["all_pass"] is True
    names = {q["name"] for q in obj["inequalities"]}
    assert {"initial_gap", "forward_segment", "backward_segment", "total_bound"} <= names


def test_report_json_and_csv():
    F = head_removal(10).multifunction
    r = variation_profile(F)
    obj = ser.report_to_json(F, r)
    assert obj["jordan"] == pytest.approx(2.1)
    csv_text = ser.report_to_csv(F, r)
    lines = csv_text.strip().splitlines()
    assert lines[0] == "t,v,v_right,v_left"
    assert len(lines) == 1 + len(F.grid)


def test_points_csv():
    F = head_removal(5).multifunction
    text = ser.points_to_csv(F)
    lines = text.strip().splitlines()
    assert lines[0].startswith("t,x1")
    assert len(lines) == 1 + sum(len(v) for v in F.values)


@pytest.mark.parametrize("fix_builder,name", [(scaling_problem, "scaling"), (cantor_problem, "cantor")])
def test_problem_round_trip_solves_identically(fix_builder, name):
    P = fix_builder().problem
    obj = json.loads(ser.dumps(ser.problem_to_json(P, {"name": name})))
    P2 = ser.problem_from_json(obj)
    s1, s2 = solve_inclusion(P), solve_inclusion(P2)
    assert s1.converged == s2.converged
    assert s1.residual == pytest.approx(s2.residual, abs=1e-12)
    assert s1.trajectory.values == s2.trajectory.values


def test_table_map_spec():
    sp = MetricSpace.l1seq(1)
    spec = {
        "name": "table",
        "grid": [0.0, 1.0],
        "images": [[[0.5]], [[1.5]]],
    }
    fmap = ser._builtin_map(sp, spec)
    X = CompactSet(sp, ((9.0,),))
    assert fmap(0.0, X).points == ((0.5,),)
    assert fmap(1.0, X).points == ((1.5,),)


def test_solution_and_iteration_serialization():
    sol = solve_inclusion(scaling_problem().problem)
    obj = ser.solution_to_json(sol)
    assert obj["converged"] is True
    text = ser.iterations_to_csv(sol)
    assert text.splitlines()[0] == "iteration,step,residual"
