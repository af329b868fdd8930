"""Command-line behaviour, including the exit-code contract:
0 success, 2 malformed input, 3 strict certificate failure, 4 non-convergence."""

import json

import pytest

from bvselect import cli
from bvselect import serialize as ser
from bvselect.fixtures import head_removal, scaling_problem
from bvselect.selector import SelectorCertificate


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


@pytest.fixture
def mf_file(tmp_path):
    F = head_removal(10).multifunction
    return write(tmp_path, "F.json", ser.multifunction_to_json(F)), F


def test_excess_and_hausdorff(tmp_path, capsys):
    a = write(tmp_path, "a.json", [[0, 0], [1, 0]])
    b = write(tmp_path, "b.json", [[0, 1]])
    assert cli.main(["excess", a, b]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert float(out[0]) == pytest.approx(2**0.5)
    assert float(out[1]) == pytest.approx(1.0)
    assert cli.main(["hausdorff", a, b]) == 0
    assert float(capsys.readouterr().out.strip()) == pytest.approx(2**0.5)


def test_variation_json_and_csv(mf_file, capsys):
    path, F = mf_file
    assert cli.main(["variation", path]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["jordan"] == pytest.approx(2.1)
    assert cli.main(["variation", path, "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "t,v,v_right,v_left"
    assert cli.main(["variation", path, "--modulus", "2"]) == 0
    assert len(json.loads(capsys.readouterr().out)["modulus"]) == 2


def test_variation_range(mf_file, capsys):
    path, F = mf_file
    assert cli.main(["variation", path, "--range", "0.5", "1.0"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["jordan"] == 0.0


def test_select_strict_pass(mf_file, tmp_path, capsys):
    path, F = mf_file
    seed = write(tmp_path, "seed.json", ser.set_to_json(F.values[0]))
    assert cli.main(["select", path, "--t0", "0.0", "--seed", seed, "--strict"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["certificate"]["all_pass"] is True


def test_select_single(mf_file, capsys):
    path, F = mf_file
    x0 = json.dumps(list(F.values[0].points[0]))
    assert cli.main(["select", path, "--t0", "0.0", "--single", x0]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert len(obj["selector"]["points"]) == len(F.grid)


def test_select_requires_seed_or_point(mf_file, capsys):
    path, _ = mf_file
    assert cli.main(["select", path, "--t0", "0.0"]) == 2


def test_malformed_json_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["variation", str(bad)]) == 2
    assert cli.main(["excess", str(bad), str(bad)]) == 2


def test_missing_file_exits_2(capsys):
    assert cli.main(["variation", "/nonexistent.json"]) == 2


def test_strict_certificate_failure_exits_3(mf_file, tmp_path, capsys, monkeypatch):
    path, F = mf_file
    seed = write(tmp_path, "seed.json", ser.set_to_json(F.values[0]))

    def forced_fail(F, t0, X0):
        from bvselect.selector import select_bv_right as real

        G, cert = real(F, t0, X0)
        bad = SelectorCertificate(
            direction=cert.direction,
            containment_ok=False,
            initial_gap=cert.initial_gap,
            forward_segment=cert.forward_segment,
            backward_segment=cert.backward_segment,
            jump=cert.jump,
            total_bound=cert.total_bound,
            inequalities=cert.inequalities,
            all_pass=False,
        )
        return G, bad

    monkeypatch.setattr(cli, "select_bv_right", forced_fail)
    assert cli.main(["select", path, "--t0", "0.0", "--seed", seed, "--strict"]) == 3
    # without --strict the result is still emitted with exit 0
    assert cli.main(["select", path, "--t0", "0.0", "--seed", seed]) == 0


def test_solve_inclusion_and_exit_4(tmp_path, capsys):
    P = scaling_problem(x0=1.0).problem
    path = write(tmp_path, "P.json", ser.problem_to_json(P, {"name": "scaling"}))
    out = tmp_path / "sol.json"
    itcsv = tmp_path / "it.csv"
    assert cli.main(
        ["solve-inclusion", path, "--out", str(out), "--iterations-csv", str(itcsv)]
    ) == 0
    sol = json.loads(out.read_text())
    assert sol["converged"] is True
    assert itcsv.read_text().splitlines()[0] == "iteration,step,residual"
    assert cli.main(["solve-inclusion", path, "--max-iter", "1"]) == 4


def test_fixtures_emit(tmp_path, capsys):
    assert cli.main(["fixtures", "emit", "head_removal", "trunc=10"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["name"] == "head_removal"
    assert obj["expected"]["v_right"] == pytest.approx(2.1)
    assert "multifunction" in obj
    assert cli.main(["fixtures", "emit", "scaling"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert "problem" in obj and obj["problem"]["map"] == {"name": "scaling"}
    assert cli.main(["fixtures", "emit", "nope"]) == 2
    assert cli.main(["fixtures", "emit", "head_removal", "trunc"]) == 2


def test_plot_data_from_solution(tmp_path, capsys):
    P = scaling_problem().problem
    path = write(tmp_path, "P.json", ser.problem_to_json(P, {"name": "scaling"}))
    out = tmp_path / "sol.json"
    assert cli.main(["solve-inclusion", path, "--out", str(out)]) == 0
    assert cli.main(["plot-data", str(out)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "t,x1"
    assert len(lines) == 1 + len(P.grid)
