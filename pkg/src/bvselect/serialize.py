"""JSON and CSV round-tripping for every value the command line touches.

Schemas (stable, version 1):
  metric space      {"kind": "euclidean"|"l1seq", "dim": n}
                    {"kind": "table", "matrix": [[...], ...]}
  compact set       [point, ...] where a point is [x1, ..., xd] or an int
  multifunction     {"space": ..., "grid": [t, ...], "values": [set, ...]}
  certificate       {"direction": ..., "containment_ok": ...,
                     "inequalities": [{"name","lhs","rhs","pass"}, ...],
                     "jump": ..., "all_pass": ...}
  inclusion problem {"space", "grid", "map", "mu", "phi", "K", "X0",
                     "quantization", "max_iter", "tol", "cardinality_cap",
                     "k_margin"} with map one of
                     {"name": "cantor"}, {"name": "scaling"},
                     {"name": "table", "images": [set, ...]}  (state-free)
CSV layouts:
  variation report  t, v, v_right, v_left
  iteration history iteration, step, residual
  point cloud       t, x1, ..., xd
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict

from .inclusion import InclusionProblem, InclusionSolution
from .metric import CompactSet, MetricSpace
from .multifun import Grid, GridMultifunction, VariationReport
from .selector import SelectorCertificate


def space_to_json(space: MetricSpace) -> dict:
    if space.kind == "table":
        return {"kind": "table", "matrix": [list(row) for row in space.matrix]}
    return {"kind": space.kind, "dim": space.dim}


def space_from_json(obj: dict) -> MetricSpace:
    if obj["kind"] == "table":
        return MetricSpace.from_table(obj["matrix"])
    return MetricSpace(obj["kind"], int(obj["dim"]))


def set_to_json(X: CompactSet) -> list:
    return [p if isinstance(p, int) else list(p) for p in X.points]


def set_from_json(obj: list, space: MetricSpace) -> CompactSet:
    return CompactSet(space, tuple(p if isinstance(p, int) else tuple(p) for p in obj))


def multifunction_to_json(F: GridMultifunction) -> dict:
    return {
        "space": space_to_json(F.space),
        "grid": list(F.grid.nodes),
        "values": [set_to_json(v) for v in F.values],
    }


def multifunction_from_json(obj: dict) -> GridMultifunction:
    space = space_from_json(obj["space"])
    return GridMultifunction(
        space,
        Grid(tuple(obj["grid"])),
        tuple(set_from_json(v, space) for v in obj["values"]),
    )


def certificate_to_json(cert: SelectorCertificate) -> dict:
    return {
        "direction": cert.direction,
        "containment_ok": cert.containment_ok,
        "jump": cert.jump,
        "all_pass": cert.all_pass,
        "inequalities": [
            {"name": q.name, "lhs": q.lhs, "rhs": q.rhs, "pass": q.ok}
            for q in cert.inequalities
        ],
    }


def report_to_json(F: GridMultifunction, report: VariationReport) -> dict:
    out = asdict(report)
    out["grid"] = list(F.grid.nodes)
    return out


def report_to_csv(F: GridMultifunction, report: VariationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["t", "v", "v_right", "v_left"])
    for i, t in enumerate(F.grid.nodes):
        w.writerow(
            [t, report.v_profile[i], report.v_right_profile[i], report.v_left_profile[i]]
        )
    return buf.getvalue()


def points_to_csv(F: GridMultifunction) -> str:
    """One row per (node, point): t followed by the coordinates."""
    buf = io.StringIO()
    w = csv.writer(buf)
    dim = 1 if F.space.kind == "table" else F.space.dim
    w.writerow(["t"] + [f"x{i + 1}" for i in range(dim)])
    for t, X in zip(F.grid.nodes, F.values):
        for p in X.points:
            w.writerow([t, p] if isinstance(p, int) else [t, *p])
    return buf.getvalue()


def _builtin_map(space: MetricSpace, spec: dict):
    name = spec["name"]
    if name == "cantor":
        from .fixtures import cantor_map

        return cantor_map
    if name == "scaling":

        def scale_map(t: float, X: CompactSet) -> CompactSet:
            return CompactSet(space, tuple(tuple(t * c for c in p) for p in X.points))

        return scale_map
    if name == "table":
        images = [spec["images"]]

        def table_map(t: float, X: CompactSet, _cache={}) -> CompactSet:
            if "sets" not in _cache:
                _cache["sets"] = {
                    float(n): set_from_json(img, space)
                    for n, img in zip(spec["grid"], images[0])
                }
            return _cache["sets"][float(t)]

        return table_map
    raise ValueError(f"unknown builtin map {name!r}")


def problem_to_json(P: InclusionProblem, map_spec: dict) -> dict:
    return {
        "space": space_to_json(P.space),
        "grid": list(P.grid.nodes),
        "map": map_spec,
        "mu": P.mu,
        "phi": list(P.phi),
        "K": [set_to_json(k) for k in P.K],
        "X0": set_to_json(P.X0),
        "quantization": P.quantization,
        "max_iter": P.max_iter,
        "tol": P.tol,
        "cardinality_cap": P.cardinality_cap,
        "k_margin": P.k_margin,
    }


def problem_from_json(obj: dict) -> InclusionProblem:
    space = space_from_json(obj["space"])
    map_spec = dict(obj["map"])
    map_spec.setdefault("grid", obj["grid"])
    return InclusionProblem(
        space=space,
        grid=Grid(tuple(obj["grid"])),
        map=_builtin_map(space, map_spec),
        mu=float(obj["mu"]),
        phi=tuple(obj["phi"]),
        K=tuple(set_from_json(k, space) for k in obj["K"]),
        X0=set_from_json(obj["X0"], space),
        quantization=float(obj.get("quantization", 1e-6)),
        max_iter=int(obj.get("max_iter", 100)),
        tol=float(obj.get("tol", 1e-6)),
        cardinality_cap=int(obj.get("cardinality_cap", 4096)),
        k_margin=float(obj.get("k_margin", 0.0)),
    )


def solution_to_json(sol: InclusionSolution) -> dict:
    return {
        "trajectory": multifunction_to_json(sol.trajectory),
        "iterations": sol.iterations,
        "converged": sol.converged,
        "residual": sol.residual,
        "step_history": sol.step_history,
        "per_node_steps": sol.per_node_steps,
        "variation_check": list(sol.variation_check),
        "initial_check": list(sol.initial_check),
        "effective_quantization": sol.effective_quantization,
    }


def iterations_to_csv(sol: InclusionSolution) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["iteration", "step", "residual"])
    for i, (step, res) in enumerate(zip(sol.step_history, sol.iteration_residuals), 1):
        w.writerow([i, step, res])
    return buf.getvalue()


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
