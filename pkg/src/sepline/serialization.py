"""Exact JSON serialization shared by the library and the CLI.

Rationals travel as decimal-free "num/den" strings (plain "num" when the
denominator is 1), so parse(serialize(x)) reproduces every Fraction
bit-for-bit.  Three document kinds exist:

* instance JSON   — {"kind": "circle"|"planar", "points": [...]}
* solution JSON   — {"variant", "lines", "size", "kappa", "steps",
                     "repair_used"}
* C-RBDS JSON     — {"k", "classes", "blues", "edges"} plus the reduction's
                     layout sidecar (budgets, grid, role map, normalization)
"""

from __future__ import annotations

import json
from fractions import Fraction

from .geometry import BLUE, RED, AxisLine, ColoredPoint, GeneralLine
from .oracles import CRBDS
from .reduction import NormalizedCRBDS, ReducedInstance, ReductionLayout


def rat_to_str(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else \
        f"{f.numerator}/{f.denominator}"


def rat_from_str(s) -> Fraction:
    if not isinstance(s, str):
        raise ValueError(f"rational must be a 'num/den' string, got {s!r}")
    return Fraction(s)


# --- instances --------------------------------------------------------------

def instance_to_doc(points, kind: str) -> dict:
    if kind not in ("circle", "planar"):
        raise ValueError(f"unknown instance kind {kind!r}")
    return {"kind": kind,
            "points": [{"color": p.color,
                        "x": rat_to_str(p.x),
                        "y": rat_to_str(p.y)} for p in points]}


def instance_from_doc(doc: dict) -> tuple[str, list[ColoredPoint]]:
    kind = doc.get("kind")
    if kind not in ("circle", "planar"):
        raise ValueError(f"unknown instance kind {kind!r}")
    points = []
    for i, rec in enumerate(doc["points"]):
        color = rec["color"]
        if color not in (RED, BLUE):
            raise ValueError(f"point {i}: color must be 'R' or 'B'")
        points.append(ColoredPoint(i, color,
                                   rat_from_str(rec["x"]),
                                   rat_from_str(rec["y"])))
    return kind, points


# --- lines and solutions ----------------------------------------------------

def line_to_doc(ln) -> dict:
    if isinstance(ln, AxisLine):
        return {"orient": ln.orient, "c": rat_to_str(ln.c)}
    return {"a": rat_to_str(ln.a), "b": rat_to_str(ln.b),
            "c": rat_to_str(ln.c)}


def line_from_doc(rec: dict):
    if "orient" in rec:
        if rec["orient"] not in ("H", "V"):
            raise ValueError(f"bad orientation {rec['orient']!r}")
        return AxisLine(rec["orient"], rat_from_str(rec["c"]))
    return GeneralLine(rat_from_str(rec["a"]), rat_from_str(rec["b"]),
                       rat_from_str(rec["c"]))


def solution_to_doc(variant: str, lines, *, kappa=None, steps=0,
                    repair_used=False) -> dict:
    return {"variant": variant,
            "lines": [line_to_doc(ln) for ln in lines],
            "size": len(lines),
            "kappa": kappa,
            "steps": steps,
            "repair_used": bool(repair_used)}


def solution_from_doc(doc: dict):
    lines = [line_from_doc(rec) for rec in doc["lines"]]
    return doc.get("variant", "axis"), lines


# --- decomposition diagnostics ---------------------------------------------

def diagnostics_to_doc(dec, graph) -> dict:
    """kappa-command payload: chunks, switch graph, kappa."""
    return {
        "w": dec.w,
        "chunks": [{"color": c.color, "point_ids": list(c.point_ids)}
                   for c in dec.chunks],
        "switch_graph": {
            "edges": [{"i": i, "j": j,
                       "orient": graph.orientations(i, j)}
                      for (i, j) in sorted(graph.edges)],
            "isolated": list(graph.isolated),
            "kappa": graph.kappa,
        },
    }


# --- C-RBDS instances and the reduction sidecar -----------------------------

def crbds_to_doc(inst: CRBDS) -> dict:
    doc = {"k": inst.k,
           "classes": [list(c) for c in inst.classes],
           "blues": list(inst.blues),
           "edges": sorted([u, v] for (u, v) in inst.edges)}
    if inst.order is not None:
        doc["order"] = {v: list(us) for v, us in inst.order.items()}
    return doc


def crbds_from_doc(doc: dict) -> CRBDS:
    classes = [list(c) for c in doc["classes"]]
    if "k" in doc and doc["k"] != len(classes):
        raise ValueError("declared k does not match the class list")
    reds = {u for cls in classes for u in cls}
    blues = list(doc["blues"])
    edges = set()
    for u, v in doc["edges"]:
        if u not in reds or v not in set(blues):
            raise ValueError(f"edge ({u!r}, {v!r}) references unknown vertex")
        edges.add((u, v))
    order = None
    if doc.get("order") is not None:
        order = {v: list(us) for v, us in doc["order"].items()}
    return CRBDS(classes, blues, edges, order)


def sidecar_to_doc(norm: NormalizedCRBDS, red: ReducedInstance) -> dict:
    lay = red.layout
    return {
        "budgets": {"p": red.p, "q": red.q},
        "grid": {"k": lay.k, "n": lay.n, "d": lay.d, "m": lay.m},
        "roles": {str(pid): list(role) for pid, role in lay.roles.items()},
        "normalized": {
            **crbds_to_doc(norm.inst),
            "d": norm.d, "m": norm.m,
            "original_k": norm.original_k,
            "added_degree_class": norm.added_degree_class,
            "added_parity_class": norm.added_parity_class,
        },
    }


def sidecar_from_doc(doc: dict) -> tuple[NormalizedCRBDS, ReductionLayout]:
    g = doc["grid"]
    roles = {int(pid): tuple(role) for pid, role in doc["roles"].items()}
    lay = ReductionLayout(g["k"], g["n"], g["d"], g["m"], roles)
    nd = doc["normalized"]
    norm = NormalizedCRBDS(crbds_from_doc(nd), nd["d"], nd["m"],
                           nd["original_k"], nd["added_degree_class"],
                           nd["added_parity_class"])
    if (lay.p, lay.q) != (doc["budgets"]["p"], doc["budgets"]["q"]):
        raise ValueError("sidecar budgets disagree with its grid dimensions")
    return norm, lay


# --- canonical text form ----------------------------------------------------

def dumps(doc: dict) -> str:
    """Canonical deterministic text: sorted keys, fixed separators."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> dict:
    return json.loads(text)
