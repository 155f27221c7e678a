"""Angular decomposition of a circle instance.

Chunks (maximal monochromatic runs), switches (the open arcs between
consecutive chunks), the facing relation between switches, and the switch
graph whose structure determines the optimal number of axis-parallel lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import matching
from .errors import EmptyInstance, PointOffCircle
from .geometry import (BOTTOM, LEFT, RIGHT, TOP, CirclePos, ColoredPoint,
                       angular_sort, arc_contains, pick_coordinate)


@dataclass(frozen=True)
class Interval:
    """A rational interval with independently open/closed endpoints."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool

    def is_empty(self) -> bool:
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and not (self.lo_closed and self.hi_closed)

    def intersect(self, other: "Interval") -> "Interval":
        if self.lo > other.lo:
            lo, lc = self.lo, self.lo_closed
        elif other.lo > self.lo:
            lo, lc = other.lo, other.lo_closed
        else:
            lo, lc = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hc = self.hi, self.hi_closed
        elif other.hi < self.hi:
            hi, hc = other.hi, other.hi_closed
        else:
            hi, hc = self.hi, self.hi_closed and other.hi_closed
        return Interval(lo, hi, lc, hc)

    def contains(self, c: Fraction) -> bool:
        if c < self.lo or c > self.hi:
            return False
        if c == self.lo and not self.lo_closed:
            return False
        if c == self.hi and not self.hi_closed:
            return False
        return True

    def width(self) -> Fraction:
        return Fraction(0) if self.is_empty() else self.hi - self.lo

    def pick(self, forbidden) -> Optional[Fraction]:
        if self.is_empty():
            return None
        return pick_coordinate(self.lo, self.hi, self.lo_closed,
                               self.hi_closed, forbidden)


@dataclass
class Chunk:
    color: str
    point_ids: list[int]


@dataclass
class Switch:
    """Open arc between the last point of one chunk and the first of the next."""

    index: int
    start: ColoredPoint  # last point of chunk index
    end: ColoredPoint    # first point of chunk index + 1 (cyclic)


@dataclass
class CircleDecomposition:
    points: list[ColoredPoint]           # input order, id-indexed
    order: list[int]                     # ids by ccw angle from (1, 0)
    chunks: list[Chunk]
    switches: list[Switch]

    @property
    def w(self) -> int:
        return len(self.chunks) if len(self.chunks) > 1 else 0


def decompose(points) -> CircleDecomposition:
    """Chunks and switches of a circle instance in angular order."""
    points = list(points)
    if not points:
        raise EmptyInstance("a circle instance needs at least one point")
    for p in points:
        if not p.on_unit_circle():
            raise PointOffCircle(p.id)
    seen = set()
    for p in points:
        key = (p.x, p.y)
        if key in seen:
            raise ValueError(f"duplicate point position {key}")
        seen.add(key)

    ordered = angular_sort(points)
    by_id = {p.id: p for p in points}

    runs: list[Chunk] = []
    for p in ordered:
        if runs and runs[-1].color == p.color:
            runs[-1].point_ids.append(p.id)
        else:
            runs.append(Chunk(p.color, [p.id]))
    if len(runs) > 1 and runs[0].color == runs[-1].color:
        # the run through angle 0 wraps around
        runs[0].point_ids = runs.pop().point_ids + runs[0].point_ids

    switches: list[Switch] = []
    if len(runs) > 1:
        for i, chunk in enumerate(runs):
            nxt = runs[(i + 1) % len(runs)]
            switches.append(Switch(i, by_id[chunk.point_ids[-1]],
                                   by_id[nxt.point_ids[0]]))
    return CircleDecomposition(points, [p.id for p in ordered], runs, switches)


def projection_interval(switch: Switch, axis: str) -> Interval:
    """Exact image of the open switch arc under the X or Y projection.

    An endpoint is closed iff the extremum is attained at a turning point of
    the projection interior to the arc; it is open when attained only in the
    limit at an excluded arc endpoint.
    """
    a = CirclePos.of(switch.start.x, switch.start.y)
    b = CirclePos.of(switch.end.x, switch.end.y)
    if axis == "Y":
        va, vb = switch.start.y, switch.end.y
        top_in = arc_contains(TOP, a, b)
        bot_in = arc_contains(BOTTOM, a, b)
    else:
        va, vb = switch.start.x, switch.end.x
        top_in = arc_contains(RIGHT, a, b)
        bot_in = arc_contains(LEFT, a, b)
    hi, hc = (Fraction(1), True) if top_in else (max(va, vb), False)
    lo, lc = (Fraction(-1), True) if bot_in else (min(va, vb), False)
    return Interval(lo, hi, lc, hc)


def line_stabs_switch(orient: str, c: Fraction, switch: Switch) -> bool:
    axis = "Y" if orient == "H" else "X"
    return projection_interval(switch, axis).contains(c)


def faces(a: Switch, b: Switch, forbidden_x, forbidden_y) -> dict[str, Interval]:
    """Feasible stabbing orientations for a pair of switches.

    An orientation is feasible iff the projection intervals overlap and the
    overlap admits a coordinate avoiding every input-point coordinate, so the
    witnessing line is usable under strict separation.
    """
    out: dict[str, Interval] = {}
    h = projection_interval(a, "Y").intersect(projection_interval(b, "Y"))
    if not h.is_empty() and h.pick(forbidden_y) is not None:
        out["H"] = h
    v = projection_interval(a, "X").intersect(projection_interval(b, "X"))
    if not v.is_empty() and v.pick(forbidden_x) is not None:
        out["V"] = v
    return out


@dataclass
class SwitchGraph:
    n: int                                       # number of switches
    edges: dict[tuple[int, int], dict[str, Interval]]
    isolated: list[int]
    kappa: int
    edge_cover: list[tuple[int, int]] = field(default_factory=list)

    def orientations(self, i: int, j: int) -> str:
        ann = self.edges[(min(i, j), max(i, j))]
        return "".join(o for o in ("H", "V") if o in ann)


def build_switch_graph(dec: CircleDecomposition) -> SwitchGraph:
    """The nice-pair graph over switches, with kappa = |I| + MEC(H)."""
    sw = dec.switches
    n = len(sw)
    forbidden_x = {p.x for p in dec.points}
    forbidden_y = {p.y for p in dec.points}
    edges: dict[tuple[int, int], dict[str, Interval]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            ann = faces(sw[i], sw[j], forbidden_x, forbidden_y)
            if ann:
                edges[(i, j)] = ann
    degree = {i: 0 for i in range(n)}
    for (i, j) in edges:
        degree[i] += 1
        degree[j] += 1
    isolated = [i for i in range(n) if degree[i] == 0]

    covered = [i for i in range(n) if degree[i] > 0]
    remap = {v: k for k, v in enumerate(covered)}
    sub_edges = [(remap[i], remap[j]) for (i, j) in edges]
    if covered:
        cover = matching.minimum_edge_cover(len(covered), sub_edges)
        edge_cover = sorted((covered[i], covered[j]) for (i, j) in cover)
    else:
        edge_cover = []
    kappa = len(isolated) + len(edge_cover)
    return SwitchGraph(n, edges, isolated, kappa, edge_cover)
