"""Exact-rational planar primitives.

Points, axis-parallel and general lines, side predicates, cell signatures of
axis-parallel arrangements, separation verification and circular-arc
bookkeeping.  Every predicate here is decided with exact rational arithmetic;
there is no floating point anywhere on a computation path.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Union

from .errors import PointOnLine

RED = "R"
BLUE = "B"

ZERO = Fraction(0)
ONE = Fraction(1)


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


@dataclass(frozen=True)
class ColoredPoint:
    id: int
    color: str  # RED or BLUE
    x: Fraction
    y: Fraction

    def on_unit_circle(self) -> bool:
        return self.x * self.x + self.y * self.y == 1


@dataclass(frozen=True)
class AxisLine:
    orient: str  # "H" (y = c) or "V" (x = c)
    c: Fraction

    def __str__(self):
        axis = "y" if self.orient == "H" else "x"
        return f"{axis}={self.c}"


@dataclass(frozen=True)
class GeneralLine:
    """Line a*x + b*y + c = 0, stored in canonical integer form."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __str__(self):
        return f"({self.a})x+({self.b})y+({self.c})=0"


Line = Union[AxisLine, GeneralLine]


def general_line(a, b, c) -> GeneralLine:
    """Canonicalize (a, b, c): integer coefficients, gcd 1, positive lead."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0 and b == 0:
        raise ValueError("degenerate line: a = b = 0")
    den = lcm(a.denominator, b.denominator, c.denominator)
    ai, bi, ci = int(a * den), int(b * den), int(c * den)
    g = gcd(ai, gcd(bi, ci))
    ai, bi, ci = ai // g, bi // g, ci // g
    lead = ai if ai != 0 else bi
    if lead < 0:
        ai, bi, ci = -ai, -bi, -ci
    return GeneralLine(Fraction(ai), Fraction(bi), Fraction(ci))


def line_through(px, py, qx, qy) -> GeneralLine:
    """The unique line through two distinct points."""
    a = qy - py
    b = px - qx
    return general_line(a, b, -(a * px + b * py))


def circle_point_from_parameter(t) -> tuple[Fraction, Fraction]:
    """Rational unit-circle point for parameter t; covers everything but (-1, 0)."""
    t = Fraction(t)
    d = 1 + t * t
    return (1 - t * t) / d, 2 * t / d


def circle_parameter(x: Fraction, y: Fraction) -> Fraction:
    """Inverse of circle_point_from_parameter; undefined at (-1, 0)."""
    if x == -1:
        raise ValueError("(-1, 0) has no finite parameter")
    return y / (1 + x)


def line_side(line: Line, p: ColoredPoint) -> int:
    """-1, 0 or +1: the side of `line` that `p` lies on (0 = on the line)."""
    if isinstance(line, AxisLine):
        v = (p.y if line.orient == "H" else p.x) - line.c
    else:
        v = line.a * p.x + line.b * p.y + line.c
    return _sign(v)


def verify_separation(points, lines) -> Optional[tuple[int, int]]:
    """None if every red-blue pair is split by some line, else one witness pair.

    Raises PointOnLine when strictness is violated.
    """
    groups: dict[tuple, dict[str, int]] = {}
    for p in points:
        sig = []
        for ln in lines:
            s = line_side(ln, p)
            if s == 0:
                raise PointOnLine(p.id, ln)
            sig.append(s)
        cell = groups.setdefault(tuple(sig), {})
        if p.color not in cell:
            cell[p.color] = p.id
    for cell in groups.values():
        if RED in cell and BLUE in cell:
            return (cell[RED], cell[BLUE])
    return None


@dataclass(frozen=True, order=True)
class CellSignature:
    row: int  # index into sorted horizontal-line coordinates
    col: int  # index into sorted vertical-line coordinates


def axis_coords(lines) -> tuple[list[Fraction], list[Fraction]]:
    hs = sorted({ln.c for ln in lines if ln.orient == "H"})
    vs = sorted({ln.c for ln in lines if ln.orient == "V"})
    return hs, vs


def point_signature(p: ColoredPoint, hs, vs) -> CellSignature:
    return CellSignature(sum(1 for c in hs if c < p.y),
                         sum(1 for c in vs if c < p.x))


@dataclass
class CellMap:
    cells: dict[CellSignature, list[int]]
    corrupt: set[CellSignature]
    colors: dict[CellSignature, set[str]]


def cell_map(points, lines) -> CellMap:
    """Assign every point its arrangement cell; flag non-monochromatic cells."""
    hs, vs = axis_coords(lines)
    hset, vset = set(hs), set(vs)
    for p in points:
        if p.y in hset:
            raise PointOnLine(p.id, AxisLine("H", p.y))
        if p.x in vset:
            raise PointOnLine(p.id, AxisLine("V", p.x))
    cells: dict[CellSignature, list[int]] = {}
    colors: dict[CellSignature, set[str]] = {}
    for p in points:
        sig = point_signature(p, hs, vs)
        cells.setdefault(sig, []).append(p.id)
        colors.setdefault(sig, set()).add(p.color)
    corrupt = {sig for sig, cols in colors.items() if len(cols) == 2}
    return CellMap(cells, corrupt, colors)


# --- exact positions on the unit circle ------------------------------------
#
# Cell-arc endpoints are circle crossings of axis lines, whose free coordinate
# is an irrational square root.  Positions are therefore stored as signed
# squares; all comparisons reduce to rational comparisons.


@dataclass(frozen=True)
class CirclePos:
    """A point of the unit circle: x = sx*sqrt(x2), y = sy*sqrt(y2), x2+y2=1."""

    sx: int
    x2: Fraction
    sy: int
    y2: Fraction

    @staticmethod
    def of(x: Fraction, y: Fraction) -> "CirclePos":
        return CirclePos(_sign(x), x * x, _sign(y), y * y)

    @staticmethod
    def crossing(line: AxisLine, upper: bool) -> "CirclePos":
        """Circle crossing of an axis line with |c| < 1.

        For horizontal lines `upper` selects the x > 0 crossing; for vertical
        lines it selects the y > 0 crossing.
        """
        c = line.c
        c2 = c * c
        assert c2 < 1
        if line.orient == "H":
            return CirclePos(1 if upper else -1, 1 - c2, _sign(c), c2)
        return CirclePos(_sign(c), c2, 1 if upper else -1, 1 - c2)

    def quadrant(self) -> int:
        if self.sx > 0 and self.sy >= 0:
            return 0
        if self.sx <= 0 and self.sy > 0:
            return 1
        if self.sx < 0 and self.sy <= 0:
            return 2
        return 3

    def _cmp_x(self, other: "CirclePos") -> int:
        if self.sx != other.sx:
            return 1 if self.sx > other.sx else -1
        if self.sx == 0:
            return 0
        d = _sign(self.x2 - other.x2)
        return d if self.sx > 0 else -d

    def cmp(self, other: "CirclePos") -> int:
        """Compare by angle in [0, 2*pi), counterclockwise from (1, 0)."""
        qa, qb = self.quadrant(), other.quadrant()
        if qa != qb:
            return 1 if qa > qb else -1
        c = self._cmp_x(other)
        # in quadrants 0 and 1 the angle grows as x shrinks
        return -c if qa <= 1 else c


TOP = CirclePos(0, ZERO, 1, ONE)
BOTTOM = CirclePos(0, ZERO, -1, ONE)
LEFT = CirclePos(-1, ONE, 0, ZERO)
RIGHT = CirclePos(1, ONE, 0, ZERO)


def arc_contains(pos: CirclePos, start: CirclePos, end: CirclePos) -> bool:
    """True iff `pos` lies strictly inside the open ccw arc from start to end.

    Equal endpoints denote the full circle minus that single point.
    """
    cs = start.cmp(end)
    if cs == 0:
        return pos.cmp(start) != 0
    if cs < 0:
        return start.cmp(pos) < 0 and pos.cmp(end) < 0
    return start.cmp(pos) < 0 or pos.cmp(end) < 0


def arc_quadrants(start: CirclePos, end: CirclePos) -> list[int]:
    """Quadrants met going ccw from start to end (whole circle if equal)."""
    if start.cmp(end) == 0:
        return [0, 1, 2, 3]
    qs = [start.quadrant()]
    qe = end.quadrant()
    if qs[0] == qe and start.cmp(end) < 0:
        return qs
    q = qs[0]
    while True:
        q = (q + 1) % 4
        if q not in qs:
            qs.append(q)
        if q == qe:
            break
    return qs


@dataclass
class Arc:
    """A maximal circular arc interior to one arrangement cell."""

    signature: CellSignature
    start: CirclePos
    end: CirclePos
    point_ids: list[int]
    colors: set[str] = field(default_factory=set)
    quadrants: list[int] = field(default_factory=list)


class _AngKey:
    __slots__ = ("pos",)

    def __init__(self, pos: CirclePos):
        self.pos = pos

    def __lt__(self, other):
        return self.pos.cmp(other.pos) < 0

    def __eq__(self, other):
        return self.pos.cmp(other.pos) == 0


def angular_sort(points: Iterable[ColoredPoint]) -> list[ColoredPoint]:
    """Points by ccw angle starting at the (1, 0) direction."""
    return sorted(points, key=lambda p: _AngKey(CirclePos.of(p.x, p.y)))


def cell_arcs(points, lines) -> dict[CellSignature, list[Arc]]:
    """Maximal circle arcs per arrangement cell, computed combinatorially.

    Lines with |coordinate| >= 1 miss the open unit disk and contribute no
    crossings.  Walks the circle once, flipping one index of the cell
    signature at every crossing event; coincident crossings (one horizontal
    plus one vertical line meeting on the circle) are folded into one event.
    """
    hs, vs = axis_coords(lines)
    crossings: list[tuple[CirclePos, int, int]] = []
    for c in hs:
        if c * c < 1:
            # ccw through the x > 0 crossing: y increases, so row + 1
            crossings.append((CirclePos.crossing(AxisLine("H", c), True), 1, 0))
            crossings.append((CirclePos.crossing(AxisLine("H", c), False), -1, 0))
    for c in vs:
        if c * c < 1:
            # ccw through the y > 0 crossing: x decreases, so col - 1
            crossings.append((CirclePos.crossing(AxisLine("V", c), True), 0, -1))
            crossings.append((CirclePos.crossing(AxisLine("V", c), False), 0, 1))

    pts = angular_sort(points)
    if not pts:
        return {}
    ref = pts[0]
    ref_pos = CirclePos.of(ref.x, ref.y)
    ref_sig = point_signature(ref, hs, vs)

    if not crossings:
        arc = Arc(ref_sig, ref_pos, ref_pos, [p.id for p in pts],
                  {p.color for p in pts}, [0, 1, 2, 3])
        return {ref_sig: [arc]}

    crossings.sort(key=functools.cmp_to_key(lambda a, b: a[0].cmp(b[0])))
    groups: list[list] = []
    for pos, dr, dc in crossings:
        if groups and groups[-1][0].cmp(pos) == 0:
            groups[-1][1] += dr
            groups[-1][2] += dc
        else:
            groups.append([pos, dr, dc])

    # rotate so the walk starts at the first crossing after the reference point
    start_idx = 0
    for idx, (pos, _, _) in enumerate(groups):
        if ref_pos.cmp(pos) < 0:
            start_idx = idx
            break
    ordered = groups[start_idx:] + groups[:start_idx]

    row, col = ref_sig.row, ref_sig.col
    result: dict[CellSignature, list[Arc]] = {}
    for g in range(len(ordered)):
        pos, dr, dc = ordered[g]
        row += dr
        col += dc
        nxt = ordered[(g + 1) % len(ordered)][0]
        sig = CellSignature(row, col)
        members = [p for p in pts if arc_contains(CirclePos.of(p.x, p.y), pos, nxt)]
        arc = Arc(sig, pos, nxt, [p.id for p in members],
                  {p.color for p in members}, arc_quadrants(pos, nxt))
        result.setdefault(sig, []).append(arc)
    assert (row, col) == (ref_sig.row, ref_sig.col), "circle walk did not close"
    return result


def arc_interior_point(start: ColoredPoint, end: ColoredPoint,
                       forbidden_x=(), forbidden_y=()) -> tuple[Fraction, Fraction]:
    """A rational circle point strictly inside the open ccw arc start -> end,
    with both coordinates outside the given forbidden sets."""
    fx, fy = set(forbidden_x), set(forbidden_y)
    for t in _arc_parameter_candidates(start, end):
        x, y = circle_point_from_parameter(t)
        if x not in fx and y not in fy:
            return x, y
    raise RuntimeError("unreachable: finitely many forbidden coordinates")


def _arc_parameter_candidates(start, end):
    a = CirclePos.of(start.x, start.y)
    b = CirclePos.of(end.x, end.y)
    a_is_left = a.cmp(LEFT) == 0
    b_is_left = b.cmp(LEFT) == 0
    if a_is_left:
        tb = circle_parameter(end.x, end.y)
        for j in range(10_000):
            yield tb - (1 + j if j < 4 else Fraction(1, 2 ** j))
    elif b_is_left:
        ta = circle_parameter(start.x, start.y)
        for j in range(10_000):
            yield ta + (1 + j if j < 4 else Fraction(1, 2 ** j))
    elif arc_contains(LEFT, a, b):
        ta = circle_parameter(start.x, start.y)
        tb = circle_parameter(end.x, end.y)
        for j in range(1, 10_000):
            yield ta + Fraction(1, 2 ** j)
            yield tb - Fraction(1, 2 ** j)
    else:
        ta = circle_parameter(start.x, start.y)
        tb = circle_parameter(end.x, end.y)
        span = tb - ta
        assert span > 0, "arc endpoints out of ccw order"
        for den in range(2, 10_000):
            for num in range(1, den):
                yield ta + span * Fraction(num, den)


def pick_coordinate(lo: Fraction, hi: Fraction, lo_closed: bool, hi_closed: bool,
                    forbidden) -> Optional[Fraction]:
    """A rational in the interval avoiding `forbidden`, or None if impossible."""
    fb = set(forbidden)
    if lo > hi:
        return None
    if lo == hi:
        return lo if (lo_closed and hi_closed and lo not in fb) else None
    span = hi - lo
    for den in range(2, 10_000):
        for num in range(1, den):
            c = lo + span * Fraction(num, den)
            if c not in fb:
                return c
    return None
