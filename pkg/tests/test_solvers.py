import random
from fractions import Fraction

from sepline.decomposition import build_switch_graph, decompose, line_stabs_switch
from sepline.geometry import (BLUE, RED, ColoredPoint,
                              circle_point_from_parameter, verify_separation)
from sepline.oracles import (min_axis_separation, min_general_separation_circle,
                             sep_bitset)
from sepline.solvers import (SolveStats, build_L0, refine_step, solve_axis,
                             solve_general, wedge_baseline)

F = Fraction


def pt(i, color, x, y):
    return ColoredPoint(i, color, F(x), F(y))


def _random_circle_instance(rng, n, bichromatic=False):
    while True:
        ts = set()
        while len(ts) < n:
            ts.add(F(rng.randint(-300, 300), rng.randint(1, 300)))
        pts = [ColoredPoint(i, rng.choice([RED, BLUE]),
                            *circle_point_from_parameter(t))
               for i, t in enumerate(sorted(ts))]
        if not bichromatic or len({p.color for p in pts}) == 2:
            return pts


def alternating_instance(n):
    """2n points in angular order with strictly alternating colors."""
    pts = []
    for i in range(2 * n):
        x, y = circle_point_from_parameter(F(i - n, n + 1))
        pts.append(ColoredPoint(i, RED if i % 2 == 0 else BLUE, x, y))
    return pts


class TestSolveGeneral:
    def test_pts4(self, pts4):
        sol = solve_general(pts4)
        assert sol.size == 2
        assert verify_separation(pts4, sol.lines) is None

    def test_diag_single_line(self, diag):
        sol = solve_general(diag)
        assert sol.size == 1
        assert verify_separation(diag, sol.lines) is None

    def test_monochromatic(self):
        pts = [pt(0, RED, 1, 0), pt(1, RED, 0, 1)]
        assert solve_general(pts).size == 0

    def test_size_is_half_w_and_optimal(self):
        rng = random.Random(61)
        for _ in range(40):
            pts = _random_circle_instance(rng, rng.randint(2, 10))
            sol = solve_general(pts)
            dec = decompose(pts)
            assert 2 * sol.size == dec.w
            assert verify_separation(pts, sol.lines) is None
            k_opt, _ = min_general_separation_circle(pts)
            assert sol.size == k_opt

    def test_anchor_per_blue_chunk(self, pts4):
        sol = solve_general(pts4)
        dec = decompose(pts4)
        blue_idx = [i for i, c in enumerate(dec.chunks) if c.color == BLUE]
        assert [a[0] for a in sol.anchors] == blue_idx


class TestWedgeBaseline:
    def test_pts4(self, pts4):
        sol = wedge_baseline(pts4)
        assert sol.size == 4
        assert verify_separation(pts4, sol.lines) is None

    def test_size_w_and_within_2kappa(self):
        rng = random.Random(67)
        for _ in range(40):
            pts = _random_circle_instance(rng, rng.randint(2, 10))
            dec = decompose(pts)
            sol = wedge_baseline(pts)
            assert sol.size == dec.w
            assert verify_separation(pts, sol.lines) is None
            if dec.w:
                g = build_switch_graph(dec)
                assert g.kappa <= sol.size <= 2 * g.kappa


class TestBuildL0:
    def test_pts4_kappa_lines(self, pts4):
        dec = decompose(pts4)
        g = build_switch_graph(dec)
        sol = build_L0(dec, g)
        assert sol.size == g.kappa == 2

    def test_every_switch_stabbed(self):
        rng = random.Random(71)
        for _ in range(60):
            pts = _random_circle_instance(rng, rng.randint(2, 11))
            dec = decompose(pts)
            if dec.w == 0:
                continue
            g = build_switch_graph(dec)
            sol = build_L0(dec, g)
            assert sol.size == g.kappa
            for sw in dec.switches:
                assert any(line_stabs_switch(ln.orient, ln.c, sw)
                           for ln in sol.lines)

    def test_no_tangent_lines(self):
        rng = random.Random(73)
        for _ in range(60):
            pts = _random_circle_instance(rng, rng.randint(2, 11))
            dec = decompose(pts)
            if dec.w == 0:
                continue
            sol = build_L0(dec, build_switch_graph(dec))
            assert all(abs(ln.c) < 1 for ln in sol.lines)


class TestRefineStep:
    def test_done_on_separating(self, pts4):
        dec = decompose(pts4)
        sol = build_L0(dec, build_switch_graph(dec))
        # pts4's L0 already separates; refine must report done unchanged
        outcome, payload = refine_step(pts4, sol, dec)
        if outcome == "done":
            assert payload is sol
        else:
            assert outcome == "improved"

    def test_each_step_strictly_dominates(self):
        rng = random.Random(79)
        for _ in range(40):
            pts = _random_circle_instance(rng, rng.randint(3, 11))
            dec = decompose(pts)
            if dec.w == 0:
                continue
            sol = build_L0(dec, build_switch_graph(dec))
            while True:
                old = sep_bitset(pts, sol.lines)
                outcome, payload = refine_step(pts, sol, dec)
                if outcome != "improved":
                    break
                new = sep_bitset(pts, payload.lines)
                assert new & old == old and new != old
                assert payload.size <= sol.size
                sol = payload


class TestSolveAxis:
    def test_pts4(self, pts4):
        sol = solve_axis(pts4)
        assert sol.size == sol.kappa == 2
        assert verify_separation(pts4, sol.lines) is None

    def test_diag(self, diag):
        sol = solve_axis(diag)
        assert sol.size == 2
        assert verify_separation(diag, sol.lines) is None

    def test_monochromatic(self):
        pts = [pt(0, RED, 1, 0), pt(1, RED, 0, 1)]
        assert solve_axis(pts).size == 0

    def test_alternating(self):
        for n in range(1, 7):
            pts = alternating_instance(n)
            sol = solve_axis(pts)
            assert verify_separation(pts, sol.lines) is None
            k_opt, _ = min_axis_separation(pts)
            assert sol.size == k_opt

    def test_matches_oracle(self):
        rng = random.Random(83)
        for _ in range(60):
            pts = _random_circle_instance(rng, rng.randint(2, 12))
            stats = SolveStats()
            sol = solve_axis(pts, stats)
            assert verify_separation(pts, sol.lines) is None
            k_opt, _ = min_axis_separation(pts)
            assert sol.size == k_opt
            r = sum(1 for p in pts if p.color == RED)
            assert stats.steps <= r * (len(pts) - r)

    def test_deterministic(self):
        rng = random.Random(89)
        for _ in range(10):
            pts = _random_circle_instance(rng, rng.randint(2, 10))
            a = solve_axis(pts)
            b = solve_axis(pts)
            assert a.lines == b.lines and a.steps == b.steps

    def test_provenance_tags(self, pts4):
        sol = solve_axis(pts4)
        for t in sol.tagged:
            head = t.tag.split(":")[0]
            assert head in {"edge", "isolated", "flip", "repair"}
