import pytest

from conftest import FIXTURES, SMALL, fixture_ids
from fourpage.binding import OPPOSITE_PAIRS, alpha4_upper_bound, page_assignment
from fourpage.exceptions import InvalidPresentation, NonPositiveEpsilon
from fourpage.fixtures import get_fixture
from fourpage.ribbon import (
    FOLD90,
    STRAIGHT180,
    classify_turn,
    ribbon_bound,
    ribbon_plan,
    ribbon_schematic,
)


def plan_for(d, epsilon=1e-3):
    return ribbon_plan(alpha4_upper_bound(d).presentation, epsilon)


def segments(points):
    return list(zip(points, points[1:]))


def _orient(p, q, r):
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 1e-12) - (v < -1e-12)


def _on_segment(p, q, r):
    return min(p[0], r[0]) - 1e-12 <= q[0] <= max(p[0], r[0]) + 1e-12 and \
        min(p[1], r[1]) - 1e-12 <= q[1] <= max(p[1], r[1]) + 1e-12


def intersects(s, t):
    """Closed-segment intersection by orientation tests."""
    (p1, q1), (p2, q2) = s, t
    o1, o2 = _orient(p1, q1, p2), _orient(p1, q1, q2)
    o3, o4 = _orient(p2, q2, p1), _orient(p2, q2, q1)
    if o1 != o2 and o3 != o4:
        return True
    return any(
        o == 0 and _on_segment(a, b, c)
        for o, a, b, c in ((o1, p1, p2, q1), (o2, p1, q2, q1), (o3, p2, p1, q2), (o4, p2, q1, q2))
    )


class TestTurns:
    def test_opposite_pages_straight(self):
        assert classify_turn(("P1", "P3")) == STRAIGHT180
        assert classify_turn(("P4", "P2")) == STRAIGHT180

    def test_adjacent_pages_fold(self):
        for pair in [("P1", "P2"), ("P2", "P3"), ("P3", "P4"), ("P1", "P4")]:
            assert classify_turn(pair) == FOLD90

    def test_same_page_rejected(self):
        with pytest.raises(InvalidPresentation):
            classify_turn(("P2", "P2"))

    def test_opposite_pairs(self):
        assert set(OPPOSITE_PAIRS) == {frozenset(("P1", "P3")), frozenset(("P2", "P4"))}


class TestPlan:
    def test_trefoil(self, trefoil):
        plan = plan_for(trefoil)
        assert len(plan.stations) == 6
        assert ribbon_bound(plan).bound == 6

    def test_hopf_two_components(self, hopf):
        plan = plan_for(hopf)
        assert len(plan.components) == 2
        assert ribbon_bound(plan).bound == 4

    @pytest.mark.parametrize("fx", FIXTURES, ids=fixture_ids(FIXTURES))
    def test_bound_is_binding_count(self, fx):
        r = alpha4_upper_bound(fx.diagram)
        plan = ribbon_plan(r.presentation)
        rb = ribbon_bound(plan)
        assert rb.bound == r.arcs == len(plan.stations)
        assert rb.connections == r.arcs
        assert rb.bound <= 2 * fx.diagram.crossing_number

    @pytest.mark.parametrize("fx", SMALL, ids=fixture_ids(SMALL))
    def test_turn_matches_pages(self, fx):
        p = alpha4_upper_bound(fx.diagram).presentation
        pages = page_assignment(p)["binding"]
        for s in ribbon_plan(p).stations:
            assert set(s.pages) == set(pages[s.edge])
            assert (s.turn == STRAIGHT180) == (frozenset(s.pages) in OPPOSITE_PAIRS)
            assert (s.diagonal is None) == (s.turn == STRAIGHT180)

    def test_length_tends_to_bound(self):
        plan = plan_for(get_fixture("8_19").diagram)
        lengths = [ribbon_bound(plan, eps).length for eps in (1e-1, 1e-2, 1e-3, 1e-6)]
        assert lengths == sorted(lengths, reverse=True)
        assert lengths[-1] == pytest.approx(13, abs=1e-4)
        assert all(l > 13 for l in lengths)

    @pytest.mark.parametrize("eps", [0, -1e-3])
    def test_nonpositive_epsilon(self, trefoil, eps):
        p = alpha4_upper_bound(trefoil).presentation
        with pytest.raises(NonPositiveEpsilon):
            ribbon_plan(p, eps)
        with pytest.raises(NonPositiveEpsilon):
            ribbon_bound(ribbon_plan(p), eps)

    def test_invalid_presentation(self):
        d = get_fixture("8_19").diagram
        raw = alpha4_upper_bound(d).unrepaired
        with pytest.raises(InvalidPresentation):
            ribbon_plan(raw)

    def test_plan_json(self, trefoil):
        info = plan_for(trefoil).to_dict()
        assert sum(len(c) for c in info["components"]) == 6


class TestSchematic:
    @pytest.mark.parametrize("fx", SMALL, ids=fixture_ids(SMALL))
    def test_counts(self, fx):
        plan = plan_for(fx.diagram)
        sch = ribbon_schematic(plan)
        assert len(sch["squares"]) == len(plan.stations)
        assert len(sch["connectors"]) == plan.n_arcs

    @pytest.mark.parametrize("fx", SMALL, ids=fixture_ids(SMALL))
    def test_same_page_connectors_disjoint(self, fx):
        sch = ribbon_schematic(plan_for(fx.diagram))
        conns = sch["connectors"]
        for i, a in enumerate(conns):
            for b in conns[i + 1:]:
                if a["page"] != b["page"]:
                    continue
                for s in segments(a["points"]):
                    for t in segments(b["points"]):
                        assert not intersects(s, t), (a, b)

    def test_lanes(self, trefoil):
        sch = ribbon_schematic(plan_for(trefoil))
        for c in sch["connectors"]:
            ys = [pt[1] for pt in c["points"]]
            if c["page"] in ("P1", "P2"):
                assert min(ys) >= 0.5
            else:
                assert max(ys) <= -0.5

    def test_squares_disjoint(self, figure_eight):
        sch = ribbon_schematic(plan_for(figure_eight), gap=0.5)
        xs = sorted(s["x"] for s in sch["squares"])
        assert all(b - a >= 1.0 for a, b in zip(xs, xs[1:]))


def test_intersect_helper():
    assert intersects(((0, 0), (2, 2)), ((0, 2), (2, 0)))
    assert not intersects(((0, 0), (1, 0)), ((0, 1), (1, 1)))
    assert intersects(((0, 0), (2, 0)), ((1, 0), (3, 0)))
