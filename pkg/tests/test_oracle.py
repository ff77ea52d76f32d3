import pytest

from conftest import FIXTURES, SMALL, fixture_ids
from fourpage.diagram import checkerboard, compute_faces
from fourpage.exceptions import CapExceeded
from fourpage.fixtures import get_fixture
from fourpage.oracle import (
    circle_count_formula,
    is_spanning_tree,
    matrix_tree_count,
    run_oracle,
)
from fourpage.state import TaitGraph, build_tait


def graph(n, edges):
    return TaitGraph(tuple(range(n)), dict(enumerate(edges)), {})


class TestMatrixTree:
    @pytest.mark.parametrize(
        "n,edges,count",
        [
            (2, [(0, 1)] * 3, 3),
            (3, [(0, 1), (1, 2), (2, 0)], 3),
            (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 16),  # K4: 4^(4-2)
            (1, [], 1),
        ],
    )
    def test_counts(self, n, edges, count):
        assert matrix_tree_count(graph(n, edges)) == count

    def test_loops_ignored(self):
        assert matrix_tree_count(graph(2, [(0, 0), (0, 1)])) == 1

    def test_is_spanning_tree(self):
        g = graph(3, [(0, 1), (1, 2), (2, 0)])
        assert is_spanning_tree(g, {0, 1})
        assert not is_spanning_tree(g, {0})
        assert not is_spanning_tree(g, {0, 1, 2})


def test_circle_formula_on_theta():
    g = graph(2, [(0, 1)] * 3)
    # 2 k(A) + |A| - |V|
    assert circle_count_formula(g, set()) == 2 * 2 + 0 - 2
    assert circle_count_formula(g, {0}) == 1
    assert circle_count_formula(g, {0, 1, 2}) == 2 + 3 - 2


class TestRunOracle:
    def test_trefoil(self, trefoil):
        rep = run_oracle(trefoil)
        info = rep.to_dict()
        assert rep.passed
        assert info["trees_passed"] == info["tree_count"] == 3

    def test_hopf_states(self, hopf):
        rep = run_oracle(hopf, mode="states")
        assert rep.passed
        assert rep.states_traced == 4
        assert rep.single_circle_states == 2

    @pytest.mark.parametrize("fx", SMALL, ids=fixture_ids(SMALL))
    def test_states_small(self, fx):
        rep = run_oracle(fx.diagram, mode="states")
        assert rep.passed
        assert rep.states_traced == 2 ** fx.diagram.crossing_number
        assert rep.single_circle_states == rep.tree_count

    @pytest.mark.parametrize("fx", FIXTURES, ids=fixture_ids(FIXTURES))
    def test_all_trees(self, fx):
        rep = run_oracle(fx.diagram)
        assert rep.passed
        assert all(t.arcs <= 2 * fx.diagram.crossing_number for t in rep.trees)

    def test_other_shading(self, figure_eight):
        faces = compute_faces(figure_eight)
        s = checkerboard(figure_eight, faces)
        other = next(iter(s.shaded))
        rep = run_oracle(figure_eight, unshaded_face=other)
        g = build_tait(figure_eight, faces, s.swapped())
        assert rep.passed and rep.tree_count == matrix_tree_count(g)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            run_oracle(get_fixture("K12a1").diagram, cap=10)

    def test_bad_mode(self, trefoil):
        with pytest.raises(ValueError):
            run_oracle(trefoil, mode="nope")
