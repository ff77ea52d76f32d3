"""Brute-force cross-checks for the construction.

These deliberately avoid the code paths they certify: circle counts come
from a union-find over half-edges rather than a walk, tree counts from the
Kirchhoff determinant, nugatory crossings from connectivity after
smoothing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple

import numpy as np

from .binding import INSIDE, OUTSIDE, presentation_for_tree, repair_nonalternating, verify
from .diagram import SHADED, Diagram, FaceSet, Shading, checkerboard, compute_faces
from .exceptions import CapExceeded
from .state import (
    SHADED_CONNECTING,
    UNSHADED_CONNECTING,
    KauffmanState,
    TaitGraph,
    build_tait,
    enumerate_spanning_trees,
    kauffman_state,
    smoothing_pairing,
    state_from_smoothings,
)

MAX_STATE_CROSSINGS = 12


class _DSU:
    def __init__(self, items):
        self.p = {i: i for i in items}

    def find(self, i):
        while self.p[i] != i:
            self.p[i] = self.p[self.p[i]]
            i = self.p[i]
        return i

    def union(self, a, b):
        self.p[self.find(a)] = self.find(b)

    def classes(self) -> int:
        return len({self.find(i) for i in self.p})


def matrix_tree_count(g: TaitGraph) -> int:
    """Number of spanning trees via a cofactor of the multigraph Laplacian."""
    idx = {v: i for i, v in enumerate(g.vertices)}
    n = len(idx)
    if n == 1:
        return 1
    lap = np.zeros((n, n))
    for u, v in g.edges.values():
        if u == v:
            continue
        i, j = idx[u], idx[v]
        lap[i, i] += 1
        lap[j, j] += 1
        lap[i, j] -= 1
        lap[j, i] -= 1
    return int(round(np.linalg.det(lap[1:, 1:])))


def circle_count(d: Diagram, state: KauffmanState) -> int:
    """State circles as union-find classes of half-edges."""
    halves = [(x.id, i) for x in d.crossings for i in range(4)]
    dsu = _DSU(halves)
    for h, k in d.partner.items():
        dsu.union(h, k)
    for x, pairs in state.pairing.items():
        for i, j in pairs.items():
            dsu.union((x, i), (x, j))
    return dsu.classes()


def circle_count_formula(g: TaitGraph, shaded_connecting) -> int:
    """Boundary circles of the shaded disks banded along ``shaded_connecting``.

    A planar surface with k components and |A| - |V| + k independent cycles
    has 2k + |A| - |V| boundary circles.
    """
    dsu = _DSU(g.vertices)
    for x in shaded_connecting:
        dsu.union(*g.edges[x])
    k = dsu.classes()
    return 2 * k + len(shaded_connecting) - len(g.vertices)


def is_spanning_tree(g: TaitGraph, edge_set) -> bool:
    if len(edge_set) != len(g.vertices) - 1:
        return False
    dsu = _DSU(g.vertices)
    for x in edge_set:
        u, v = g.edges[x]
        if dsu.find(u) == dsu.find(v):
            return False
        dsu.union(u, v)
    return True


def nugatory_oracle(d: Diagram) -> List[int]:
    """Crossings where some smoothing splits the diagram.

    Edges are joined at every other crossing; at ``x`` only the smoothing's
    strand pairs are joined.  A nugatory crossing disconnects under one of
    its two smoothings.
    """
    out = []
    for x in d.crossings:
        for pairs in (((0, 1), (2, 3)), ((1, 2), (3, 0))):
            dsu = _DSU(d.edges)
            for y in d.crossings:
                if y.id == x.id:
                    for i, j in pairs:
                        dsu.union(y.quad[i], y.quad[j])
                else:
                    for lbl in y.quad[1:]:
                        dsu.union(y.quad[0], lbl)
            if dsu.classes() > 1:
                out.append(x.id)
                break
    return out


def face_walks_with_smoothing(
    d: Diagram, faces: FaceSet, shading: Shading, smoothed: Dict[int, Dict[int, int]]
) -> Tuple[int, int]:
    """(shaded, unshaded) boundary-walk counts after smoothing some crossings.

    Departure half-edge h is followed by rot(partner(h)), where rot is the
    counterclockwise successor at an intact crossing and the smoothing
    partner at a smoothed one.  Colours are read off the corner entered on
    arrival and must agree along each walk.
    """
    def succ(h):
        y, j = d.partner[h]
        if y in smoothed:
            return (y, smoothed[y][j])
        return (y, (j + 1) % 4)

    seen = set()
    shaded = unshaded = 0
    for x in d.crossings:
        for i in range(4):
            h = (x.id, i)
            if h in seen:
                continue
            colors = set()
            while h not in seen:
                seen.add(h)
                y, j = d.partner[h]
                colors.add(shading.color[faces.face_at(y, j)])
                h = succ(h)
            if len(colors) != 1:
                raise AssertionError("face walk mixes colours")
            if colors.pop() == SHADED:
                shaded += 1
            else:
                unshaded += 1
    return shaded, unshaded


def smoothing_semantics(d: Diagram, faces: FaceSet, shading: Shading, g: TaitGraph) -> Dict[int, bool]:
    """Per crossing: shaded-connecting drops the shaded count by one and
    unshaded-connecting drops the unshaded count by one."""
    s0, u0 = face_walks_with_smoothing(d, faces, shading, {})
    out = {}
    for x in d.crossings:
        ok = True
        for kind, expect in (
            (SHADED_CONNECTING, (s0 - 1, u0)),
            (UNSHADED_CONNECTING, (s0, u0 - 1)),
        ):
            pairs = smoothing_pairing(g.shaded_corners[x.id], kind)
            got = face_walks_with_smoothing(d, faces, shading, {x.id: pairs})
            ok = ok and got == expect
        out[x.id] = ok
    return out


@dataclass
class TreeCheck:
    tree: Tuple[int, ...]
    circles: int
    tour_covers: bool
    sides_nonempty: bool
    valid: bool
    arcs: int
    bound_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.circles == 1
            and self.tour_covers
            and self.sides_nonempty
            and self.valid
            and self.bound_ok
        )


@dataclass
class OracleReport:
    name: Optional[str]
    mode: str
    crossings: int
    tree_count: int
    matrix_tree: int
    trees: List[TreeCheck] = field(default_factory=list)
    states_traced: int = 0
    single_circle_states: int = 0
    tree_states_single: bool = True
    single_iff_tree: bool = True
    formula_agrees: bool = True
    smoothing_semantics: bool = True

    @property
    def passed(self) -> bool:
        return (
            all(t.passed for t in self.trees)
            and self.tree_count == self.matrix_tree
            and self.tree_states_single
            and self.single_iff_tree
            and self.formula_agrees
            and self.smoothing_semantics
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "mode": self.mode,
            "crossings": self.crossings,
            "tree_count": self.tree_count,
            "matrix_tree_count": self.matrix_tree,
            "trees_passed": sum(t.passed for t in self.trees),
            "trees_checked": len(self.trees),
            "states_traced": self.states_traced,
            "single_circle_states": self.single_circle_states,
            "tree_states_single": self.tree_states_single,
            "single_iff_tree": self.single_iff_tree,
            "formula_agrees": self.formula_agrees,
            "smoothing_semantics": self.smoothing_semantics,
            "passed": self.passed,
        }


def check_tree(d: Diagram, tree) -> TreeCheck:
    state = kauffman_state(d, tree)
    n = circle_count(d, state)
    if n != 1:
        return TreeCheck(tuple(sorted(tree.edges)), n, False, False, False, 0, False)
    tour, raw = presentation_for_tree(d, tree)
    fixed = repair_nonalternating(raw)
    sides = set(fixed.side.values())
    return TreeCheck(
        tuple(sorted(tree.edges)),
        n,
        sorted(tour.edges) == list(d.edges),
        INSIDE in sides and OUTSIDE in sides,
        verify(fixed).valid,
        fixed.n_binding,
        fixed.n_binding <= 2 * d.crossing_number,
    )


def run_oracle(
    d: Diagram,
    mode: str = "all-trees",
    cap: int = 10000,
    unshaded_face: Optional[int] = None,
) -> OracleReport:
    """Exhaustive certification over every spanning tree (and, in ``states``
    mode, every one of the 2^c smoothing assignments)."""
    if mode not in ("all-trees", "states"):
        raise ValueError("unknown oracle mode %r" % mode)
    faces = compute_faces(d)
    shading = checkerboard(d, faces, unshaded_face)
    g = build_tait(d, faces, shading)
    expected = matrix_tree_count(g)
    if expected > cap:
        raise CapExceeded("%d spanning trees exceed the cap of %d" % (expected, cap))
    trees = enumerate_spanning_trees(g, cap=cap)
    report = OracleReport(d.name, mode, d.crossing_number, len(trees), expected)
    report.trees = [check_tree(d, t) for t in trees]
    report.smoothing_semantics = all(smoothing_semantics(d, faces, shading, g).values())
    if mode == "states":
        c = d.crossing_number
        if c > MAX_STATE_CROSSINGS:
            raise CapExceeded("states mode is limited to %d crossings" % MAX_STATE_CROSSINGS)
        tree_sets = {frozenset(t.edges) for t in trees}
        ids = [x.id for x in d.crossings]
        single = set()
        for bits in product((False, True), repeat=c):
            chosen = frozenset(x for x, b in zip(ids, bits) if b)
            smoothing = {
                x: SHADED_CONNECTING if x in chosen else UNSHADED_CONNECTING for x in ids
            }
            n = circle_count(d, state_from_smoothings(g, smoothing))
            report.states_traced += 1
            if n != circle_count_formula(g, chosen):
                report.formula_agrees = False
            if n == 1:
                single.add(chosen)
        report.single_circle_states = len(single)
        report.tree_states_single = tree_sets <= single
        report.single_iff_tree = single == tree_sets and all(
            is_spanning_tree(g, s) for s in single
        )
    return report
