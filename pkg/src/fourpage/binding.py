"""Circular four-page presentations built from a spanning-tree Euler tour.

The binding circle is kept purely combinatorial: a cyclic list of binding
points, one per edge of G(D) it crosses, and the arcs of D cut out between
them.  Crossings on tree edges lie inside the circle, cotree crossings
outside.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .diagram import (
    Diagram,
    FaceSet,
    Shading,
    checkerboard,
    compute_faces,
    is_alternating,
    is_nonsplit,
    nonalternating_edges,
    nugatory_crossings,
)
from .exceptions import (
    ComponentCollapse,
    NotNonAlternating,
    NotReduced,
    SplitDiagram,
)
from .state import (
    TREE_SIDE,
    EulerTour,
    SpanningTree,
    TaitGraph,
    build_tait,
    euler_tour,
    kauffman_state,
    spanning_tree,
    trace_circles,
)

SCHEMA_VERSION = 1

INSIDE = "inside"
OUTSIDE = "outside"
OVER = "over"
UNDER = "under"

PAGES = {
    (INSIDE, OVER): "P1",
    (OUTSIDE, OVER): "P2",
    (INSIDE, UNDER): "P3",
    (OUTSIDE, UNDER): "P4",
}
PAGE_ORDER = ("P1", "P2", "P3", "P4")
OPPOSITE_PAIRS = (frozenset({"P1", "P3"}), frozenset({"P2", "P4"}))


def pass_at(position: int) -> str:
    return UNDER if position % 2 == 0 else OVER


@dataclass(frozen=True)
class BindingPoint:
    edge: int
    position: int


@dataclass(frozen=True)
class CutArc:
    """A piece of D between two binding points.

    ``path`` lists the edges walked from ``ends[0]`` to ``ends[1]``
    inclusive; ``crossings[k]`` sits between ``path[k]`` and ``path[k+1]``.
    """

    crossings: Tuple[int, ...]
    path: Tuple[int, ...]
    side: str
    pass_: str

    @property
    def ends(self) -> Tuple[int, int]:
        return self.path[0], self.path[-1]

    @property
    def type(self) -> Tuple[str, str]:
        return self.side, self.pass_

    @property
    def page(self) -> str:
        return PAGES[self.type]

    def reversed(self) -> "CutArc":
        return CutArc(self.crossings[::-1], self.path[::-1], self.side, self.pass_)


@dataclass(frozen=True)
class CircularPresentation:
    diagram: Diagram = field(repr=False)
    binding: Tuple[BindingPoint, ...]
    arcs: Tuple[CutArc, ...]
    side: Dict[int, str]
    tree: Optional[dict] = None
    removed: Tuple[int, ...] = ()

    @property
    def page(self) -> Dict[Tuple[str, str], str]:
        return dict(PAGES)

    @property
    def n_binding(self) -> int:
        return len(self.binding)

    def position_of(self) -> Dict[int, int]:
        return {b.edge: b.position for b in self.binding}

    def incidence(self) -> Dict[int, List[int]]:
        """Binding edge -> indices of the arcs ending there (one entry per arc end)."""
        inc: Dict[int, List[int]] = {b.edge: [] for b in self.binding}
        for i, arc in enumerate(self.arcs):
            for e in arc.ends:
                inc.setdefault(e, []).append(i)
        return inc

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "name": self.diagram.name,
            "binding": [{"edge": b.edge, "position": b.position} for b in self.binding],
            "arcs": [
                {
                    "id": i,
                    "ends": list(a.ends),
                    "path": list(a.path),
                    "crossings": list(a.crossings),
                    "side": a.side,
                    "pass": a.pass_,
                    "page": a.page,
                }
                for i, a in enumerate(self.arcs)
            ],
            "crossing_side": {str(x): self.side[x] for x in sorted(self.side)},
            "pages": {"%s,%s" % k: v for k, v in PAGES.items()},
            "tree": self.tree,
            "removed_binding_edges": list(self.removed),
        }


def build_presentation(
    d: Diagram, tour: EulerTour, tree: Optional[SpanningTree] = None
) -> CircularPresentation:
    """One binding point per edge in tour order; two single-crossing arcs per crossing."""
    binding = tuple(BindingPoint(e, i) for i, e in enumerate(tour.edges))
    side = {x: INSIDE if s == TREE_SIDE else OUTSIDE for x, s in tour.side.items()}
    arcs = []
    for x in d.crossings:
        for a, b in ((0, 2), (1, 3)):
            arcs.append(
                CutArc((x.id,), (x.quad[a], x.quad[b]), side[x.id], pass_at(a))
            )
    return CircularPresentation(
        d, binding, tuple(arcs), side, tree.to_dict() if tree is not None else None
    )


# -- verification -------------------------------------------------------------

@dataclass(frozen=True)
class Verification:
    condition1: bool
    condition2: bool
    condition3: bool
    sides_nonempty: bool
    noncrossing_per_page: bool
    problems: Tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return all(
            (
                self.condition1,
                self.condition2,
                self.condition3,
                self.sides_nonempty,
                self.noncrossing_per_page,
            )
        )

    def to_dict(self) -> dict:
        return {
            "condition1": self.condition1,
            "condition2": self.condition2,
            "condition3": self.condition3,
            "sides_nonempty": self.sides_nonempty,
            "noncrossing_per_page": self.noncrossing_per_page,
            "valid": self.valid,
            "problems": list(self.problems),
        }


def _interleaved(a, b, c, d) -> bool:
    if len({a, b, c, d}) < 4:
        return False
    a, b = min(a, b), max(a, b)
    return (a < c < b) != (a < d < b)


def _walk_strand(d: Diagram, arc: CutArc) -> Optional[List[Tuple[int, int]]]:
    """Check that ``arc.path`` is a walk straight through ``arc.crossings``.

    Returns the (crossing, entry position) list or None on mismatch.
    """
    steps = []
    for k, x in enumerate(arc.crossings):
        quad = d.crossings[x].quad
        e_in, e_out = arc.path[k], arc.path[k + 1]
        found = None
        for pos in range(4):
            if quad[pos] == e_in and quad[(pos + 2) % 4] == e_out:
                found = pos
                break
        if found is None:
            return None
        steps.append((x, found))
    return steps


def verify(p: CircularPresentation) -> Verification:
    """Evaluate each binding-circle condition separately; never raises."""
    d = p.diagram
    problems = []

    # (1): finitely many transverse points, at most one per edge, and the arcs
    # cut out between them account for every strand of every crossing once.
    cond1 = True
    edges = [b.edge for b in p.binding]
    if len(set(edges)) != len(edges):
        cond1 = False
        problems.append("an edge carries more than one binding point")
    if not set(edges) <= set(d.edges):
        cond1 = False
        problems.append("binding point on an unknown edge")
    if [b.position for b in p.binding] != list(range(len(p.binding))):
        cond1 = False
        problems.append("binding positions are not 0..n-1 in cyclic order")
    inc = p.incidence()
    for e, ends in inc.items():
        if e not in set(edges) or len(ends) != 2:
            cond1 = False
            problems.append("binding edge %d is the end of %d arcs" % (e, len(ends)))
    if len(p.arcs) != len(p.binding):
        cond1 = False
        problems.append("arc count %d != binding count %d" % (len(p.arcs), len(p.binding)))
    strands = []
    walks = []
    for i, arc in enumerate(p.arcs):
        steps = _walk_strand(d, arc)
        walks.append(steps)
        if steps is None:
            cond1 = False
            problems.append("arc %d does not follow the diagram" % i)
            continue
        if any(e in set(edges) for e in arc.path[1:-1]):
            cond1 = False
            problems.append("arc %d runs through a binding point" % i)
        strands.extend((x, pos % 2) for x, pos in steps)
    if sorted(strands) != sorted((x.id, k) for x in d.crossings for k in (0, 1)):
        cond1 = False
        problems.append("crossing strands not covered exactly once")

    # (2): each arc on one side, and only over- or only under-crossings.
    cond2 = True
    for i, (arc, steps) in enumerate(zip(p.arcs, walks)):
        if steps is None:
            cond2 = False
            continue
        if any(p.side[x] != arc.side for x in arc.crossings):
            cond2 = False
            problems.append("arc %d has crossings on both sides" % i)
        if any(pass_at(pos) != arc.pass_ for _, pos in steps):
            cond2 = False
            problems.append("arc %d mixes over and under passes" % i)

    # (3): the two arcs meeting at a binding point have different types.
    cond3 = True
    for e in edges:
        ends = inc.get(e, [])
        if len(ends) == 2 and p.arcs[ends[0]].type == p.arcs[ends[1]].type:
            cond3 = False
            problems.append("same-type arcs meet at binding edge %d" % e)

    sides = set(p.side.values())
    sides_nonempty = INSIDE in sides and OUTSIDE in sides
    if not sides_nonempty:
        problems.append("all crossings lie on one side of the binding circle")

    pos = p.position_of()
    noncrossing = True
    by_page: Dict[str, List[Tuple[int, int]]] = {}
    for i, arc in enumerate(p.arcs):
        a, b = arc.ends
        if a in pos and b in pos:
            by_page.setdefault(arc.page, []).append((i, pos[a], pos[b]))
    for page, chords in by_page.items():
        for k, (i, a, b) in enumerate(chords):
            for j, c, dd in chords[k + 1:]:
                if _interleaved(a, b, c, dd):
                    noncrossing = False
                    problems.append("arcs %d and %d cross on page %s" % (i, j, page))

    return Verification(cond1, cond2, cond3, sides_nonempty, noncrossing, tuple(problems))


# -- repair -------------------------------------------------------------------

def violations(p: CircularPresentation) -> List[int]:
    """Binding edges whose two incident arcs share a type, lowest label first."""
    out = []
    for e, ends in sorted(p.incidence().items()):
        if len(ends) == 2 and p.arcs[ends[0]].type == p.arcs[ends[1]].type:
            out.append(e)
    return out


def remove_binding_point(p: CircularPresentation, edge: int) -> CircularPresentation:
    """Drop the binding point on ``edge`` and merge its two same-type arcs."""
    i, j = p.incidence()[edge]
    if i == j:
        raise ComponentCollapse(
            "removing the binding point on edge %d would leave a link component "
            "with no binding point" % edge
        )
    a, b = p.arcs[i], p.arcs[j]
    if a.type != b.type:
        raise ValueError("arcs at edge %d have different types" % edge)
    if a.path[-1] != edge:
        a = a.reversed()
    if b.path[0] != edge:
        b = b.reversed()
    merged = CutArc(a.crossings + b.crossings, a.path + b.path[1:], a.side, a.pass_)
    arcs = [arc for k, arc in enumerate(p.arcs) if k not in (i, j)]
    arcs.insert(min(i, j), merged)
    remaining = [bp.edge for bp in p.binding if bp.edge != edge]
    binding = tuple(BindingPoint(e, k) for k, e in enumerate(remaining))
    return CircularPresentation(
        p.diagram, binding, tuple(arcs), p.side, p.tree, p.removed + (edge,)
    )


def repair_nonalternating(p: CircularPresentation) -> CircularPresentation:
    while True:
        bad = violations(p)
        if not bad:
            return p
        p = remove_binding_point(p, bad[0])


def page_assignment(p: CircularPresentation) -> Dict[str, object]:
    """Pages of every arc, the page pair at each binding point and per-page counts."""
    arc_pages = [arc.page for arc in p.arcs]
    inc = p.incidence()
    at_point = {b.edge: tuple(arc_pages[i] for i in inc[b.edge]) for b in p.binding}
    counts = {pg: arc_pages.count(pg) for pg in PAGE_ORDER}
    return {"arcs": arc_pages, "binding": at_point, "counts": counts}


# -- strictness and the full bound --------------------------------------------

def choose_tree_for_strictness(d: Diagram, g: TaitGraph) -> SpanningTree:
    """Find a tree putting both ends of some non-alternating edge on one side.

    Excluding both Tait edges is tried before including both.  If no
    non-alternating edge admits either, the default tree comes back with
    ``fallback`` set (strictness not forced).
    """
    bad_edges = nonalternating_edges(d)
    if not bad_edges:
        raise NotNonAlternating("diagram is alternating")
    for e in bad_edges:
        (x, _), (y, _) = d.half_edges[e]
        if x == y:
            continue
        for how in ("avoid", "force"):
            t = spanning_tree(g, how, edges=(x, y))
            if not t.fallback:
                return SpanningTree(t.edges, g, "strict:%s:edge=%d" % (t.strategy, e))
    t = spanning_tree(g)
    return SpanningTree(t.edges, g, "strict:not-forced", fallback=True)


@dataclass(frozen=True)
class Alpha4Bound:
    arcs: int
    strict: bool
    presentation: CircularPresentation
    unrepaired: CircularPresentation = field(repr=False)
    tree: SpanningTree = field(repr=False)
    tait: TaitGraph = field(repr=False)
    tour: EulerTour = field(repr=False)
    faces: FaceSet = field(repr=False)
    shading: Shading = field(repr=False)

    @property
    def crossings(self) -> int:
        return self.presentation.diagram.crossing_number


def choose_tree(d: Diagram, g: TaitGraph, tree: str = "auto", seed: Optional[int] = None):
    if tree == "auto":
        tree = "default" if is_alternating(d) else "strict"
    if tree == "strict":
        return choose_tree_for_strictness(d, g)
    if tree == "default":
        return spanning_tree(g)
    if tree == "random":
        return spanning_tree(g, "random", seed=seed)
    raise ValueError("unknown tree choice %r" % tree)


def check_pipeline_input(d: Diagram, faces: FaceSet) -> None:
    if not is_nonsplit(d):
        raise SplitDiagram("diagram has %d connected components" % len(d.components()))
    bad = nugatory_crossings(d, faces)
    if bad:
        raise NotReduced("nugatory crossings: %s" % bad, bad)


def presentation_for_tree(d: Diagram, t: SpanningTree) -> Tuple[EulerTour, CircularPresentation]:
    circles = trace_circles(d, kauffman_state(d, t))
    tour = euler_tour(circles, t)
    return tour, build_presentation(d, tour, t)


def alpha4_upper_bound(
    d: Diagram,
    tree: str = "auto",
    seed: Optional[int] = None,
    unshaded_face: Optional[int] = None,
) -> Alpha4Bound:
    """Run shading -> Tait graph -> tree -> state -> tour -> presentation -> repair.

    ``tree`` is ``auto`` (strictness search on non-alternating input,
    Kruskal otherwise), ``default``, ``strict`` or ``random`` with ``seed``.
    """
    faces = compute_faces(d)
    check_pipeline_input(d, faces)
    shading = checkerboard(d, faces, unshaded_face)
    g = build_tait(d, faces, shading)
    t = choose_tree(d, g, tree, seed)
    tour, raw = presentation_for_tree(d, t)
    fixed = repair_nonalternating(raw)
    return Alpha4Bound(
        arcs=fixed.n_binding,
        strict=fixed.n_binding < 2 * d.crossing_number,
        presentation=fixed,
        unrepaired=raw,
        tree=t,
        tait=g,
        tour=tour,
        faces=faces,
        shading=shading,
    )
