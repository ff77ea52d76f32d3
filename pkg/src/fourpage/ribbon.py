"""Folded-ribbon plans from four-page presentations.

Every binding point becomes a unit square.  Arcs on opposite pages leave
the square collinearly (flat square, straight), arcs on adjacent pages meet
at a right angle (square folded along a diagonal).  The core length is the
number of squares plus ``epsilon`` per connection, so the ribbonlength
bound is the arc count.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .binding import OPPOSITE_PAIRS, PAGE_ORDER, CircularPresentation, verify
from .exceptions import InvalidPresentation, NonPositiveEpsilon

FOLD90 = "fold90"
STRAIGHT180 = "straight180"

UP_PAGES = ("P1", "P2")


def classify_turn(pages) -> str:
    a, b = pages
    if a == b:
        raise InvalidPresentation("both arcs at a station lie on page %s" % a)
    return STRAIGHT180 if frozenset(pages) in OPPOSITE_PAIRS else FOLD90


@dataclass(frozen=True)
class Station:
    edge: int
    turn: str
    pages: Tuple[str, str]
    diagonal: Optional[str] = None


@dataclass(frozen=True)
class RibbonPlan:
    components: Tuple[Tuple[Station, ...], ...]
    n_arcs: int
    epsilon: float = 1e-3
    width: float = 1.0
    presentation: Optional[CircularPresentation] = field(default=None, repr=False, compare=False)

    @property
    def stations(self) -> List[Station]:
        return [s for comp in self.components for s in comp]

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "epsilon": self.epsilon,
            "components": [
                [
                    {"edge": s.edge, "turn": s.turn, "pages": list(s.pages), "diagonal": s.diagonal}
                    for s in comp
                ]
                for comp in self.components
            ],
        }


@dataclass(frozen=True)
class RibbonBound:
    length: float
    ratio: float
    bound: int
    connections: int
    epsilon: float

    def to_dict(self) -> dict:
        return {
            "length": self.length,
            "ratio": self.ratio,
            "bound": self.bound,
            "connections": self.connections,
            "epsilon": self.epsilon,
        }


def _diagonal(pages) -> str:
    # same half-plane of the schematic -> "/", across the axis -> "\"
    same = (pages[0] in UP_PAGES) == (pages[1] in UP_PAGES)
    return "/" if same else "\\"


def ribbon_plan(p: CircularPresentation, epsilon: float = 1e-3) -> RibbonPlan:
    check = verify(p)
    if not check.valid:
        raise InvalidPresentation("presentation fails verification: %s" % "; ".join(check.problems))
    if epsilon <= 0:
        raise NonPositiveEpsilon("epsilon must be positive, got %r" % epsilon)
    inc = p.incidence()
    on_axis = set(inc)
    comps = []
    for strand in p.diagram.link_components():
        stations = []
        for e in strand:
            if e not in on_axis:
                continue
            pages = tuple(sorted(p.arcs[i].page for i in inc[e]))
            turn = classify_turn(pages)
            stations.append(Station(e, turn, pages, _diagonal(pages) if turn == FOLD90 else None))
        comps.append(tuple(stations))
    return RibbonPlan(tuple(comps), len(p.arcs), epsilon, presentation=p)


def ribbon_bound(plan: RibbonPlan, epsilon: Optional[float] = None) -> RibbonBound:
    """Length m + k * epsilon of the realised ribbon, reported bound m."""
    eps = plan.epsilon if epsilon is None else epsilon
    if eps <= 0:
        raise NonPositiveEpsilon("epsilon must be positive, got %r" % eps)
    m = len(plan.stations)
    k = plan.n_arcs
    length = m + k * eps
    return RibbonBound(length, length / plan.width, m, k, eps)


def _nesting_ranks(chords: List[Tuple[int, int, int]]) -> Dict[int, int]:
    """Height rank per arc: 1 + the largest rank of arcs nested strictly inside."""
    ranks = {}
    for i, a, b in sorted(chords, key=lambda c: c[2] - c[1]):
        inner = [ranks[j] for j, c, d in chords if j in ranks and a < c and d < b]
        ranks[i] = 1 + max(inner, default=0)
    return ranks


def ribbon_schematic(plan: RibbonPlan, gap: float = 1.0) -> dict:
    """Axis-aligned layout: squares along the binding axis, page lanes above and below.

    P1/P2 connectors run above the axis, P3/P4 below; within a page the
    nesting rank fixes the height, so same-page connectors never cross.
    """
    p = plan.presentation
    pitch = 1.0 + gap
    pos = p.position_of()
    station_of = {s.edge: s for s in plan.stations}
    squares = []
    for b in p.binding:
        s = station_of[b.edge]
        squares.append(
            {
                "edge": b.edge,
                "position": b.position,
                "x": b.position * pitch,
                "y": -0.5,
                "size": 1.0,
                "turn": s.turn,
                "diagonal": s.diagonal,
            }
        )
    chords: Dict[str, List[Tuple[int, int, int]]] = {pg: [] for pg in PAGE_ORDER}
    for i, arc in enumerate(p.arcs):
        a, b = sorted(pos[e] for e in arc.ends)
        chords[arc.page].append((i, a, b))
    offset = {"P1": 1 / 3, "P2": 2 / 3, "P3": 1 / 3, "P4": 2 / 3}
    connectors = []
    base = {"P1": 0.5, "P3": 0.5}
    ranks = {pg: _nesting_ranks(chords[pg]) for pg in PAGE_ORDER}
    base["P2"] = base["P1"] + max(ranks["P1"].values(), default=0) * 0.5 + 0.25
    base["P4"] = base["P3"] + max(ranks["P3"].values(), default=0) * 0.5 + 0.25
    for pg in PAGE_ORDER:
        sign = 1 if pg in UP_PAGES else -1
        for i, a, b in chords[pg]:
            h = sign * (base[pg] + ranks[pg][i] * 0.5)
            y0 = sign * 0.5
            xa = a * pitch + offset[pg]
            xb = b * pitch + offset[pg]
            connectors.append(
                {"arc": i, "page": pg, "points": [[xa, y0], [xa, h], [xb, h], [xb, y0]]}
            )
    connectors.sort(key=lambda c: c["arc"])
    return {"squares": squares, "connectors": connectors, "pitch": pitch}
