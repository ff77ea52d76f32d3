"""End-to-end pipeline: predicates, presentation, verification and bounds."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .binding import Alpha4Bound, alpha4_upper_bound, page_assignment, verify
from .diagram import (
    Diagram,
    compute_faces,
    is_alternating,
    is_nonsplit,
    is_reduced,
)
from .exceptions import SplitDiagram
from .ribbon import FOLD90, STRAIGHT180, RibbonBound, RibbonPlan, ribbon_bound, ribbon_plan

REPORT_SCHEMA_VERSION = 1


@dataclass
class PartResult:
    bound: Alpha4Bound
    plan: RibbonPlan
    rib: RibbonBound

    def to_dict(self) -> dict:
        b = self.bound
        p = b.presentation
        turns = [s.turn for s in self.plan.stations]
        return {
            "crossings": b.crossings,
            "alternating": is_alternating(p.diagram),
            "tree": b.tree.to_dict(),
            "binding_before_repair": b.unrepaired.n_binding,
            "arcs": b.arcs,
            "two_c": 2 * b.crossings,
            "strict": b.strict,
            "removed_binding_edges": list(p.removed),
            "verification": verify(p).to_dict(),
            "pages": page_assignment(p)["counts"],
            "turns": {FOLD90: turns.count(FOLD90), STRAIGHT180: turns.count(STRAIGHT180)},
            "rib_bound": self.rib.bound,
            "tour": b.tour.to_dict(),
            "presentation": p.to_dict(),
            "ribbon": self.plan.to_dict(),
        }


@dataclass
class Report:
    name: Optional[str]
    crossings: int
    predicates: Dict[str, bool]
    parts: List[PartResult]
    epsilon: float
    known: Dict[str, object] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def arcs(self) -> int:
        return sum(p.bound.arcs for p in self.parts)

    @property
    def rib_bound(self) -> int:
        return sum(p.rib.bound for p in self.parts)

    @property
    def strict(self) -> bool:
        return self.arcs < 2 * self.crossings

    @property
    def verified(self) -> bool:
        return all(verify(p.bound.presentation).valid for p in self.parts)

    @property
    def strictness_forced(self) -> Optional[bool]:
        flags = [
            not p.bound.tree.fallback
            for p in self.parts
            if p.bound.tree.strategy.startswith("strict")
        ]
        return all(flags) if flags else None

    def summary(self) -> dict:
        return {
            "name": self.name,
            "crossings": self.crossings,
            "two_c": 2 * self.crossings,
            "alternating": self.predicates["alternating"],
            "arcs": self.arcs,
            "strict": self.strict,
            "strictness_forced": self.strictness_forced,
            "rib_bound": self.rib_bound,
            "arc_index": self.known.get("arc_index"),
            "verified": self.verified,
        }

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "schema_version": REPORT_SCHEMA_VERSION,
            **self.summary(),
            "predicates": dict(self.predicates),
            "epsilon": self.epsilon,
            "ribbon_length": sum(p.rib.length for p in self.parts),
            "known": dict(self.known),
            "parts": [p.to_dict() for p in self.parts],
        }
        if timings:
            out["timings_ms"] = dict(self.timings)
        return out


def analyze(
    d: Diagram,
    tree: str = "auto",
    seed: Optional[int] = None,
    epsilon: float = 1e-3,
    componentwise: bool = False,
    unshaded_face: Optional[int] = None,
    known: Optional[dict] = None,
) -> Report:
    """Predicates, then the four-page construction on each non-split piece."""
    t0 = time.perf_counter()
    faces = compute_faces(d)
    predicates = {
        "nonsplit": is_nonsplit(d),
        "reduced": is_reduced(d, faces),
        "alternating": is_alternating(d),
    }
    t1 = time.perf_counter()
    if predicates["nonsplit"]:
        pieces = [d]
    elif componentwise:
        pieces = [d.subdiagram(ids) for ids in d.components()]
        unshaded_face = None
    else:
        raise SplitDiagram(
            "diagram has %d connected components (use componentwise mode)"
            % len(d.components())
        )
    parts = []
    for piece in pieces:
        b = alpha4_upper_bound(piece, tree=tree, seed=seed, unshaded_face=unshaded_face)
        plan = ribbon_plan(b.presentation, epsilon)
        parts.append(PartResult(b, plan, ribbon_bound(plan, epsilon)))
    t2 = time.perf_counter()
    return Report(
        d.name,
        d.crossing_number,
        predicates,
        parts,
        epsilon,
        known=dict(known or {}),
        timings={"predicates": 1e3 * (t1 - t0), "pipeline": 1e3 * (t2 - t1)},
    )
