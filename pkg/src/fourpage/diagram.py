"""PD-coded link diagrams as 4-valent plane graphs.

A crossing is a 4-tuple of edge labels listed counterclockwise starting from
the incoming under-strand, so positions 0/2 carry the under-strand and
positions 1/3 the over-strand.  The counterclockwise order is the rotation
system used for face tracing.

Corner ``(x, i)`` of crossing ``x`` is the sector between positions ``i`` and
``i + 1`` (mod 4).
"""
from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exceptions import (
    EmptyDiagram,
    LabelCountError,
    MalformedRecord,
    NonPlanarTrace,
    NotBipartite,
)

HalfEdge = Tuple[int, int]  # (crossing id, quad position)
Corner = Tuple[int, int]

SHADED = "shaded"
UNSHADED = "unshaded"


@dataclass(frozen=True)
class Crossing:
    id: int
    quad: Tuple[int, int, int, int]

    @property
    def under(self) -> Tuple[int, int]:
        return self.quad[0], self.quad[2]

    @property
    def over(self) -> Tuple[int, int]:
        return self.quad[1], self.quad[3]


@dataclass(frozen=True)
class Diagram:
    crossings: Tuple[Crossing, ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if not self.crossings:
            raise EmptyDiagram("diagram has no crossings")
        counts = Counter(label for x in self.crossings for label in x.quad)
        bad = sorted(label for label, n in counts.items() if n != 2)
        if bad:
            raise LabelCountError(
                "edge labels must occur exactly twice; offending: %s" % bad, bad
            )

    @classmethod
    def from_pd(cls, pd: Iterable[Sequence[int]], name: Optional[str] = None) -> "Diagram":
        crossings = []
        for i, quad in enumerate(pd):
            quad = tuple(quad)
            if len(quad) != 4:
                raise MalformedRecord("crossing %d has %d labels, expected 4" % (i, len(quad)))
            crossings.append(Crossing(i, quad))
        return cls(tuple(crossings), name=name)

    @property
    def pd(self) -> List[List[int]]:
        return [list(x.quad) for x in self.crossings]

    @property
    def crossing_number(self) -> int:
        """Number of crossings of this diagram, c(D)."""
        return len(self.crossings)

    @cached_property
    def edges(self) -> Tuple[int, ...]:
        return tuple(sorted({label for x in self.crossings for label in x.quad}))

    @cached_property
    def half_edges(self) -> Dict[int, Tuple[HalfEdge, HalfEdge]]:
        """Edge label -> its two ends, in (crossing, position) order."""
        ends: Dict[int, List[HalfEdge]] = {}
        for x in self.crossings:
            for pos, label in enumerate(x.quad):
                ends.setdefault(label, []).append((x.id, pos))
        return {label: (a, b) for label, (a, b) in ends.items()}

    @cached_property
    def partner(self) -> Dict[HalfEdge, HalfEdge]:
        """Other end of the edge leaving through the given half-edge."""
        out = {}
        for a, b in self.half_edges.values():
            out[a] = b
            out[b] = a
        return out

    def label(self, h: HalfEdge) -> int:
        return self.crossings[h[0]].quad[h[1]]

    def components(self) -> List[Tuple[int, ...]]:
        """Connected components of G(D) as sorted tuples of crossing ids."""
        parent = list(range(len(self.crossings)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for (xa, _), (xb, _) in self.half_edges.values():
            ra, rb = find(xa), find(xb)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups: Dict[int, List[int]] = {}
        for x in range(len(self.crossings)):
            groups.setdefault(find(x), []).append(x)
        return [tuple(g) for _, g in sorted(groups.items())]

    def subdiagram(self, crossing_ids: Sequence[int]) -> "Diagram":
        ids = sorted(crossing_ids)
        return Diagram.from_pd(
            [self.crossings[i].quad for i in ids], name=self.name
        )

    def link_components(self) -> List[Tuple[int, ...]]:
        """Strands of the link, each as the cyclic list of edge labels it runs through.

        The walk goes straight through every crossing (position i to i + 2).
        """
        seen = set()
        comps = []
        for start in self.edges:
            if start in seen:
                continue
            h = self.half_edges[start][0]
            walk = []
            while True:
                lbl = self.label(h)
                if lbl in seen:
                    break
                seen.add(lbl)
                walk.append(lbl)
                x, pos = self.partner[h]
                h = (x, (pos + 2) % 4)
            comps.append(tuple(walk))
        return comps

    def relabel(self, mapping: Dict[int, int]) -> "Diagram":
        return Diagram.from_pd(
            [[mapping[label] for label in x.quad] for x in self.crossings], name=self.name
        )


@dataclass(frozen=True)
class FaceSet:
    faces: Tuple[Tuple[Corner, ...], ...]
    corner_map: Dict[Corner, int]

    def __len__(self):
        return len(self.faces)

    def face_at(self, crossing: int, corner: int) -> int:
        return self.corner_map[(crossing, corner % 4)]

    def degree(self, face: int) -> int:
        return len(self.faces[face])


@dataclass(frozen=True)
class Shading:
    color: Dict[int, str]

    @property
    def shaded(self) -> List[int]:
        return sorted(f for f, c in self.color.items() if c == SHADED)

    @property
    def unshaded(self) -> List[int]:
        return sorted(f for f, c in self.color.items() if c == UNSHADED)

    def swapped(self) -> "Shading":
        flip = {SHADED: UNSHADED, UNSHADED: SHADED}
        return Shading({f: flip[c] for f, c in self.color.items()})

    def shaded_corners(self, faces: FaceSet, crossing: int) -> Tuple[int, int]:
        """The opposite corner pair at ``crossing`` lying in shaded faces."""
        if self.color[faces.face_at(crossing, 0)] == SHADED:
            return (0, 2)
        return (1, 3)


# -- parsing ---------------------------------------------------------------

_PD_WRAPPED = re.compile(r"^\s*PD\s*\[(.*)\]\s*$", re.S)
_X_BRACKET = re.compile(r"X\s*\[([^\]]*)\]")


def _ints(fields, record):
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise MalformedRecord("non-integer label in record %r" % record) from None


def parse_pd(text: str, name: Optional[str] = None) -> Diagram:
    """Parse ``X a b c d`` records or ``PD[X[a,b,c,d], ...]`` notation.

    Records may be separated by ``;`` or newlines; ``#`` starts a comment.
    """
    text = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    quads = []
    m = _PD_WRAPPED.match(text)
    if m:
        body = m.group(1)
        records = _X_BRACKET.findall(body)
        leftover = _X_BRACKET.sub("", body).replace(",", "").strip()
        if leftover:
            raise MalformedRecord("unexpected text in PD notation: %r" % leftover)
        for rec in records:
            fields = [f for f in re.split(r"[\s,]+", rec.strip()) if f]
            if len(fields) != 4:
                raise MalformedRecord("X[%s] has %d labels, expected 4" % (rec, len(fields)))
            quads.append(_ints(fields, rec))
    else:
        for rec in re.split(r"[;\n]", text):
            fields = rec.replace(",", " ").split()
            if not fields:
                continue
            if fields[0] != "X" or len(fields) != 5:
                raise MalformedRecord("expected 'X a b c d', got %r" % rec.strip())
            quads.append(_ints(fields[1:], rec))
    if not quads:
        raise EmptyDiagram("diagram has no crossings")
    return Diagram.from_pd(quads, name=name)


def loads(text: str, name: Optional[str] = None) -> Diagram:
    """Parse either the JSON diagram schema or plain PD text."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedRecord("invalid JSON: %s" % exc) from None
        return diagram_from_json(obj)
    return parse_pd(text, name=name)


def diagram_from_json(obj: dict) -> Diagram:
    if "pd" not in obj or not isinstance(obj["pd"], list):
        raise MalformedRecord("JSON diagram needs a 'pd' list")
    quads = []
    for rec in obj["pd"]:
        if not isinstance(rec, list) or len(rec) != 4:
            raise MalformedRecord("pd record %r is not a 4-element list" % (rec,))
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in rec):
            raise MalformedRecord("non-integer label in record %r" % (rec,))
        quads.append(rec)
    if not quads:
        raise EmptyDiagram("diagram has no crossings")
    return Diagram.from_pd(quads, name=obj.get("name"))


def dumps_pd(d: Diagram) -> str:
    return "\n".join("X %d %d %d %d" % x.quad for x in d.crossings) + "\n"


def diagram_to_json(d: Diagram) -> dict:
    return {"name": d.name, "pd": d.pd}


# -- planar structure -------------------------------------------------------

def compute_faces(d: Diagram) -> FaceSet:
    """Trace faces of the plane graph from the counterclockwise rotation system.

    From corner (x, i) leave along position i + 1; arriving at (y, j) the
    face continues in corner (y, j).
    """
    corner_map: Dict[Corner, int] = {}
    faces = []
    for x in d.crossings:
        for i in range(4):
            if (x.id, i) in corner_map:
                continue
            fid = len(faces)
            walk = []
            corner = (x.id, i)
            while corner not in corner_map:
                corner_map[corner] = fid
                walk.append(corner)
                cx, ci = corner
                corner = d.partner[(cx, (ci + 1) % 4)]
            if corner != (x.id, i):
                raise NonPlanarTrace("face walk did not close at its start corner")
            faces.append(tuple(walk))
    n_comp = len(d.components())
    # Each component is traced as its own sphere, so every component
    # contributes V - E + F = 2 (the shared outer face is counted per component).
    expected = 2 * n_comp - d.crossing_number + len(d.edges)
    if len(faces) != expected:
        raise NonPlanarTrace(
            "Euler characteristic check failed: %d faces, expected %d "
            "(invalid or non-planar PD code)" % (len(faces), expected)
        )
    return FaceSet(tuple(faces), corner_map)


def checkerboard(d: Diagram, faces: FaceSet, unshaded_face: Optional[int] = None) -> Shading:
    """Two-colour the faces so the faces flanking every edge differ.

    ``unshaded_face`` defaults to the face holding corner 0 of crossing 0.
    Each connected component of G(D) is coloured independently, anchored at
    its lowest corner; the anchor face of the first component obeys
    ``unshaded_face``.
    """
    if unshaded_face is None:
        unshaded_face = faces.face_at(0, 0)
    if not 0 <= unshaded_face < len(faces):
        raise ValueError("no face with id %d" % unshaded_face)
    adj: Dict[int, set] = {f: set() for f in range(len(faces))}
    for x in d.crossings:
        for i in range(4):
            a = faces.face_at(x.id, i)
            b = faces.face_at(x.id, i - 1)
            if a == b:
                raise NotBipartite("face %d lies on both sides of an edge" % a)
            adj[a].add(b)
            adj[b].add(a)
    color: Dict[int, str] = {}
    order = [unshaded_face] + [f for f in range(len(faces)) if f != unshaded_face]
    for root in order:
        if root in color:
            continue
        color[root] = UNSHADED
        stack = [root]
        while stack:
            f = stack.pop()
            other = SHADED if color[f] == UNSHADED else UNSHADED
            for g in adj[f]:
                if g not in color:
                    color[g] = other
                    stack.append(g)
                elif color[g] != other:
                    raise NotBipartite("odd cycle in face adjacency at face %d" % g)
    return Shading(color)


# -- predicates -------------------------------------------------------------

def is_nonsplit(d: Diagram) -> bool:
    return len(d.components()) == 1


def nugatory_crossings(d: Diagram, faces: FaceSet) -> List[int]:
    return [
        x.id
        for x in d.crossings
        if faces.face_at(x.id, 0) == faces.face_at(x.id, 2)
        or faces.face_at(x.id, 1) == faces.face_at(x.id, 3)
    ]


def is_reduced(d: Diagram, faces: FaceSet) -> bool:
    """True iff no crossing has two opposite corners in one face."""
    return not nugatory_crossings(d, faces)


def nonalternating_edges(d: Diagram) -> List[int]:
    """Edges that are over at both ends or under at both ends."""
    return [
        label
        for label, ((_, pa), (_, pb)) in sorted(d.half_edges.items())
        if pa % 2 == pb % 2
    ]


def is_alternating(d: Diagram) -> bool:
    return not nonalternating_edges(d)
