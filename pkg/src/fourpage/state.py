"""Tait graph, spanning-tree Kauffman states and the induced Euler tour."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .diagram import Diagram, FaceSet, HalfEdge, Shading
from .exceptions import Disconnected, NotSingleCircle

SHADED_CONNECTING = "shaded-connecting"
UNSHADED_CONNECTING = "unshaded-connecting"
TREE_SIDE = "tree"
COTREE_SIDE = "cotree"


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {i: i for i in items}

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class TaitGraph:
    """Checkerboard graph: shaded faces joined by one edge per crossing.

    ``edges`` maps a crossing id to the pair of shaded faces at its shaded
    corners; ``shaded_corners`` records which opposite corner pair that is.
    """

    vertices: Tuple[int, ...]
    edges: Dict[int, Tuple[int, int]]
    shaded_corners: Dict[int, Tuple[int, int]]

    @property
    def loops(self) -> List[int]:
        return sorted(x for x, (u, v) in self.edges.items() if u == v)

    def is_connected(self) -> bool:
        uf = _UnionFind(self.vertices)
        n = len(self.vertices)
        for u, v in self.edges.values():
            if uf.union(u, v):
                n -= 1
        return n == 1

    def cut_edges(self) -> List[int]:
        """Edges whose removal disconnects the graph (loops never are)."""
        out = []
        for x in sorted(self.edges):
            rest = {y: e for y, e in self.edges.items() if y != x}
            if not TaitGraph(self.vertices, rest, {}).is_connected():
                out.append(x)
        return out

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [
                {"crossing": x, "faces": list(self.edges[x])} for x in sorted(self.edges)
            ],
        }


@dataclass(frozen=True)
class SpanningTree:
    edges: FrozenSet[int]
    graph: TaitGraph = field(repr=False, compare=False)
    strategy: str = "default"
    fallback: bool = False

    def __contains__(self, crossing: int) -> bool:
        return crossing in self.edges

    def to_dict(self) -> dict:
        return {
            "edges": sorted(self.edges),
            "strategy": self.strategy,
            "fallback_used": self.fallback,
        }


@dataclass(frozen=True)
class KauffmanState:
    """A smoothing per crossing plus the half-edge pairing it induces."""

    smoothing: Dict[int, str]
    pairing: Dict[int, Dict[int, int]] = field(repr=False)

    @property
    def shaded_connecting(self) -> FrozenSet[int]:
        return frozenset(x for x, s in self.smoothing.items() if s == SHADED_CONNECTING)


@dataclass(frozen=True)
class StateCircles:
    """Each circle is the cyclic sequence of half-edges it leaves from."""

    circles: Tuple[Tuple[HalfEdge, ...], ...]
    labels: Tuple[Tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.circles)


@dataclass(frozen=True)
class EulerTour:
    edges: Tuple[int, ...]
    side: Dict[int, str]

    def __len__(self):
        return len(self.edges)

    def crossings_on(self, side: str) -> List[int]:
        return sorted(x for x, s in self.side.items() if s == side)

    def to_dict(self) -> dict:
        return {
            "edges": list(self.edges),
            "side": {str(x): self.side[x] for x in sorted(self.side)},
        }


def build_tait(d: Diagram, faces: FaceSet, shading: Shading) -> TaitGraph:
    edges = {}
    corners = {}
    for x in d.crossings:
        a, b = shading.shaded_corners(faces, x.id)
        corners[x.id] = (a, b)
        u, v = faces.face_at(x.id, a), faces.face_at(x.id, b)
        edges[x.id] = (min(u, v), max(u, v))
    return TaitGraph(tuple(shading.shaded), edges, corners)


def _kruskal(g: TaitGraph, order: Sequence[int], forced: Sequence[int] = ()):
    uf = _UnionFind(g.vertices)
    chosen = []
    forced_ok = True
    for x in forced:
        u, v = g.edges[x]
        if uf.union(u, v):
            chosen.append(x)
        else:
            forced_ok = False
    for x in order:
        if x in forced:
            continue
        u, v = g.edges[x]
        if uf.union(u, v):
            chosen.append(x)
    if len(chosen) != len(g.vertices) - 1:
        raise Disconnected("Tait graph is disconnected; no spanning tree exists")
    return frozenset(chosen), forced_ok


def spanning_tree(
    g: TaitGraph,
    strategy: str = "default",
    edges: Iterable[int] = (),
    seed: Optional[int] = None,
) -> SpanningTree:
    """Pick a spanning tree of ``g``.

    strategy is one of ``default`` (Kruskal in crossing-id order),
    ``avoid`` / ``force`` (with ``edges``) or ``random`` (with ``seed``).
    When an avoid/force request cannot be honoured the tree is still
    returned, with ``fallback`` set.
    """
    ids = sorted(g.edges)
    special = sorted(set(edges))
    if strategy == "default":
        tree, _ = _kruskal(g, ids)
        return SpanningTree(tree, g, "default")
    if strategy == "avoid":
        order = [x for x in ids if x not in special] + special
        tree, _ = _kruskal(g, order)
        tag = "avoid:" + ",".join(map(str, special))
        return SpanningTree(tree, g, tag, fallback=bool(tree & set(special)))
    if strategy == "force":
        tree, ok = _kruskal(g, ids, forced=special)
        tag = "force:" + ",".join(map(str, special))
        return SpanningTree(tree, g, tag, fallback=not ok)
    if strategy == "random":
        order = list(ids)
        random.Random(seed).shuffle(order)
        tree, _ = _kruskal(g, order)
        return SpanningTree(tree, g, "random:%s" % seed)
    raise ValueError("unknown spanning tree strategy %r" % strategy)


@dataclass(frozen=True)
class TreeEnumeration:
    trees: Tuple[SpanningTree, ...]
    truncated: bool

    def __iter__(self):
        return iter(self.trees)

    def __len__(self):
        return len(self.trees)

    def __getitem__(self, i):
        return self.trees[i]


def enumerate_spanning_trees(g: TaitGraph, cap: Optional[int] = None) -> TreeEnumeration:
    """All spanning trees in lexicographic order of their sorted crossing ids."""
    if not g.is_connected():
        raise Disconnected("Tait graph is disconnected; no spanning tree exists")
    ids = sorted(x for x in g.edges if x not in set(g.loops))
    k = len(g.vertices) - 1
    out = []
    for combo in combinations(ids, k):
        uf = _UnionFind(g.vertices)
        if all(uf.union(*g.edges[x]) for x in combo):
            if cap is not None and len(out) >= cap:
                return TreeEnumeration(tuple(out), True)
            out.append(SpanningTree(frozenset(combo), g, "enumerated"))
    return TreeEnumeration(tuple(out), False)


def smoothing_pairing(shaded_corners: Tuple[int, int], kind: str) -> Dict[int, int]:
    """Half-edge pairing at one crossing for the given smoothing.

    Joining the opposite corners a and a + 2 into one region means the two
    strands run around corners a + 1 and a + 3: positions a+1/a+2 and
    a+3/a are paired.
    """
    a = shaded_corners[0]
    if kind == UNSHADED_CONNECTING:
        a = (a + 1) % 4
    elif kind != SHADED_CONNECTING:
        raise ValueError("unknown smoothing %r" % kind)
    p, q, r, s = (a + 1) % 4, (a + 2) % 4, (a + 3) % 4, a
    return {p: q, q: p, r: s, s: r}


def state_from_smoothings(g: TaitGraph, smoothing: Dict[int, str]) -> KauffmanState:
    pairing = {x: smoothing_pairing(g.shaded_corners[x], s) for x, s in smoothing.items()}
    return KauffmanState(dict(smoothing), pairing)


def kauffman_state(d: Diagram, tree: SpanningTree) -> KauffmanState:
    """Tree crossings are smoothed shaded-connecting, all others unshaded-connecting."""
    g = tree.graph
    smoothing = {
        x.id: SHADED_CONNECTING if x.id in tree.edges else UNSHADED_CONNECTING
        for x in d.crossings
    }
    return state_from_smoothings(g, smoothing)


def trace_circles(d: Diagram, state: KauffmanState) -> StateCircles:
    """Follow edges and smoothing pairings until every half-edge is used."""
    used = set()
    circles = []
    labels = []
    for x in d.crossings:
        for pos in range(4):
            start = (x.id, pos)
            if start in used:
                continue
            walk = []
            h = start
            while h not in used:
                used.add(h)
                walk.append(h)
                y, j = d.partner[h]
                used.add((y, j))
                h = (y, state.pairing[y][j])
            circles.append(tuple(walk))
            labels.append(tuple(d.label(h) for h in walk))
    return StateCircles(tuple(circles), tuple(labels))


def canonical_cycle(seq: Sequence[int]) -> Tuple[int, ...]:
    """Rotate to the smallest entry, then orient so the second entry is the
    smaller of its two cyclic neighbours."""
    seq = list(seq)
    i = seq.index(min(seq))
    fwd = seq[i:] + seq[:i]
    if len(fwd) > 2 and fwd[-1] < fwd[1]:
        fwd = [fwd[0]] + fwd[1:][::-1]
    return tuple(fwd)


def euler_tour(circles: StateCircles, tree: SpanningTree) -> EulerTour:
    if circles.count != 1:
        raise NotSingleCircle("state has %d circles, expected 1" % circles.count)
    side = {
        x: TREE_SIDE if x in tree.edges else COTREE_SIDE for x in tree.graph.edges
    }
    return EulerTour(canonical_cycle(circles.labels[0]), side)

