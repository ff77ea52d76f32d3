"""SVG 1.1 emitters for circular presentations and ribbon schematics."""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .binding import INSIDE, CircularPresentation

PAGE_COLORS = {"P1": "#1f77b4", "P2": "#d62728", "P3": "#2ca02c", "P4": "#9467bd"}

_HEADER = (
    '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    'width="{w:.0f}" height="{h:.0f}" viewBox="{x0:.2f} {y0:.2f} {w:.2f} {h:.2f}">\n'
)


def _fmt(v: float) -> str:
    return ("%.3f" % v).rstrip("0").rstrip(".")


def _legend(x, y):
    parts = []
    for k, (page, color) in enumerate(PAGE_COLORS.items()):
        yy = y + 16 * k
        parts.append(
            '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="%s" stroke-width="3"/>'
            % (_fmt(x), _fmt(yy), _fmt(x + 20), _fmt(yy), color)
        )
        parts.append(
            '<text x="%s" y="%s" font-size="11" font-family="sans-serif">%s</text>'
            % (_fmt(x + 26), _fmt(yy + 4), page)
        )
    return parts


def presentation_svg(p: CircularPresentation, radius: float = 200.0) -> str:
    """Binding circle with binding points equally spaced in cyclic order.

    Inside arcs bow toward the centre, outside arcs bow away from the circle.
    """
    n = len(p.binding)
    margin = radius * 0.9
    pos = {}
    for b in p.binding:
        theta = 2 * math.pi * b.position / n - math.pi / 2
        pos[b.edge] = (radius * math.cos(theta), radius * math.sin(theta), theta)
    out = [
        _HEADER.format(
            x0=-radius - margin, y0=-radius - margin,
            w=2 * (radius + margin), h=2 * (radius + margin),
        )
    ]
    title = escape(p.diagram.name or "diagram")
    out.append("<title>%s: circular four-page presentation, %d binding points</title>" % (title, n))
    out.append(
        '<circle cx="0" cy="0" r="%s" fill="none" stroke="#000" stroke-width="1.5"/>' % _fmt(radius)
    )
    for i, arc in enumerate(p.arcs):
        (xa, ya, ta), (xb, yb, tb) = pos[arc.ends[0]], pos[arc.ends[1]]
        mid = math.atan2(math.sin(ta) + math.sin(tb), math.cos(ta) + math.cos(tb))
        if arc.side == INSIDE:
            gap = abs(math.remainder(ta - tb, 2 * math.pi))
            r = radius * max(0.0, math.cos(gap / 2)) * 0.6
        else:
            r = radius * 1.45
        cx, cy = r * math.cos(mid), r * math.sin(mid)
        out.append(
            '<path d="M %s %s Q %s %s %s %s" fill="none" stroke="%s" stroke-width="2.5" '
            'class="arc %s %s" data-arc="%d" data-crossings="%s"/>'
            % (
                _fmt(xa), _fmt(ya), _fmt(cx), _fmt(cy), _fmt(xb), _fmt(yb),
                PAGE_COLORS[arc.page], arc.page, arc.side, i,
                " ".join(map(str, arc.crossings)),
            )
        )
    for b in p.binding:
        x, y, theta = pos[b.edge]
        out.append(
            '<circle class="binding-point" cx="%s" cy="%s" r="4" fill="#000" data-edge="%d"/>'
            % (_fmt(x), _fmt(y), b.edge)
        )
        lx, ly = (radius + 16) * math.cos(theta), (radius + 16) * math.sin(theta)
        out.append(
            '<text x="%s" y="%s" font-size="12" font-family="sans-serif" '
            'text-anchor="middle">%d</text>' % (_fmt(lx), _fmt(ly + 4), b.edge)
        )
    out.extend(_legend(-radius - margin + 10, -radius - margin + 14))
    out.append("</svg>\n")
    return "\n".join(out)


def schematic_svg(schematic: dict, scale: float = 30.0) -> str:
    squares = schematic["squares"]
    conns = schematic["connectors"]
    ys = [pt[1] for c in conns for pt in c["points"]] + [-0.5, 0.5]
    xs = [s["x"] for s in squares] + [s["x"] + 1 for s in squares]
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    out = [_HEADER.format(x0=x0 * scale, y0=y0 * scale, w=(x1 - x0) * scale, h=(y1 - y0) * scale)]
    out.append("<title>ribbon schematic, %d unit squares</title>" % len(squares))
    out.append(
        '<line x1="%s" y1="0" x2="%s" y2="0" stroke="#888" stroke-dasharray="4 3"/>'
        % (_fmt(x0 * scale), _fmt(x1 * scale))
    )
    for c in conns:
        pts = " ".join("%s,%s" % (_fmt(x * scale), _fmt(-y * scale)) for x, y in c["points"])
        out.append(
            '<polyline class="connector %s" points="%s" fill="none" stroke="%s" stroke-width="2"/>'
            % (c["page"], pts, PAGE_COLORS[c["page"]])
        )
    for s in squares:
        x, y = s["x"] * scale, -(s["y"] + 1) * scale
        out.append(
            '<rect class="square %s" x="%s" y="%s" width="%s" height="%s" fill="#f4e3b0" '
            'stroke="#000" data-edge="%d"/>'
            % (s["turn"], _fmt(x), _fmt(y), _fmt(scale), _fmt(scale), s["edge"])
        )
        if s["diagonal"] == "/":
            out.append(
                '<line class="fold" x1="%s" y1="%s" x2="%s" y2="%s" stroke="#000"/>'
                % (_fmt(x), _fmt(y + scale), _fmt(x + scale), _fmt(y))
            )
        elif s["diagonal"] == "\\":
            out.append(
                '<line class="fold" x1="%s" y1="%s" x2="%s" y2="%s" stroke="#000"/>'
                % (_fmt(x), _fmt(y), _fmt(x + scale), _fmt(y + scale))
            )
    out.append("</svg>\n")
    return "\n".join(out)
