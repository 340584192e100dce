"""Schematic DOT and SVG renderings of Gauss diagrams.

Both formats draw the marked circles with their points and join each
singular set's points to a hub carrying the set label and its oriented
cyclic order, star fashion.  The pictures are combinatorial schematics,
not embedded curves.
"""

from __future__ import annotations

import math


def _order_text(order):
    return " ".join("%s%s" % (x, "+" if s > 0 else "-") for x, s in order)


def _dot_escape(s):
    return str(s).replace("\\", "\\\\").replace('"', '\\"')


def to_dot(d):
    out = ["graph gauss_diagram {",
           "  layout=neato;",
           "  node [fontsize=10];"]
    for ci, c in enumerate(d.circles):
        if not c:
            out.append('  "free_%d" [shape=point, width=0.15, label=""];' % ci)
            continue
        for x in c:
            out.append('  "p_%s" [shape=circle, label="%s"];'
                       % (_dot_escape(x), _dot_escape(x)))
        m = len(c)
        for i, x in enumerate(c):
            out.append('  "p_%s" -- "p_%s";'
                       % (_dot_escape(x), _dot_escape(c[(i + 1) % m])))
            if m == 1:
                break
    for lab in sorted(d.orders, key=str):
        order = d.orders[lab]
        out.append('  "set_%s" [shape=box, style=rounded, label="%s\\n%s"];'
                   % (_dot_escape(lab), _dot_escape(lab),
                      _dot_escape(_order_text(order))))
        for x, s in order:
            if s < 0:  # one spoke per branch
                out.append('  "set_%s" -- "p_%s" [style=dashed];'
                           % (_dot_escape(lab), _dot_escape(x)))
    out.append("}")
    return "\n".join(out) + "\n"


def _svg_escape(s):
    return (str(s).replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;"))


def to_svg(d):
    radius = 70
    gap = 50
    margin = 30
    ncirc = max(1, len(d.circles))
    width = 2 * margin + ncirc * 2 * radius + (ncirc - 1) * gap
    height = 2 * margin + 2 * radius + 30 * max(1, len(d.orders))

    coords = {}
    body = []
    for ci, c in enumerate(d.circles):
        cx = margin + radius + ci * (2 * radius + gap)
        cy = margin + radius
        body.append('<circle cx="%d" cy="%d" r="%d" fill="none" '
                    'stroke="black"/>' % (cx, cy, radius))
        m = len(c)
        for i, x in enumerate(c):
            ang = -math.pi / 2 + 2 * math.pi * i / m
            px = cx + radius * math.cos(ang)
            py = cy + radius * math.sin(ang)
            coords[x] = (px, py)
            body.append('<circle cx="%.1f" cy="%.1f" r="3" fill="black"/>'
                        % (px, py))
            tx = cx + (radius + 12) * math.cos(ang)
            ty = cy + (radius + 12) * math.sin(ang)
            body.append('<text x="%.1f" y="%.1f" font-size="10" '
                        'text-anchor="middle">%s</text>'
                        % (tx, ty + 3, _svg_escape(x)))

    ytxt = 2 * margin + 2 * radius
    for li, lab in enumerate(sorted(d.orders, key=str)):
        order = d.orders[lab]
        pts = [coords[x] for x, s in order if s < 0]
        hx = sum(p[0] for p in pts) / len(pts)
        hy = sum(p[1] for p in pts) / len(pts)
        for px, py in pts:
            body.append('<line x1="%.1f" y1="%.1f" x2="%.1f" y2="%.1f" '
                        'stroke="gray" stroke-dasharray="4 3"/>'
                        % (hx, hy, px, py))
        body.append('<rect x="%.1f" y="%.1f" width="10" height="10" '
                    'fill="white" stroke="black"/>' % (hx - 5, hy - 5))
        body.append('<text x="%.1f" y="%.1f" font-size="9" '
                    'text-anchor="middle">%s</text>'
                    % (hx, hy + 3, _svg_escape(lab)))
        body.append('<text x="%d" y="%d" font-size="10">%s: %s</text>'
                    % (margin, ytxt + 15 * (li + 1), _svg_escape(lab),
                       _svg_escape(_order_text(order))))

    head = ('<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
            'viewBox="0 0 %d %d">' % (width, height, width, height))
    return "\n".join([head] + body + ["</svg>"]) + "\n"
