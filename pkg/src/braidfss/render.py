"""Standalone SVG drawing of a diagram. Presentation only; never parsed back."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .diagram import BOTTOM_FACE, FRAME_TOP, TOP_FACE, Diagram

SLOT = 28      # horizontal spacing of contacts
LAYER = 90     # vertical spacing of transistor layers
BOX_H = 22


def _layers(d: Diagram):
    order = d.topological_order() or sorted(d.transistors)
    depth = {}
    for t in order:
        depth[t] = max((depth[s] + 1 for s in d.above(t) if s in depth), default=0)
    return depth


def render_svg(d: Diagram) -> str:
    depth = _layers(d)
    nlayers = max(depth.values(), default=-1) + 1
    rows = [[] for _ in range(nlayers)]
    for t in sorted(d.transistors, key=lambda t: (depth[t], t)):
        rows[depth[t]].append(t)

    def face_width(t):
        tr = d.transistors[t]
        return max(len(tr.top), len(tr.bottom)) * SLOT

    width = max([len(d.frame_top) * SLOT, len(d.frame_bottom) * SLOT]
                + [sum(face_width(t) + SLOT for t in row) for row in rows]) + 2 * SLOT
    height = (nlayers + 1) * LAYER + 2 * SLOT
    boxes = {}
    for k, row in enumerate(rows):
        x = (width - sum(face_width(t) + SLOT for t in row) + SLOT) / 2
        y = SLOT + (k + 1) * LAYER - BOX_H / 2
        for t in row:
            boxes[t] = (x, y, face_width(t))
            x += face_width(t) + SLOT

    def spread(n, x0, w):
        return [x0 + w * (i + 0.5) / n for i in range(n)]

    top_xs = spread(len(d.frame_top), 0, width)
    bottom_xs = spread(len(d.frame_bottom), 0, width)

    def point(a, upper_end):
        if a.kind == FRAME_TOP:
            return top_xs[a.slot], SLOT
        if a.kind not in (TOP_FACE, BOTTOM_FACE):
            return bottom_xs[a.slot], height - SLOT
        x, y, w = boxes[a.transistor]
        face = d.transistors[a.transistor].bottom if a.kind == BOTTOM_FACE else d.transistors[a.transistor].top
        return spread(len(face), x, w)[a.slot], (y + BOX_H if upper_end else y)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
           f'viewBox="0 0 {width:.0f} {height:.0f}">',
           f'<rect x="1" y="{SLOT / 2:.1f}" width="{width - 2:.0f}" height="{height - SLOT:.0f}" '
           'fill="none" stroke="#888" stroke-dasharray="4 3"/>']
    for w in sorted(d.labels):
        x1, y1 = point(d.top_contacts[w], True)
        x2, y2 = point(d.bottom_contacts[w], False)
        my = (y1 + y2) / 2
        out.append(f'<path d="M {x1:.1f} {y1:.1f} C {x1:.1f} {my:.1f} {x2:.1f} {my:.1f} {x2:.1f} {y2:.1f}" '
                   'fill="none" stroke="#225" stroke-width="1.5"/>')
        out.append(f'<text x="{(x1 + x2) / 2 + 3:.1f}" y="{my:.1f}" font-size="10" '
                   f'font-family="monospace">{escape(d.labels[w])}</text>')
    for t, (x, y, w) in sorted(boxes.items()):
        out.append(f'<rect x="{x:.1f}" y="{y:.1f}" width="{w:.1f}" height="{BOX_H}" '
                   'fill="#eef" stroke="#225"/>')
        out.append(f'<text x="{x + 3:.1f}" y="{y + 14:.1f}" font-size="9" font-family="monospace">t{t}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
