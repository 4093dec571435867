"""SVG pictures of planar (m = 2) arrangements.

Lines are clipped to a box containing every arrangement vertex plus a
margin; bounded regions are shaded and labeled F1..Fr in region order.
Floating point is confined to pixel coordinates here; the combinatorics
being drawn were computed exactly upstream.
"""

from fractions import Fraction
from math import atan2

from .arrangement import InputError, vertices

_REGION_FILL = "#9ecae1"
_SCALE = 80.0
_MARGIN = Fraction(1)


def _clip_line(normal, offset, box):
    """Segment of {<b,x> + c = 0} inside the box, as two float points."""
    (x0, y0), (x1, y1) = box
    a, b = normal
    pts = []
    if b != 0:
        for x in (x0, x1):
            y = -(offset + a * x) / b
            if y0 <= y <= y1:
                pts.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = -(offset + b * y) / a
            if x0 <= x <= x1:
                pts.append((x, y))
    uniq = sorted(set(pts))
    if len(uniq) < 2:
        return None
    return uniq[0], uniq[-1]


def render_svg(arr, bc):
    """SVG document for a 2-D arrangement and its bounded complex."""
    if arr.ambient_dim != 2:
        raise InputError("render supports m = 2 only")
    verts = vertices(arr)
    xs = [v.point[0] for v in verts] or [Fraction(0)]
    ys = [v.point[1] for v in verts] or [Fraction(0)]
    box = (
        (min(xs) - _MARGIN, min(ys) - _MARGIN),
        (max(xs) + _MARGIN, max(ys) + _MARGIN),
    )
    (bx0, by0), (bx1, by1) = box
    width = float(bx1 - bx0) * _SCALE
    height = float(by1 - by0) * _SCALE

    def px(p):
        return (
            (float(p[0]) - float(bx0)) * _SCALE,
            (float(by1) - float(p[1])) * _SCALE,  # flip y for screen coords
        )

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%.0f" height="%.0f" '
        'viewBox="0 0 %.0f %.0f">' % (width, height, width, height),
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for k, region in enumerate(bc.regions):
        pts = [v.point for v in region.vertices]
        cx = sum(float(p[0]) for p in pts) / len(pts)
        cy = sum(float(p[1]) for p in pts) / len(pts)
        ordered = sorted(pts, key=lambda p: atan2(float(p[1]) - cy, float(p[0]) - cx))
        path = " ".join("%.2f,%.2f" % px(p) for p in ordered)
        parts.append(
            '<polygon points="%s" fill="%s" fill-opacity="0.5" stroke="none"/>'
            % (path, _REGION_FILL)
        )
        lx, ly = px((cx, cy))
        parts.append(
            '<text x="%.2f" y="%.2f" font-size="14" text-anchor="middle" '
            'dominant-baseline="middle">F%d</text>' % (lx, ly, k + 1)
        )
    for h in arr.hyperplanes:
        seg = _clip_line(h.normal, h.offset, box)
        if seg is None:
            continue
        (ax, ay), (bx, by) = px(seg[0]), px(seg[1])
        parts.append(
            '<line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f" '
            'stroke="black" stroke-width="1.5"/>' % (ax, ay, bx, by)
        )
    for v in verts:
        cx, cy = px(v.point)
        parts.append('<circle cx="%.2f" cy="%.2f" r="3" fill="black"/>' % (cx, cy))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
