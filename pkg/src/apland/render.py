"""Deterministic SVG heatmaps of landscape snapshots.

Hand-built markup, no plotting dependency: fixed layout, fixed float
formatting, a monotone dark-to-light colormap over the normalized gains, a
star on the best grid cell and a circle on the pair the adaptation method
actually used. Flat snapshots (no cell improved) are skipped so an empty
landscape is never dressed up as signal.
"""

import math

MARGIN_LEFT = 50.0
MARGIN_TOP = 28.0
MARGIN_RIGHT = 16.0
MARGIN_BOTTOM = 42.0
PLOT = 400.0

# monotone-lightness anchors, dark blue-violet up to yellow
_STOPS = (
    (0.00, (68, 1, 84)),
    (0.25, (59, 82, 139)),
    (0.50, (33, 145, 140)),
    (0.75, (94, 201, 98)),
    (1.00, (253, 231, 37)),
)


def colormap(v):
    """Hex color for v in [0, 1]; linear between fixed anchors."""
    if v <= 0.0:
        rgb = _STOPS[0][1]
    elif v >= 1.0:
        rgb = _STOPS[-1][1]
    else:
        rgb = None
        for (p0, c0), (p1, c1) in zip(_STOPS, _STOPS[1:]):
            if v <= p1:
                w = (v - p0) / (p1 - p0)
                rgb = tuple(
                    int(round(a + (b - a) * w)) for a, b in zip(c0, c1)
                )
                break
    return "#%02x%02x%02x" % rgb


def _x(f, k_f):
    # value -> pixel; cell centers sit at half-cell offsets
    cw = PLOT / k_f
    return MARGIN_LEFT + (f * (k_f - 1) + 0.5) * cw


def _y(cr, k_c):
    ch = PLOT / k_c
    return MARGIN_TOP + PLOT - (cr * (k_c - 1) + 0.5) * ch


def _star_path(cx, cy, outer, inner):
    pts = []
    for k in range(10):
        r = outer if k % 2 == 0 else inner
        a = -math.pi / 2.0 + k * math.pi / 5.0
        pts.append("%.2f,%.2f" % (cx + r * math.cos(a), cy + r * math.sin(a)))
    return " ".join(pts)


def render_snapshot(meta, g1_norm):
    """SVG text for one snapshot, or None when the snapshot is flat."""
    if meta["flat"]:
        return None
    k_f, k_c = meta["k_f"], meta["k_c"]
    cw = PLOT / k_f
    ch = PLOT / k_c
    width = MARGIN_LEFT + PLOT + MARGIN_RIGHT
    height = MARGIN_TOP + PLOT + MARGIN_BOTTOM
    out = []
    out.append(
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (width, height, width, height)
    )
    out.append('<rect width="%d" height="%d" fill="#ffffff"/>' % (width, height))
    title = "%s run=%s fe=%s rank=%s" % (
        meta["function"], meta["run"], meta["fe"], meta["rank"],
    )
    out.append(
        '<text x="%.2f" y="18" font-family="monospace" font-size="13">%s</text>'
        % (MARGIN_LEFT, title)
    )
    for a in range(k_f):
        x = MARGIN_LEFT + a * cw
        for b in range(k_c):
            y = MARGIN_TOP + (k_c - 1 - b) * ch
            color = colormap(float(g1_norm[a * k_c + b]))
            out.append(
                '<rect x="%.2f" y="%.2f" width="%.2f" height="%.2f" fill="%s"/>'
                % (x, y, cw, ch, color)
            )
    # axes: x is the scale factor, y the crossover rate
    ax_y = MARGIN_TOP + PLOT
    for v in (0.0, 0.5, 1.0):
        out.append(
            '<text x="%.2f" y="%.2f" font-family="monospace" font-size="11" '
            'text-anchor="middle">%.1f</text>' % (_x(v, k_f), ax_y + 14.0, v)
        )
        out.append(
            '<text x="%.2f" y="%.2f" font-family="monospace" font-size="11" '
            'text-anchor="end">%.1f</text>'
            % (MARGIN_LEFT - 6.0, _y(v, k_c) + 4.0, v)
        )
    out.append(
        '<text x="%.2f" y="%.2f" font-family="monospace" font-size="12" '
        'text-anchor="middle">F</text>'
        % (MARGIN_LEFT + PLOT / 2.0, ax_y + 30.0)
    )
    out.append(
        '<text x="%.2f" y="%.2f" font-family="monospace" font-size="12">C</text>'
        % (12.0, MARGIN_TOP + PLOT / 2.0)
    )
    bx, by = _x(meta["best_pair"][0], k_f), _y(meta["best_pair"][1], k_c)
    out.append(
        '<polygon points="%s" fill="#ffffff" stroke="#000000" stroke-width="1"/>'
        % _star_path(bx, by, 8.0, 3.5)
    )
    cx, cy = _x(meta["actual_pair"][0], k_f), _y(meta["actual_pair"][1], k_c)
    out.append(
        '<circle cx="%.2f" cy="%.2f" r="5" fill="none" stroke="#ff2222" '
        'stroke-width="2"/>' % (cx, cy)
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def svg_name(fe, rank):
    return "%d-rank%d.svg" % (fe, rank)
