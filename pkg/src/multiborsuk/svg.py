"""Deterministic SVG rendering: fixed 1000x1000 viewport, fixed palette."""

from __future__ import annotations

import math

import numpy as np

from .reuleaux import BoundaryCover, verify_cover, _boundary_intervals
from .spheres import HemisphereFamily
from .pointsets import PointSet, diameter_graph

VIEW = 1000
PALETTE = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
    "#98df8a", "#ff9896", "#c5b0d5", "#c49c94", "#f7b6d2", "#dbdb8d",
]


def _svg_header() -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{VIEW}" '
        f'height="{VIEW}" viewBox="0 0 {VIEW} {VIEW}">\n'
    )


def _fit(points: list[tuple[float, float]], pad: float = 80.0):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    lo = min(min(xs), min(ys))
    hi = max(max(xs), max(ys))
    scale = (VIEW - 2 * pad) / max(hi - lo, 1e-9)

    def tr(p):
        return (
            pad + (p[0] - lo) * scale,
            VIEW - pad - (p[1] - lo) * scale,
        )

    return tr, scale


def _arc_path(arc, tr, scale) -> str:
    p0 = arc.point(arc.start)
    p1 = arc.point(arc.start + arc.span)
    x0, y0 = tr(p0)
    x1, y1 = tr(p1)
    r = arc.radius * scale
    large = 1 if arc.span > math.pi else 0
    # y is flipped, so counterclockwise becomes sweep=0
    return f"M {x0:.3f} {y0:.3f} A {r:.3f} {r:.3f} 0 {large} 0 {x1:.3f} {y1:.3f}"


def render_cover_svg(cover: BoundaryCover) -> str:
    """One layer per patch, distinct stroke colours, fold labels at the
    sweep breakpoints."""
    sample_pts = []
    for patch in cover.patches:
        for arc in patch.arcs:
            for t in (arc.start, arc.start + arc.span / 2, arc.start + arc.span):
                sample_pts.append(tuple(arc.point(t)))
    tr, scale = _fit(sample_pts)
    parts = [_svg_header()]
    offset_step = 3.0
    for j, patch in enumerate(cover.patches):
        color = PALETTE[j % len(PALETTE)]
        parts.append(f'<g id="patch{j}" stroke="{color}" fill="none" stroke-width="4">\n')
        for arc in patch.arcs:
            grown = type(arc)(
                arc.center, arc.radius + (j + 1) * offset_step / scale,
                arc.start, arc.span,
            )
            parts.append(f'  <path d="{_arc_path(grown, tr, scale)}"/>\n')
        parts.append("</g>\n")
    intervals, period = _boundary_intervals(cover)
    report = verify_cover(cover)
    breaks = sorted({t0 % period for (t0, _t1, _j) in intervals})
    for t in breaks:
        pt = _param_point(cover, t)
        x, y = tr(pt)
        fold = sum(
            1
            for (t0, t1, _j) in intervals
            if (t - t0) % period <= (t1 - t0) + 1e-9
        )
        parts.append(
            f'<text x="{x:.1f}" y="{y:.1f}" font-size="18" fill="#000">{fold}</text>\n'
        )
    parts.append(
        f'<text x="20" y="30" font-size="20" fill="#000">k={cover.k} '
        f"patches={report.patch_count} min_fold={report.min_fold} "
        f"max_diam={report.max_patch_diameter:.6f}</text>\n"
    )
    parts.append("</svg>\n")
    return "".join(parts)


def _param_point(cover, t):
    from .reuleaux import DiskBody

    if isinstance(cover.parent, DiskBody):
        r = cover.parent.diameter / 2
        return (r * math.cos(t), r * math.sin(t))
    sides = cover.parent.sides()
    i = int(t) % len(sides)
    frac = t - int(t)
    arc = sides[i]
    return tuple(arc.point(arc.start + frac * arc.span))


def render_great_circles_svg(family: HemisphereFamily) -> str:
    """Orthographic projection of the great circles normal to each vector."""
    if family.dim != 3:
        raise ValueError("great-circle rendering needs dimension 3")
    parts = [_svg_header()]
    cx = cy = VIEW / 2
    rad = VIEW / 2 - 60
    parts.append(
        f'<circle cx="{cx}" cy="{cy}" r="{rad}" fill="none" stroke="#000"/>\n'
    )
    for i, v in enumerate(family.vectors):
        u = np.asarray(v)
        t1 = np.cross(u, [1.0, 0.31, 0.27])
        if np.linalg.norm(t1) < 1e-9:
            t1 = np.cross(u, [0.2, 1.0, 0.43])
        t1 /= np.linalg.norm(t1)
        t2 = np.cross(u, t1)
        color = PALETTE[i % len(PALETTE)]
        pts = []
        steps = 180
        for sidx in range(steps + 1):
            ang = 2 * math.pi * sidx / steps
            p = math.cos(ang) * t1 + math.sin(ang) * t2
            if p[2] >= 0:  # front hemisphere only
                pts.append((cx + rad * p[0], cy - rad * p[1]))
            else:
                pts.append(None)
        chunks: list[list[tuple[float, float]]] = [[]]
        for p in pts:
            if p is None:
                if chunks[-1]:
                    chunks.append([])
            else:
                chunks[-1].append(p)
        for chunk in chunks:
            if len(chunk) >= 2:
                d = "M " + " L ".join(f"{x:.2f} {y:.2f}" for x, y in chunk)
                parts.append(
                    f'<path d="{d}" fill="none" stroke="{color}" stroke-width="3"/>\n'
                )
    parts.append("</svg>\n")
    return "".join(parts)


def render_pointset_svg(s: PointSet) -> str:
    """Planar (x,y) projection with the diameter edges highlighted."""
    g = diameter_graph(s)
    pts2 = [(p[0], p[1]) for p in s.points]
    tr, _scale = _fit(pts2)
    parts = [_svg_header()]
    for u, v in g.edges:
        x0, y0 = tr(pts2[u])
        x1, y1 = tr(pts2[v])
        parts.append(
            f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}" '
            f'stroke="#d62728" stroke-width="3"/>\n'
        )
    for i, p in enumerate(pts2):
        x, y = tr(p)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="6" fill="#1f77b4"/>\n')
        parts.append(
            f'<text x="{x + 8:.2f}" y="{y - 8:.2f}" font-size="16" fill="#000">{i}</text>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)
