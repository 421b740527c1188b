"""Reuleaux polygons, the unit-diameter disk, and exact k-fold boundary covers.

A Reuleaux (2s+1)-gon of width w has vertices p_0..p_2s in counterclockwise
order; the side from p_i to p_{i+1} is a radius-w circular arc centred at
the opposite vertex p_{i-s} (== p_{i+s+1}), and the side central angles sum
to pi.  Vertices are reconstructed from the angles by walking the +s
zig-zag chain of diameters: consecutive chain points are width apart and
the chain direction turns by (pi - angle of the side centred at the pivot)
at every step.  Arbitrary positive angle vectors summing to pi need not
close this chain; construction validates closure and every invariant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coloring import chi_k
from .errors import ConstructionError
from .graphs import Graph

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class Arc:
    """Circular arc: centre, radius and a counterclockwise angle interval.

    Angles are normalized so start is in [0, 2*pi) and 0 < span <= 2*pi;
    the arc runs counterclockwise from start to start+span.
    """

    center: tuple[float, float]
    radius: float
    start: float
    span: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if not 0 < self.span <= TWO_PI + 1e-12:
            raise ValueError("empty or overfull angle interval")
        object.__setattr__(self, "center", tuple(map(float, self.center)))
        object.__setattr__(self, "start", float(self.start) % TWO_PI)
        object.__setattr__(self, "span", min(float(self.span), TWO_PI))

    def point(self, ang: float) -> np.ndarray:
        return np.array(self.center) + self.radius * np.array(
            [math.cos(ang), math.sin(ang)]
        )

    def endpoints(self) -> tuple[np.ndarray, np.ndarray]:
        return self.point(self.start), self.point(self.start + self.span)

    def contains_angle(self, ang: float, tol: float = 1e-9) -> bool:
        return (ang - self.start) % TWO_PI <= self.span + tol

    def to_json_dict(self) -> dict:
        return {
            "center": list(self.center),
            "radius": self.radius,
            "start": self.start,
            "span": self.span,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "Arc":
        return cls(tuple(d["center"]), d["radius"], d["start"], d["span"])


@dataclass(frozen=True)
class ArcPatch:
    """A union of boundary arcs forming one cover member."""

    arcs: tuple[Arc, ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(self.arcs))


@dataclass(frozen=True)
class ReuleauxPolygon:
    width: float
    vertices: tuple[tuple[float, float], ...]
    arc_angles: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "vertices", tuple(tuple(map(float, p)) for p in self.vertices)
        )
        object.__setattr__(self, "arc_angles", tuple(map(float, self.arc_angles)))
        _validate_polygon(self)

    @property
    def sides_count(self) -> int:
        return len(self.vertices)

    @property
    def s(self) -> int:
        return (len(self.vertices) - 1) // 2

    def sides(self) -> list[Arc]:
        """Side i: the arc from p_i to p_{i+1}, centred at p_{i-s}."""
        n, s = self.sides_count, self.s
        verts = [np.array(p) for p in self.vertices]
        out = []
        for i in range(n):
            c = verts[(i - s) % n]
            a0 = math.atan2(*(verts[i] - c)[::-1])
            a1 = math.atan2(*(verts[(i + 1) % n] - c)[::-1])
            span = (a1 - a0) % TWO_PI
            out.append(Arc(tuple(c), self.width, a0, span))
        return out


def _validate_polygon(p: ReuleauxPolygon, eps: float = 1e-7) -> None:
    n = len(p.vertices)
    w = p.width
    if w <= 0:
        raise ConstructionError("width must be positive")
    if n < 3 or n % 2 == 0:
        raise ConstructionError("vertex count must be odd and >= 3")
    if len(p.arc_angles) != n:
        raise ConstructionError("one arc angle per side required")
    if any(a <= 0 for a in p.arc_angles):
        raise ConstructionError("arc angles must be positive")
    if abs(sum(p.arc_angles) - math.pi) > eps:
        raise ConstructionError("arc angles must sum to pi")
    s = (n - 1) // 2
    verts = np.asarray(p.vertices)
    d = np.linalg.norm(verts[:, None, :] - verts[None, :, :], axis=2)
    for i in range(n):
        for off in (s, n - s):
            if abs(d[i, (i + off) % n] - w) > eps * w:
                raise ConstructionError(
                    f"|p_{i} - p_{(i + off) % n}| != width: chain does not close"
                )
    if d.max() > w * (1 + eps):
        raise ConstructionError("a vertex pair exceeds the width")
    # each side's central angle must match the declared arc angle
    for i, arc in enumerate(p.sides()):
        if abs(arc.span - p.arc_angles[i]) > eps:
            raise ConstructionError(f"side {i} span disagrees with its arc angle")


def _chain(angles, w: float):
    """Vertices from side angles via the zig-zag chain; returns (verts, gap)."""
    n = len(angles)
    s = (n - 1) // 2
    pos = {0: np.zeros(2)}
    phi = 0.0
    cur = 0
    for j in range(n - 1):
        nxt = (cur + s) % n
        pos[nxt] = pos[cur] + w * np.array([math.cos(phi), math.sin(phi)])
        side = ((j + 1) * s - 1) % n  # side centred at the new pivot
        phi = (phi + math.pi) - angles[side]
        cur = nxt
    gap = pos[0] - (pos[cur] + w * np.array([math.cos(phi), math.sin(phi)]))
    verts = np.array([pos[i] for i in range(n)])
    return verts, gap


def reuleaux_from_angles(angles, w: float = 1.0) -> ReuleauxPolygon:
    """Reuleaux polygon from side central angles; validates everything.

    Raises ConstructionError when the angle data is invalid or the diameter
    chain fails to close (the angles of a Reuleaux polygon satisfy two
    closure constraints besides summing to pi, so most angle vectors name
    no polygon at all; 3-gons admit only the uniform angles).
    """
    angles = tuple(float(a) for a in angles)
    n = len(angles)
    if n < 3 or n % 2 == 0:
        raise ConstructionError("need an odd number (>= 3) of angles")
    if any(a <= 0 for a in angles):
        raise ConstructionError("angles must be positive")
    if abs(sum(angles) - math.pi) > 1e-9:
        raise ConstructionError("angles must sum to pi")
    verts, gap = _chain(angles, w)
    if np.linalg.norm(gap) > 1e-9 * w:
        raise ConstructionError(
            f"diameter chain does not close (gap {np.linalg.norm(gap):.3g}); "
            "the angle vector is not realizable"
        )
    # orient counterclockwise
    area = 0.0
    for i in range(n):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % n]
        area += x0 * y1 - x1 * y0
    if area < 0:
        verts = verts * np.array([1.0, -1.0])  # mirror to counterclockwise
    return ReuleauxPolygon(w, tuple(map(tuple, verts.tolist())), angles)


def regular_reuleaux(s: int, w: float = 1.0) -> ReuleauxPolygon:
    """Regular Reuleaux (2s+1)-gon: all side angles pi/(2s+1)."""
    if s < 1:
        raise ValueError("s must be >= 1")
    n = 2 * s + 1
    return reuleaux_from_angles([math.pi / n] * n, w)


def perturbed_reuleaux_angles(
    s: int, amplitude: float = 0.2, phase: float = 0.0
) -> tuple[float, ...]:
    """A non-uniform realizable angle vector for a Reuleaux (2s+1)-gon.

    Starts from a cosine perturbation of the regular profile and Newton-
    projects three entries back onto the closure constraints.  Only s >= 2
    has non-regular polygons; s = 1 is rejected.
    """
    if s < 2:
        raise ConstructionError("Reuleaux triangles admit only the regular angles")
    n = 2 * s + 1
    base = np.array(
        [math.pi / n * (1 + amplitude * math.cos(TWO_PI * (i + phase) / n))
         for i in range(n)]
    )
    base *= math.pi / base.sum()
    idx = [0, n // 2, n - 1]
    a = base.copy()
    for _ in range(80):
        _, gap = _chain(a, 1.0)
        fval = np.array([gap[0], gap[1], a.sum() - math.pi])
        if np.linalg.norm(fval) < 1e-13:
            break
        jac = np.zeros((3, 3))
        h = 1e-7
        for c, i in enumerate(idx):
            ap = a.copy()
            ap[i] += h
            _, gp = _chain(ap, 1.0)
            jac[0, c] = (gp[0] - gap[0]) / h
            jac[1, c] = (gp[1] - gap[1]) / h
            jac[2, c] = 1.0
        try:
            a[idx] -= np.linalg.solve(jac, fval)
        except np.linalg.LinAlgError:
            raise ConstructionError("closure projection became singular")
    else:
        raise ConstructionError("closure projection did not converge")
    if (a <= 0).any():
        raise ConstructionError("projection left the positive cone")
    return tuple(a.tolist())


# ---------------------------------------------------------------------------
# bodies and covers


@dataclass(frozen=True)
class DiskBody:
    """Circle of the given diameter centred at the origin."""

    diameter: float = 1.0


@dataclass(frozen=True)
class BoundaryCover:
    patches: tuple[ArcPatch, ...]
    k: int
    parent: DiskBody | ReuleauxPolygon

    def __post_init__(self):
        object.__setattr__(self, "patches", tuple(self.patches))

    @property
    def width(self) -> float:
        if isinstance(self.parent, DiskBody):
            return self.parent.diameter
        return self.parent.width


@dataclass(frozen=True)
class CoverReport:
    patch_count: int
    min_fold: int
    max_patch_diameter: float
    width: float

    @property
    def is_borsuk_cover(self) -> bool:
        return self.max_patch_diameter < self.width


def disk_cover(k: int) -> BoundaryCover:
    """k-fold cover of the unit-diameter circle by 2k+1 closed arcs.

    2k+1 equally spaced diameters; patch A_i is the shorter arc from p_i to
    p_{i+k} (angular length 2*pi*k/(2k+1) < pi), so every generic boundary
    point lies in exactly k patches.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 2 * k + 1
    r = 0.5
    patches = []
    for i in range(n):
        start = TWO_PI * i / n
        patches.append(ArcPatch((Arc((0.0, 0.0), r, start, TWO_PI * k / n),)))
    return BoundaryCover(tuple(patches), k, DiskBody(1.0))


def reuleaux_cover(p: ReuleauxPolygon, k: int) -> BoundaryCover:
    """k-fold Borsuk cover of the boundary with 2k + ceil(k/s) patches.

    The vertex diameter graph is the +-s circulant cycle; its exact k-fold
    colouring assigns k colours per vertex, G_i is the half of each side
    incident to p_i nearer to p_i (split at the arc midpoint), and patch j
    is the union of G_i over vertices carrying colour j.  The cover is
    re-verified before returning.
    """
    n, s = p.sides_count, p.s
    m, coloring = chi_k(Graph.cycle(n, step=s), k)
    sides = p.sides()
    halves_near: list[list[Arc]] = [[] for _ in range(n)]
    for i, arc in enumerate(sides):
        mid = arc.span / 2
        halves_near[i].append(Arc(arc.center, arc.radius, arc.start, mid))
        halves_near[(i + 1) % n].append(
            Arc(arc.center, arc.radius, arc.start + mid, arc.span - mid)
        )
    patches = []
    for color in range(1, m + 1):
        arcs: list[Arc] = []
        for v in range(n):
            if color in coloring.colors[v]:
                arcs.extend(halves_near[v])
        patches.append(ArcPatch(tuple(arcs)))
    cover = BoundaryCover(tuple(patches), k, p)
    report = verify_cover(cover)
    if report.min_fold < k or not report.is_borsuk_cover:
        raise ConstructionError(
            f"cover failed verification: fold {report.min_fold}, "
            f"max diameter {report.max_patch_diameter}"
        )
    return cover


# ---------------------------------------------------------------------------
# verification


def _boundary_intervals(cover: BoundaryCover) -> tuple[list, float]:
    """Map every patch arc onto the parent boundary parameter.

    Disk: the parameter is the angle, period 2*pi.  Reuleaux: parameter is
    side index + fraction of the side's central angle, period 2s+1.  Raises
    ConstructionError when an arc does not lie on the parent boundary.
    """
    if isinstance(cover.parent, DiskBody):
        r = cover.parent.diameter / 2
        intervals = []
        for j, patch in enumerate(cover.patches):
            for arc in patch.arcs:
                if (
                    np.linalg.norm(np.array(arc.center)) > 1e-9
                    or abs(arc.radius - r) > 1e-9
                ):
                    raise ConstructionError("malformed patch geometry: off-boundary arc")
                intervals.append((arc.start, arc.start + arc.span, j))
        return intervals, TWO_PI

    poly = cover.parent
    sides = poly.sides()
    n = poly.sides_count
    intervals = []
    for j, patch in enumerate(cover.patches):
        for arc in patch.arcs:
            placed = False
            for i, side in enumerate(sides):
                if (
                    np.linalg.norm(np.array(arc.center) - np.array(side.center))
                    > 1e-9 * poly.width
                    or abs(arc.radius - side.radius) > 1e-9 * poly.width
                ):
                    continue
                rel = (arc.start - side.start) % TWO_PI
                if rel > side.span + 1e-9 or rel + arc.span > side.span + 1e-9:
                    continue
                t0 = i + rel / side.span
                t1 = i + (rel + arc.span) / side.span
                intervals.append((t0, t1, j))
                placed = True
                break
            if not placed:
                raise ConstructionError("malformed patch geometry: off-boundary arc")
    return intervals, float(n)


def _max_point_on_arc_dist(pt: np.ndarray, arc: Arc) -> float:
    """Max distance from a point to an arc."""
    c = np.array(arc.center)
    best = max(float(np.linalg.norm(pt - e)) for e in arc.endpoints())
    v = c - pt
    nv = np.linalg.norm(v)
    if nv > 1e-13:
        far_ang = math.atan2(v[1], v[0])
        if arc.contains_angle(far_ang):
            best = max(best, float(nv + arc.radius))
    return best


def _max_arc_pair_dist(a: Arc, b: Arc) -> float:
    """Max distance between two arcs: endpoint pairs, endpoint-to-farthest
    circle points, and the through-both-centres critical chord."""
    best = 0.0
    for e in a.endpoints():
        best = max(best, _max_point_on_arc_dist(e, b))
    for e in b.endpoints():
        best = max(best, _max_point_on_arc_dist(e, a))
    ca, cb = np.array(a.center), np.array(b.center)
    d = cb - ca
    nd = np.linalg.norm(d)
    if nd > 1e-13:
        ang_a = math.atan2(-d[1], -d[0])
        ang_b = math.atan2(d[1], d[0])
        if a.contains_angle(ang_a) and b.contains_angle(ang_b):
            best = max(best, float(nd + a.radius + b.radius))
    else:
        # concentric: an antipodal pair inside both arcs realizes 2r
        for probe in (a.start, a.start + a.span, b.start, b.start + b.span):
            if a.contains_angle(probe) and b.contains_angle(probe + math.pi):
                best = max(best, a.radius + b.radius)
            if b.contains_angle(probe) and a.contains_angle(probe + math.pi):
                best = max(best, a.radius + b.radius)
    return best


def _patch_diameter(patch: ArcPatch) -> float:
    best = 0.0
    arcs = patch.arcs
    for i in range(len(arcs)):
        for j in range(i, len(arcs)):
            if i == j:
                arc = arcs[i]
                if arc.span >= math.pi:
                    best = max(best, 2 * arc.radius)
                else:
                    e0, e1 = arc.endpoints()
                    best = max(best, float(np.linalg.norm(e0 - e1)))
            else:
                best = max(best, _max_arc_pair_dist(arcs[i], arcs[j]))
    return best


def verify_cover(cover: BoundaryCover) -> CoverReport:
    """Exact fold sweep over the 1-dimensional boundary plus analytic patch
    diameters.

    Breakpoints are all interval endpoints; the fold is evaluated at every
    breakpoint and at every open-interval midpoint (the membership pattern
    is constant between breakpoints, so midpoints are exact).  Arcs are
    closed at both ends.
    """
    intervals, period = _boundary_intervals(cover)
    points = sorted({x % period for (t0, t1, _) in intervals for x in (t0, t1)})
    if not points:
        raise ConstructionError("cover has no patches")

    def fold(t: float) -> int:
        f = 0
        seen: set[int] = set()
        for (t0, t1, j) in intervals:
            if j in seen:
                continue
            if (t - t0) % period <= (t1 - t0) + 1e-9:
                seen.add(j)
                f += 1
        return f

    min_fold = None
    for i, b in enumerate(points):
        nxt = points[(i + 1) % len(points)]
        gap = (nxt - b) % period
        if gap == 0:
            gap = period
        for t in (b, (b + gap / 2) % period):
            f = fold(t)
            if min_fold is None or f < min_fold:
                min_fold = f

    max_diam = max(_patch_diameter(p) for p in cover.patches)
    return CoverReport(
        patch_count=len(cover.patches),
        min_fold=int(min_fold),
        max_patch_diameter=max_diam,
        width=cover.width,
    )


# ---------------------------------------------------------------------------
# serialization


def cover_to_json_dict(cover: BoundaryCover) -> dict:
    if isinstance(cover.parent, DiskBody):
        parent = {"kind": "disk", "diameter": cover.parent.diameter}
    else:
        parent = {
            "kind": "reuleaux",
            "width": cover.parent.width,
            "vertices": [list(v) for v in cover.parent.vertices],
            "arc_angles": list(cover.parent.arc_angles),
        }
    return {
        "k": cover.k,
        "parent": parent,
        "patches": [[a.to_json_dict() for a in p.arcs] for p in cover.patches],
    }


def cover_from_json_dict(data: dict) -> BoundaryCover:
    pd = data["parent"]
    if pd["kind"] == "disk":
        parent: DiskBody | ReuleauxPolygon = DiskBody(float(pd["diameter"]))
    elif pd["kind"] == "reuleaux":
        parent = ReuleauxPolygon(
            float(pd["width"]),
            tuple(tuple(v) for v in pd["vertices"]),
            tuple(pd["arc_angles"]),
        )
    else:
        raise ValueError(f"unknown parent kind {pd['kind']!r}")
    patches = tuple(
        ArcPatch(tuple(Arc.from_json_dict(a) for a in arcs))
        for arcs in data["patches"]
    )
    return BoundaryCover(patches, int(data["k"]), parent)
