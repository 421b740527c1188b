"""Finite point sets, diameter graphs with a tolerance contract, and the
symmetry-based structural checkers for 3-space.

Edge classification uses a relative tolerance eps with a forbidden band:
a pair whose distance falls strictly between diam*(1-3*eps) and
diam*(1-eps) is neither clearly an edge nor clearly a non-edge, and the
extraction fails loudly instead of guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AmbiguousDiameterError, HypothesisError
from .graphs import (
    Graph,
    contains_subgraph,
    girth,
    is_bipartite_with_parts,
)

_ORTHO_TOL = 1e-8


@dataclass(frozen=True)
class PointSet:
    """Labelled points in R^n with the tolerance that governs edges."""

    dim: int
    points: tuple[tuple[float, ...], ...]
    labels: tuple[str, ...] | None = None
    eps: float = 1e-9

    def __post_init__(self):
        pts = tuple(tuple(float(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise ValueError("need at least two points")
        if any(len(p) != self.dim for p in pts):
            raise ValueError("point dimension mismatch")
        if self.labels is not None and len(self.labels) != len(pts):
            raise ValueError("labels/points mismatch")
        if not self.eps > 0:
            raise ValueError("eps must be positive")
        if diameter(self) <= 0:
            raise ValueError("diameter must be positive")

    def __len__(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=float)

    def to_json_dict(self) -> dict:
        data = {
            "dim": self.dim,
            "eps": self.eps,
            "points": [list(p) for p in self.points],
        }
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    @classmethod
    def from_json_dict(cls, data: dict) -> "PointSet":
        return cls(
            int(data["dim"]),
            tuple(tuple(p) for p in data["points"]),
            tuple(data["labels"]) if data.get("labels") else None,
            float(data.get("eps", 1e-9)),
        )


def _pairwise_distances(s: PointSet) -> np.ndarray:
    a = s.as_array()
    return np.linalg.norm(a[:, None, :] - a[None, :, :], axis=2)


def diameter(s: PointSet) -> float:
    """Maximum pairwise Euclidean distance (full pair scan)."""
    d = _pairwise_distances(s)
    return float(d.max())


def diameter_graph(s: PointSet) -> Graph:
    """Graph on the points whose edges are the diameter-realizing pairs.

    Edge iff dist >= diam*(1-eps); pairs inside the open band
    (diam*(1-3*eps), diam*(1-eps)) abort with AmbiguousDiameterError.
    """
    d = _pairwise_distances(s)
    dm = float(d.max())
    lo, hi = dm * (1 - 3 * s.eps), dm * (1 - s.eps)
    edges = []
    n = len(s)
    for i in range(n):
        for j in range(i + 1, n):
            if d[i, j] >= hi:
                edges.append((i, j))
            elif d[i, j] > lo:
                raise AmbiguousDiameterError(
                    f"distance of pair ({i},{j}) falls in the ambiguous band "
                    f"({lo:.12g}, {hi:.12g}); eps too coarse for this configuration"
                )
    return Graph(n, edges, labels=s.labels)


@dataclass(frozen=True)
class VazsonyiReport:
    n_points: int
    n_edges: int
    bound: int
    within_bound: bool
    critical: bool
    asserted: bool  # the 2n-2 bound is a theorem only in dimension 3


def vazsonyi_check(s: PointSet) -> VazsonyiReport:
    """|E(G_S)| <= 2|S|-2 check; asserted only for 3-dimensional sets."""
    g = diameter_graph(s)
    bound = 2 * len(s) - 2
    e = len(g.edges)
    return VazsonyiReport(
        n_points=len(s),
        n_edges=e,
        bound=bound,
        within_bound=e <= bound,
        critical=e == bound,
        asserted=s.dim == 3,
    )


# ---------------------------------------------------------------------------
# isometries


@dataclass(frozen=True)
class Isometry:
    """Rigid motion x -> M x + t with M orthogonal."""

    matrix: tuple[tuple[float, ...], ...]
    translation: tuple[float, ...]

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        t = np.asarray(self.translation, dtype=float)
        if m.shape[0] != m.shape[1] or m.shape[0] != t.shape[0]:
            raise ValueError("shape mismatch")
        if np.abs(m.T @ m - np.eye(m.shape[0])).max() > _ORTHO_TOL:
            raise ValueError("linear part is not orthogonal")
        object.__setattr__(self, "matrix", tuple(map(tuple, m.tolist())))
        object.__setattr__(self, "translation", tuple(t.tolist()))

    def apply(self, pts: np.ndarray) -> np.ndarray:
        m = np.asarray(self.matrix)
        t = np.asarray(self.translation)
        return pts @ m.T + t

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other: x -> M_self (M_other x + t_other) + t_self."""
        m1, t1 = np.asarray(self.matrix), np.asarray(self.translation)
        m2, t2 = np.asarray(other.matrix), np.asarray(other.translation)
        return Isometry(tuple(map(tuple, (m1 @ m2).tolist())), tuple((m1 @ t2 + t1).tolist()))

    def key(self, digits: int = 7) -> tuple:
        m = np.round(np.asarray(self.matrix), digits) + 0.0
        t = np.round(np.asarray(self.translation), digits) + 0.0
        return tuple(m.ravel().tolist()) + tuple(t.tolist())


def is_invariant(s: PointSet, t: Isometry) -> bool:
    """True iff t permutes the points within absolute tolerance eps*diam."""
    if len(t.translation) != s.dim:
        raise ValueError("isometry dimension mismatch")
    pts = s.as_array()
    moved = t.apply(pts)
    tol = s.eps * diameter(s)
    d = np.linalg.norm(moved[:, None, :] - pts[None, :, :], axis=2)
    taken = set()
    for i in range(len(s)):
        j = int(np.argmin(d[i]))
        if d[i, j] > tol or j in taken:
            return False
        taken.add(j)
    return True


def rotation_about_axis(axis, angle: float) -> Isometry:
    """Rotation by `angle` about the line through the origin along `axis`."""
    u = np.asarray(axis, dtype=float)
    nu = np.linalg.norm(u)
    if nu < 1e-12:
        raise ValueError("degenerate axis")
    u = u / nu
    c, s_ = math.cos(angle), math.sin(angle)
    ux = np.array([[0, -u[2], u[1]], [u[2], 0, -u[0]], [-u[1], u[0], 0]])
    m = c * np.eye(3) + s_ * ux + (1 - c) * np.outer(u, u)
    return Isometry(tuple(map(tuple, m.tolist())), (0.0, 0.0, 0.0))


def reflection_about_plane(normal, offset: float = 0.0) -> Isometry:
    """Reflection about the plane <unit(normal), x> = offset.

    The offset is the signed distance of the plane from the origin.
    """
    n = np.asarray(normal, dtype=float)
    nn = np.linalg.norm(n)
    if nn < 1e-12:
        raise ValueError("degenerate normal")
    n = n / nn
    m = np.eye(len(n)) - 2 * np.outer(n, n)
    t = 2 * offset * n
    return Isometry(tuple(map(tuple, m.tolist())), tuple(t.tolist()))


def dihedral_generators(order: int, axis, reference) -> list[Isometry]:
    """Generators of D_order about `axis`: the 2*pi/order rotation and the
    mirror through the plane spanned by axis and reference."""
    if order < 2:
        raise ValueError("order must be >= 2")
    u = np.asarray(axis, dtype=float)
    r = np.asarray(reference, dtype=float)
    if np.linalg.norm(u) < 1e-12:
        raise ValueError("degenerate axis")
    n = np.cross(u, r)
    if np.linalg.norm(n) < 1e-12:
        raise ValueError("reference direction parallel to axis")
    rot = rotation_about_axis(u, 2 * math.pi / order)
    mirror = reflection_about_plane(n)
    return [rot, mirror]


def _is_regular_tetrahedron(pts: np.ndarray, tol: float) -> bool:
    if pts.shape != (4, 3):
        return False
    d = [np.linalg.norm(pts[i] - pts[j]) for i in range(4) for j in range(i + 1, 4)]
    return max(d) - min(d) <= tol * max(d)


def tetrahedral_generators(tetra) -> list[Isometry]:
    """Two generators of the full symmetry group (order 24) of a regular
    tetrahedron: the isometries realizing the vertex permutations (0123)
    and (01)."""
    pts = np.asarray(tetra, dtype=float)
    if not _is_regular_tetrahedron(pts, 1e-6):
        raise ValueError("input is not a regular tetrahedron")
    centroid = pts.mean(axis=0)
    rel = pts - centroid

    def realize(perm):
        # rel[1..3] are linearly independent and rel sums to zero, so the
        # linear map sending them to their permuted images moves rel[0] too
        src = rel[1:4].T
        dst = rel[[perm[1], perm[2], perm[3]]].T
        m = dst @ np.linalg.inv(src)
        t = centroid - m @ centroid
        return Isometry(tuple(map(tuple, m.tolist())), tuple(t.tolist()))

    four_cycle = realize([1, 2, 3, 0])
    swap = realize([1, 0, 2, 3])
    return [four_cycle, swap]


def group_closure(
    generators: list[Isometry], max_order: int = 200
) -> list[Isometry]:
    """Finite closure of the generated group; fails loudly past max_order."""
    dim = len(generators[0].translation)
    ident = Isometry(tuple(map(tuple, np.eye(dim).tolist())), (0.0,) * dim)
    seen = {ident.key(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in generators:
                c = h.compose(g)
                k = c.key()
                if k not in seen:
                    if len(seen) >= max_order:
                        raise HypothesisError(
                            f"group closure exceeded {max_order} elements"
                        )
                    seen[k] = c
                    nxt.append(c)
        frontier = nxt
    return list(seen.values())


# ---------------------------------------------------------------------------
# theorem checkers


def on_plane_vertices(s: PointSet, normal, offset: float) -> frozenset[int]:
    """Indices of points on the plane <unit(normal), x> = offset."""
    n = np.asarray(normal, dtype=float)
    n = n / np.linalg.norm(n)
    tol = s.eps * diameter(s)
    vals = s.as_array() @ n - offset
    return frozenset(int(i) for i in np.nonzero(np.abs(vals) <= tol)[0])


def mirror_odd_cycle_check(s: PointSet, normal, offset: float = 0.0) -> bool:
    """True iff every odd cycle of G_S touches the mirror plane.

    Equivalent form actually tested: G_S minus the on-plane vertices is
    bipartite.  The plane must be a symmetry plane of s (HypothesisError
    otherwise).
    """
    refl = reflection_about_plane(normal, offset)
    if not is_invariant(s, refl):
        raise HypothesisError("plane is not a symmetry plane of the point set")
    g = diameter_graph(s)
    fixed = on_plane_vertices(s, normal, offset)
    return is_bipartite_with_parts(g, skip=fixed) is not None


@dataclass(frozen=True)
class TetrahedralReport:
    hypothesis_symmetry: bool  # generators fix s and close to >= 24 elements
    hypothesis_girth3: bool
    conclusion_k4: bool

    @property
    def theorem_consistent(self) -> bool:
        return (
            not self.hypothesis_symmetry
            or not self.hypothesis_girth3
            or self.conclusion_k4
        )


def tetrahedral_theorem_check(
    s: PointSet, generators: list[Isometry]
) -> TetrahedralReport:
    """Instance check of: tetrahedral symmetry and girth 3 imply a K4
    subgraph in the diameter graph."""
    sym = all(is_invariant(s, t) for t in generators)
    if sym:
        try:
            sym = len(group_closure(generators)) >= 24
        except HypothesisError:
            sym = False
    g = diameter_graph(s)
    girth3 = girth(g) == 3
    k4 = contains_subgraph(g, Graph.complete(4)) is not None
    return TetrahedralReport(sym, girth3, k4)


def regular_tetrahedron(edge: float = 1.0, eps: float = 1e-9) -> PointSet:
    """Vertices of a regular tetrahedron with the given edge length."""
    raw = np.array(
        [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float
    )
    raw *= edge / (2 * math.sqrt(2))
    return PointSet(3, tuple(map(tuple, raw.tolist())), eps=eps)
