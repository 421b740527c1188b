"""Point sets in 3-space whose diameter graphs are wheels and generalized
Mycielskians of odd cycles.

All constructions are stacks of regular (2k+1)-gon layers on a common axis
with zero angular twist (the mirror symmetry through each base vertex
forces the twist).  Layer radii shrink geometrically; each layer's height
is solved so its points sit at distance exactly one from the +-k diagonal
partners in the layer below, and the final apex lands on the axis at
distance exactly one from the top layer, on the side away from the layer
below it.  A margin audit guarantees every non-diameter distance stays
below 1 - 1e-4, far outside the diameter classifier's ambiguity band.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coloring import chi_k
from .errors import ConstructionError
from .graphs import (
    Graph,
    CycleWitness,
    girth,
    graphs_isomorphic,
    mycielskian,
    wheel_subgraph,
)
from .pointsets import PointSet, diameter_graph, dihedral_generators, is_invariant

MARGIN = 1e-3  # target gap between non-diameter distances and the diameter
AUDIT_MARGIN = 1e-4  # hard audit floor


@dataclass(frozen=True)
class Layer:
    radius: float
    height: float
    twist: float = 0.0


@dataclass(frozen=True)
class LayeredConstruction:
    k: int
    p: int
    layers: tuple[Layer, ...]
    apex_height: float

    def __post_init__(self):
        radii = [la.radius for la in self.layers]
        if any(b >= a for a, b in zip(radii, radii[1:])):
            raise ConstructionError("layer radii must strictly decrease")


def _polygon(nv: int, radius: float, height: float) -> list[tuple[float, float, float]]:
    return [
        (
            radius * math.cos(2 * math.pi * i / nv),
            radius * math.sin(2 * math.pi * i / nv),
            height,
        )
        for i in range(nv)
    ]


def _expected_graph(k: int, p: int) -> Graph:
    return mycielskian(Graph.cycle(2 * k + 1), p)


def _audit_margins(pts: np.ndarray) -> float:
    """Smallest gap 1 - d over non-diameter pairs (diameter must be 1)."""
    d = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=2)
    dm = float(d.max())
    if abs(dm - 1.0) > 1e-9:
        raise ConstructionError(f"diameter {dm} != 1")
    iu = np.triu_indices(len(pts), k=1)
    vals = d[iu]
    non_edges = vals[vals < 1 - 1e-9]
    if len(non_edges) == 0:
        return 1.0
    return float(1.0 - non_edges.max())


def wheel_pyramid(k: int, eps: float = 1e-9) -> PointSet:
    """Pyramid over a regular (2k+1)-gon whose diameter graph is W_{2k+2}.

    The base polygon's longest diagonals have length one (they form the
    +-k circulant cycle) and the apex is at distance exactly one from
    every base vertex.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    nv = 2 * k + 1
    R = 1.0 / (2 * math.sin(math.pi * k / nv))
    pts = _polygon(nv, R, 0.0)
    pts.append((0.0, 0.0, math.sqrt(1 - R * R)))
    s = PointSet(3, tuple(pts), eps=eps)
    g = diameter_graph(s)
    if not graphs_isomorphic(g, _expected_graph(k, 0)):
        raise ConstructionError("wheel pyramid verification failed")
    return s


def mycielskian_pointset(
    k: int, p: int, eps: float = 1e-9
) -> tuple[PointSet, LayeredConstruction]:
    """Point set with diameter graph mu_p(C_{2k+1}), plus its layer data.

    p = 0 is the wheel pyramid.  For p >= 1, each new layer j is a polygon
    of radius sigma_j near the current apex candidate; its height solves
    |q^j_i - q^{j-1}_{i+-k}| = 1 exactly.  sigma_j starts at a fixed
    fraction of the previous radius and is halved (re-solving) until the
    margin audit and the final graph isomorphism both pass.
    """
    if k < 1 or p < 0:
        raise ValueError("need k >= 1, p >= 0")
    nv = 2 * k + 1
    R = 1.0 / (2 * math.sin(math.pi * k / nv))
    if p == 0:
        s = wheel_pyramid(k, eps=eps)
        layers = (Layer(R, 0.0),)
        return s, LayeredConstruction(k, 0, layers, math.sqrt(1 - R * R))

    c = math.cos(2 * math.pi * k / nv)
    shrink = 1.0 / 3.0
    sigma1 = R * shrink
    for _attempt in range(8):
        result = _build_layers(k, p, R, c, sigma1, shrink, eps)
        if result is not None:
            return result
        sigma1 /= 2.0
    raise ConstructionError(
        f"no feasible layer radii found for (k,p)=({k},{p}) after retries"
    )


def _build_layers(k, p, R, c, sigma1, shrink, eps):
    nv = 2 * k + 1
    layers = [Layer(R, 0.0)]
    sign = 1.0
    sigma = sigma1
    for _j in range(1, p + 1):
        rho, h = layers[-1].radius, layers[-1].height
        drop2 = 1 - sigma * sigma - rho * rho + 2 * sigma * rho * c
        if drop2 <= 0:
            return None
        layers.append(Layer(sigma, h + sign * math.sqrt(drop2)))
        sign = -sign
        sigma *= shrink
    top = layers[-1]
    apex_h = top.height + sign * math.sqrt(1 - top.radius ** 2)

    pts: list[tuple[float, float, float]] = []
    for layer in layers:
        pts.extend(_polygon(nv, layer.radius, layer.height))
    pts.append((0.0, 0.0, apex_h))
    arr = np.asarray(pts)
    try:
        margin = _audit_margins(arr)
    except ConstructionError:
        return None
    if margin < AUDIT_MARGIN or margin < MARGIN / 2:
        return None
    s = PointSet(3, tuple(map(tuple, arr.tolist())), eps=eps)
    g = diameter_graph(s)
    expected = _expected_graph(k, p)
    if len(g.edges) != len(expected.edges) or not graphs_isomorphic(g, expected):
        return None
    if len(g.edges) != 2 * len(s) - 2:
        return None
    return s, LayeredConstruction(k, p, tuple(layers), apex_h)


def polygon_mirror_planes(k: int) -> list[tuple[tuple[float, float, float], float]]:
    """The 2k+1 construction mirror planes: each contains the axis and one
    base vertex direction; returned as (unit normal, offset=0)."""
    nv = 2 * k + 1
    out = []
    for i in range(nv):
        theta = 2 * math.pi * i / nv
        out.append(((-math.sin(theta), math.cos(theta), 0.0), 0.0))
    return out


def mu1_borsuk_formula(k: int, m: int) -> int:
    """k-fold Borsuk number of a set realizing mu_1(C_{2m+1}), as reported:
    4 for k=1; 5k/2+1 for even k; for odd k >= 3, 2k+(k+3)/2 when
    k <= m <= (3k+3)/2 and 2k+(k+5)/2 when m >= (3k+5)/2."""
    if k < 1 or m < 1:
        raise ValueError("need k >= 1, m >= 1")
    if k == 1:
        return 4
    if k % 2 == 0:
        return 5 * k // 2 + 1
    if m < k:
        raise ValueError(
            f"formula range: odd k={k} requires m >= k, got m={m}"
        )
    if 2 * m <= 3 * k + 3:
        return 2 * k + (k + 3) // 2
    return 2 * k + (k + 5) // 2


@dataclass(frozen=True)
class DihedralReport:
    m: int
    hypothesis_symmetry: bool  # D_{2m+1} generators fix the set
    hypothesis_borsuk4: bool  # chi_1(G_S) == 4
    hypothesis_girth3: bool
    conclusion_wheel: bool  # plain W_{2m+2} subgraph found
    note: str = (
        "conclusion tests the plain wheel subgraph; the topological"
        " (subdivided) variant is not searched"
    )

    @property
    def theorem_consistent(self) -> bool:
        return (
            not self.hypothesis_symmetry
            or not self.hypothesis_borsuk4
            or not self.hypothesis_girth3
            or self.conclusion_wheel
        )


def dihedral_theorem_check(
    s: PointSet, m: int, axis=(0.0, 0.0, 1.0), reference=(1.0, 0.0, 0.0)
) -> DihedralReport:
    """Instance check of: D_{2m+1} symmetry, Borsuk number 4 and girth 3
    imply a (topological) wheel W_{2m+2} subgraph.

    The dihedral generators are built about `axis` with mirror through
    `reference`; the constructions in this module use the defaults.
    """
    gens = dihedral_generators(2 * m + 1, axis, reference)
    sym = all(is_invariant(s, t) for t in gens)
    g = diameter_graph(s)
    chrom = chi_k(g, 1)[0] if g.edges else 1
    wheel = wheel_subgraph(g, m)
    return DihedralReport(
        m=m,
        hypothesis_symmetry=sym,
        hypothesis_borsuk4=chrom == 4,
        hypothesis_girth3=girth(g) == 3,
        conclusion_wheel=wheel is not None,
    )
