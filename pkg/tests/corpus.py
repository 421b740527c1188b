"""Shared test corpus: small graphs and 3D point configurations."""

from __future__ import annotations

import random

from multiborsuk import Graph, mycielskian, regular_tetrahedron
from multiborsuk import mycielskian_pointset, wheel_pyramid
from multiborsuk.pointsets import PointSet


def hub_first_wheel(rim: int) -> Graph:
    """Wheel with the hub labelled 0 (cheap for the bruteforce oracle)."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph(rim + 1, edges)


def seeded_random_graphs() -> list[tuple[str, Graph]]:
    """Sparse random graphs, fixed seeds, small enough for the oracle."""
    out = []
    for seed, n, prob in [(11, 7, 0.25), (23, 8, 0.3), (37, 9, 0.2), (53, 8, 0.25)]:
        rng = random.Random(seed)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < prob
        ]
        if not edges:
            edges = [(0, 1)]
        out.append((f"random{seed}", Graph(n, edges)))
    return out


def graph_corpus() -> list[tuple[str, Graph]]:
    """Graphs with an edge; all of order <= 9 except none."""
    items = [
        ("K2", Graph.complete(2)),
        ("P4", Graph.path(4)),
        ("C3", Graph.cycle(3)),
        ("C4", Graph.cycle(4)),
        ("C5", Graph.cycle(5)),
        ("C6", Graph.cycle(6)),
        ("C7", Graph.cycle(7)),
        ("C9", Graph.cycle(9)),
        ("K4", Graph.complete(4)),
        ("W4", hub_first_wheel(3)),
        ("W6", hub_first_wheel(5)),
        ("mu1C3", mycielskian(Graph.cycle(3), 1)),
    ]
    items.extend(seeded_random_graphs())
    return items


def octahedron(eps: float = 1e-9) -> PointSet:
    """Regular octahedron: the diameter pairs are the three main diagonals."""
    return PointSet(
        3,
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)],
        eps=eps,
    )


def pointset_corpus() -> list[tuple[str, PointSet]]:
    items = [("tetrahedron", regular_tetrahedron()), ("octahedron", octahedron())]
    for k in (1, 2, 3):
        items.append((f"pyramid{k}", wheel_pyramid(k)))
    for k in (1, 2, 3):
        for p in (1, 2):
            s, _ = mycielskian_pointset(k, p)
            items.append((f"myc_k{k}_p{p}", s))
    return items


def realization_corpus() -> list[tuple[int, int, PointSet]]:
    """(k, p, points) for all acceptance-range realizations."""
    out = []
    for k in (1, 2, 3):
        for p in (0, 1, 2):
            s, _ = mycielskian_pointset(k, p)
            out.append((k, p, s))
    return out
