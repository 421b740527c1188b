"""Independent brute-force oracles the tests check the library against.

Everything here is deliberately naive: plain enumerations with no pruning
shared with the library code paths.
"""

from __future__ import annotations

from itertools import combinations, permutations

from multiborsuk import Graph


def all_simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every simple cycle, canonical form: least vertex first, lesser
    neighbour second."""
    adj = g.adjacency()
    found = set()

    def extend(path, onpath):
        start = path[0]
        for w in adj[path[-1]]:
            if w == start and len(path) >= 3:
                if path[1] < path[-1]:
                    found.add(tuple(path))
            elif w > start and w not in onpath:
                extend(path + [w], onpath | {w})

    for a in range(g.order):
        extend([a], {a})
    return sorted(found, key=lambda c: (len(c), c))


def is_chordless(g: Graph, cyc: tuple[int, ...]) -> bool:
    es = set(g.edges)
    n = len(cyc)
    cyc_edges = {
        tuple(sorted((cyc[i], cyc[(i + 1) % n]))) for i in range(n)
    }
    for i in range(n):
        for j in range(i + 1, n):
            e = tuple(sorted((cyc[i], cyc[j])))
            if e in es and e not in cyc_edges:
                return False
    return True


def independence_exhaustive(g: Graph) -> int:
    es = set(g.edges)
    best = 0
    for size in range(g.order, 0, -1):
        for sub in combinations(range(g.order), size):
            if all(
                tuple(sorted((u, v))) not in es for u, v in combinations(sub, 2)
            ):
                return size
    return best


def maximal_independent_sets_exhaustive(g: Graph) -> list[frozenset[int]]:
    es = set(g.edges)

    def independent(sub):
        return all(
            tuple(sorted((u, v))) not in es for u, v in combinations(sub, 2)
        )

    indep = [
        frozenset(sub)
        for size in range(g.order + 1)
        for sub in combinations(range(g.order), size)
        if independent(sub)
    ]
    as_set = set(indep)
    maximal = [
        s
        for s in indep
        if not any(s < t for t in as_set)
    ]
    return sorted(maximal, key=lambda s: sorted(s))


def embeds_exhaustive(g: Graph, pattern: Graph) -> bool:
    """Injective edge-preserving map found by checking all injections."""
    ges = set(g.edges)
    for image in permutations(range(g.order), pattern.order):
        if all(
            tuple(sorted((image[u], image[v]))) in ges for u, v in pattern.edges
        ):
            return True
    return False


def disjoint_odd_cycles_exhaustive(g: Graph) -> bool:
    """True iff two vertex-disjoint odd cycles exist."""
    cycles = [c for c in all_simple_cycles(g) if len(c) % 2 == 1]
    for a in cycles:
        sa = set(a)
        for b in cycles:
            if sa.isdisjoint(b):
                return True
    return False
