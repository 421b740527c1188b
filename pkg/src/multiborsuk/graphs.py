"""Simple undirected graphs and the structural algorithms the rest builds on.

Vertices are integers 0..order-1.  All witness-returning operations are
deterministic: among equally good witnesses the lexicographically least one
is returned, so results are reproducible across runs.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import BoundExceededError

INFINITE = math.inf


def _canonical_edges(order: int, edges) -> tuple[tuple[int, int], ...]:
    out = set()
    for e in edges:
        u, v = e
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"edge {e!r} out of range for order {order}")
        out.add((min(u, v), max(u, v)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with a canonically sorted edge tuple."""

    order: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("negative order")
        object.__setattr__(self, "edges", _canonical_edges(self.order, self.edges))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.order:
                raise ValueError("labels/order mismatch")

    # -- constructors -------------------------------------------------

    @classmethod
    def cycle(cls, n: int, step: int = 1) -> "Graph":
        """Cycle on n vertices; step>1 gives the i ~ i+step circulant."""
        if n < 3:
            raise ValueError("cycle needs >= 3 vertices")
        return cls(n, [(i, (i + step) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, list(combinations(range(n), 2)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def edgeless(cls, n: int) -> "Graph":
        return cls(n, [])

    @classmethod
    def wheel(cls, rim: int) -> "Graph":
        """Wheel W_{rim+1}: a rim-cycle plus a hub (vertex `rim`) joined to it."""
        edges = [(i, (i + 1) % rim) for i in range(rim)]
        edges += [(i, rim) for i in range(rim)]
        return cls(rim + 1, edges)

    # -- basic accessors ----------------------------------------------

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)

    def degree_sequence(self) -> tuple[int, ...]:
        deg = [0] * self.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    # -- file format ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.order, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Graph":
        return cls(int(data["n"]), [tuple(e) for e in data["edges"]])


@dataclass(frozen=True)
class CycleWitness:
    """A cycle given as a vertex sequence, consecutive entries adjacent."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3:
            raise ValueError("cycle length < 3")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("repeated vertex in cycle")

    def __len__(self) -> int:
        return len(self.vertices)

    def check(self, g: Graph) -> bool:
        """True iff every consecutive pair (wrapping) is an edge of g."""
        es = set(g.edges)
        n = len(self.vertices)
        return all(
            tuple(sorted((self.vertices[i], self.vertices[(i + 1) % n]))) in es
            for i in range(n)
        )


# ---------------------------------------------------------------------------
# cycles, girth, bipartiteness


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; math.inf for forests.

    BFS from every root; the shortest cycle through a root is detected by
    the first non-tree edge, and the minimum over roots is exact.
    """
    adj = g.adjacency()
    best = INFINITE
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: -1}
        dq = deque([root])
        while dq:
            u = dq.popleft()
            if dist[u] * 2 >= best:
                continue
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    dq.append(w)
                elif parent[u] != w and parent[w] != u:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def _shortest_odd_length(g: Graph) -> int | None:
    """Minimum odd cycle length via BFS in the bipartite double cover."""
    adj = g.adjacency()
    n = g.order
    best = None
    for v in range(n):
        dist = {(v, 0): 0}
        dq = deque([(v, 0)])
        while dq:
            (u, par) = dq.popleft()
            d = dist[(u, par)]
            if best is not None and d >= best:
                continue
            for w in adj[u]:
                node = (w, par ^ 1)
                if node not in dist:
                    dist[node] = d + 1
                    dq.append(node)
        d = dist.get((v, 1))
        if d is not None and (best is None or d < best):
            best = d
    return best


def _exact_length_cycle(adj, allowed, start, length) -> tuple[int, ...] | None:
    """Lexicographically least cycle of exactly `length` through `start`,
    using only vertices from `allowed` that are >= start (plus start)."""
    path = [start]
    onpath = {start}

    def rec() -> tuple[int, ...] | None:
        if len(path) == length:
            if start in adj[path[-1]]:
                return tuple(path)
            return None
        for w in sorted(adj[path[-1]]):
            if w <= start or w not in allowed or w in onpath:
                continue
            path.append(w)
            onpath.add(w)
            got = rec()
            if got:
                return got
            path.pop()
            onpath.remove(w)
        return None

    return rec()


def shortest_odd_cycle(g: Graph) -> CycleWitness | None:
    """Minimum-length odd cycle, or None iff g is bipartite.

    Deterministic: the lexicographically least vertex sequence among all
    minimum-length odd cycles is returned.
    """
    length = _shortest_odd_length(g)
    if length is None:
        return None
    adj = g.adjacency()
    allowed = set(range(g.order))
    for start in range(g.order):
        seq = _exact_length_cycle(adj, allowed, start, length)
        if seq:
            return CycleWitness(seq)
    raise AssertionError("odd cycle length found but no witness")


def is_bipartite_with_parts(
    g: Graph, skip: frozenset[int] = frozenset()
) -> tuple[frozenset[int], frozenset[int]] | None:
    """2-colouring partition, or None.  Component roots land in part one.

    `skip` restricts the test to the vertex-deleted subgraph g - skip.
    """
    adj = g.adjacency()
    side = {}
    for root in range(g.order):
        if root in skip or root in side:
            continue
        side[root] = 0
        dq = deque([root])
        while dq:
            u = dq.popleft()
            for w in adj[u]:
                if w in skip:
                    continue
                if w not in side:
                    side[w] = side[u] ^ 1
                    dq.append(w)
                elif side[w] == side[u]:
                    return None
    part1 = frozenset(v for v, s in side.items() if s == 0)
    part2 = frozenset(v for v, s in side.items() if s == 1)
    return part1, part2


def chordless_cycles(g: Graph):
    """Yield all chordless cycles as vertex tuples (least vertex first).

    Depth-first with two prunes: a path never extends through a vertex
    adjacent to an interior path vertex (chord), and a vertex adjacent to
    the start closes the cycle immediately (extending past it would leave
    a chord back to the start).
    """
    adj = g.adjacency()
    for a in range(g.order):
        stack = [(w, [a, w]) for w in sorted(adj[a], reverse=True) if w > a]
        while stack:
            v, path = stack.pop()
            onpath = set(path)
            for w in sorted(adj[v], reverse=True):
                if w <= a or w in onpath:
                    continue
                if any(u in adj[w] for u in path[1:-1]):
                    continue
                if a in adj[w]:
                    if path[1] < w:
                        yield tuple(path + [w])
                    continue
                stack.append((w, path + [w]))


def odd_cycles_pairwise_intersect(
    g: Graph, max_order: int = 24
) -> tuple[bool, tuple[CycleWitness, CycleWitness] | None]:
    """True iff no two vertex-disjoint odd cycles exist.

    Enumerates odd chordless cycles C and tests bipartiteness of g - V(C);
    restricting to chordless cycles loses nothing, since a shortest odd
    cycle inside one member of a disjoint pair is chordless.  The first
    non-bipartite remainder yields the witness pair.
    """
    if g.order > max_order:
        raise BoundExceededError(
            f"instance too large: order {g.order} > bound {max_order}"
        )
    for cyc in chordless_cycles(g):
        if len(cyc) % 2 == 0:
            continue
        removed = frozenset(cyc)
        if is_bipartite_with_parts(g, skip=removed) is None:
            sub_edges = [e for e in g.edges if e[0] not in removed and e[1] not in removed]
            other = shortest_odd_cycle(Graph(g.order, sub_edges))
            assert other is not None
            return False, (CycleWitness(cyc), other)
    return True, None


# ---------------------------------------------------------------------------
# Mycielskians


def mycielskian(g: Graph, p: int) -> Graph:
    """Generalized p-Mycielskian: levels 0..p of V(g) plus one apex.

    Level-0 keeps the edges of g; levels j and j+1 are joined by u^j v^{j+1}
    and v^j u^{j+1} for every edge uv; the apex is joined to all of level p.
    mycielskian(g, 0) is the cone over g.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    n = g.order
    edges = list(g.edges)
    for j in range(p):
        for u, v in g.edges:
            edges.append((j * n + u, (j + 1) * n + v))
            edges.append((j * n + v, (j + 1) * n + u))
    apex = (p + 1) * n
    edges.extend((p * n + v, apex) for v in range(n))
    return Graph(apex + 1, edges)


# ---------------------------------------------------------------------------
# subgraph search


def contains_subgraph(g: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Injective map carrying pattern edges to g edges (not induced).

    Returns the lexicographically least embedding as a tuple indexed by
    pattern vertex, or None.
    """
    if pattern.order > g.order:
        return None
    gadj = g.adjacency()
    padj = pattern.adjacency()
    gdeg = [len(s) for s in gadj]
    pdeg = [len(s) for s in padj]
    image: list[int] = []
    used = set()

    def rec() -> bool:
        i = len(image)
        if i == pattern.order:
            return True
        earlier = [(j, image[j]) for j in padj[i] if j < i]
        for cand in range(g.order):
            if cand in used or gdeg[cand] < pdeg[i]:
                continue
            if any(cand not in gadj[t] for _, t in earlier):
                continue
            image.append(cand)
            used.add(cand)
            if rec():
                return True
            image.pop()
            used.remove(cand)
        return False

    if rec():
        return tuple(image)
    return None


def wheel_subgraph(g: Graph, m: int) -> tuple[int, CycleWitness] | None:
    """Embedding of the wheel W_{2m+2}: a hub joined to a (2m+1)-cycle.

    Returns (hub, rim cycle) with the least hub and, for it, the least rim
    sequence; None when no plain (non-subdivided) wheel is present.
    """
    if m < 1:
        raise ValueError("m must be positive")
    rim_len = 2 * m + 1
    adj = g.adjacency()
    for hub in range(g.order):
        nbrs = adj[hub]
        if len(nbrs) < rim_len:
            continue
        for start in sorted(nbrs):
            seq = _exact_length_cycle(adj, nbrs, start, rim_len)
            if seq:
                return hub, CycleWitness(seq)
    return None


# ---------------------------------------------------------------------------
# independence


def independence_number(g: Graph, max_order: int = 40) -> int:
    """Exact independence number via branch and bound."""
    if g.order > max_order:
        raise BoundExceededError(
            f"instance too large: order {g.order} > bound {max_order}"
        )
    adj = g.adjacency()

    # greedy lower bound: repeatedly take a minimum-degree vertex
    cand = set(range(g.order))
    best = 0
    while cand:
        v = min(cand, key=lambda u: (len(adj[u] & cand), u))
        best += 1
        cand -= adj[v] | {v}

    def bb(cand: set[int], size: int):
        nonlocal best
        if size + len(cand) <= best:
            return
        if not cand:
            best = max(best, size)
            return
        v = max(cand, key=lambda u: (len(adj[u] & cand), u))
        bb(cand - adj[v] - {v}, size + 1)
        bb(cand - {v}, size)

    bb(set(range(g.order)), 0)
    return best


def maximal_independent_sets(
    g: Graph, max_order: int = 18
) -> list[frozenset[int]]:
    """All inclusion-maximal independent sets, sorted canonically.

    Bron-Kerbosch with pivoting on the complement graph.
    """
    if g.order > max_order:
        raise BoundExceededError(
            f"instance too large: order {g.order} > bound {max_order}"
        )
    adj = g.adjacency()
    # complement adjacency: non-neighbours
    co = [set(range(g.order)) - adj[v] - {v} for v in range(g.order)]
    out = []

    def bk(r: set[int], p: set[int], x: set[int]):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(co[u] & p))
        for v in sorted(p - co[pivot]):
            bk(r | {v}, p & co[v], x & co[v])
            p.remove(v)
            x.add(v)

    bk(set(), set(range(g.order)), set())
    return sorted(out, key=lambda s: sorted(s))


# ---------------------------------------------------------------------------
# isomorphism


def _neighbour_signature(adj, deg):
    return [tuple(sorted(deg[w] for w in adj[v])) for v in range(len(adj))]


def graphs_isomorphic(g: Graph, h: Graph) -> bool:
    """Edge-preserving bijection test; degree prefilter then backtracking."""
    if g.order != h.order or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degree_sequence()) != sorted(h.degree_sequence()):
        return False
    gadj, hadj = g.adjacency(), h.adjacency()
    gdeg, hdeg = g.degree_sequence(), h.degree_sequence()
    gsig = _neighbour_signature(gadj, gdeg)
    hsig = _neighbour_signature(hadj, hdeg)
    if sorted(gsig) != sorted(hsig):
        return False
    # map g vertices in order of ascending candidate count
    sig_count = {}
    for s in hsig:
        sig_count[s] = sig_count.get(s, 0) + 1
    order = sorted(range(g.order), key=lambda v: (sig_count[gsig[v]], -gdeg[v], v))
    mapping: dict[int, int] = {}
    used = set()

    def rec(i: int) -> bool:
        if i == g.order:
            return True
        v = order[i]
        mapped_nbrs = [(w, mapping[w]) for w in gadj[v] if w in mapping]
        for cand in range(h.order):
            if cand in used or hdeg[cand] != gdeg[v] or hsig[cand] != gsig[v]:
                continue
            if any(cand not in hadj[t] for _, t in mapped_nbrs):
                continue
            mapping[v] = cand
            used.add(cand)
            if rec(i + 1):
                return True
            del mapping[v]
            used.remove(cand)
        return False

    return rec(0)
