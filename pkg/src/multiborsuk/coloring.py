"""Multifold colourings: exact chi_k, the fractional relaxation, and the two
constructive colourings used for diameter graphs.

Colour palettes are {1..m}.  chi_k's witness is canonical: the
lexicographically least valid colouring (vertex sets read in index order)
among all minimum-palette ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import BoundExceededError, HypothesisError
from .graphs import (
    Graph,
    independence_number,
    is_bipartite_with_parts,
    maximal_independent_sets,
    shortest_odd_cycle,
)
from .lp import simplex_max


@dataclass(frozen=True)
class MultiColoring:
    """Assignment of a k-subset of {1..m} to each vertex."""

    k: int
    m: int
    colors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "colors", tuple(tuple(sorted(cs)) for cs in self.colors)
        )

    def to_json_dict(self) -> dict:
        return {"k": self.k, "m": self.m, "colors": [list(c) for c in self.colors]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "MultiColoring":
        return cls(int(data["k"]), int(data["m"]), tuple(map(tuple, data["colors"])))


@dataclass(frozen=True)
class BorsukReport:
    """a_k sequence of a diameter graph plus the verified sanity flags."""

    a_values: tuple[int, ...]
    fractional: Fraction | None
    lower_bound_2k_ok: bool
    subadditive_ok: bool
    dichotomy_ok: bool


def validate(g: Graph, coloring: MultiColoring) -> tuple[bool, list[str]]:
    """Check both invariants against g; returns (ok, violations)."""
    if len(coloring.colors) != g.order:
        raise ValueError(
            f"colouring covers {len(coloring.colors)} vertices, graph has {g.order}"
        )
    violations = []
    for v, cs in enumerate(coloring.colors):
        if len(cs) != coloring.k:
            violations.append(f"vertex {v} has {len(cs)} colours, expected {coloring.k}")
        bad = [c for c in cs if not 1 <= c <= coloring.m]
        if bad:
            violations.append(f"vertex {v} uses colours {bad} outside 1..{coloring.m}")
        if len(set(cs)) != len(cs):
            violations.append(f"vertex {v} repeats a colour")
    for u, v in g.edges:
        shared = set(coloring.colors[u]) & set(coloring.colors[v])
        if shared:
            violations.append(f"edge ({u},{v}) shares colours {sorted(shared)}")
    return not violations, violations


# ---------------------------------------------------------------------------
# exact chi_k

_CHI_CACHE: dict[tuple[Graph, int], tuple[int, MultiColoring]] = {}


def _greedy_clique(g: Graph) -> int:
    adj = g.adjacency()
    cand = set(range(g.order))
    size = 0
    while cand:
        v = min(cand, key=lambda u: (-len(adj[u] & cand), u))
        size += 1
        cand &= adj[v]
    return size


def _search(g: Graph, k: int, m: int, order: list[int]):
    """Backtracking k-fold m-colouring along `order`; returns masks or None.

    Symmetry breaking: the first vertex is fixed to {1..k}, and colours
    must enter play in consecutive increasing order along the search.
    Forward check: an uncoloured vertex must keep >= k usable colours.
    """
    n = g.order
    adj = g.adjacency()
    pos = {v: i for i, v in enumerate(order)}
    full = (1 << m) - 1
    masks = [sum(1 << c for c in comb) for comb in combinations(range(m), k)]
    later = [[w for w in adj[v] if pos[w] > pos[v]] for v in range(n)]
    forbidden = [0] * n
    assigned = [0] * n

    def rec(i: int, top: int) -> bool:
        if i == n:
            return True
        v = order[i]
        forb = forbidden[v]
        for mask in masks:
            if mask & forb:
                continue
            high = mask >> top
            if high & (high + 1):
                continue  # new colours must be the next consecutive ones
            touched = []
            ok = True
            for w in later[v]:
                f2 = forbidden[w] | mask
                if f2 != forbidden[w]:
                    if (full & ~f2).bit_count() < k:
                        ok = False
                        break
                    touched.append((w, forbidden[w]))
                    forbidden[w] = f2
            if not ok:
                for w, old in touched:
                    forbidden[w] = old
                continue
            assigned[v] = mask
            if rec(i + 1, max(top, mask.bit_length())):
                return True
            for w, old in touched:
                forbidden[w] = old
        return False

    if m < k or not masks:
        return None
    v0 = order[0]
    mask0 = (1 << k) - 1
    assigned[v0] = mask0
    for w in later[v0]:
        forbidden[w] |= mask0
    if rec(1, k):
        return list(assigned)
    return None


def _feasible(g: Graph, k: int, m: int) -> bool:
    deg = g.degree_sequence()
    order = sorted(range(g.order), key=lambda v: (-deg[v], v))
    return _search(g, k, m, order) is not None


def _lex_min_witness(g: Graph, k: int, m: int) -> MultiColoring:
    masks = _search(g, k, m, list(range(g.order)))
    if masks is None:
        raise AssertionError(f"no {k}-fold {m}-colouring at proven optimum")
    colors = tuple(
        tuple(c + 1 for c in range(m) if mask >> c & 1) for mask in masks
    )
    return MultiColoring(k, m, colors)


def chi_k(g: Graph, k: int, max_order: int = 24) -> tuple[int, MultiColoring]:
    """Exact k-fold chromatic number with a canonical witness.

    Iterative deepening on the palette size m, starting from
    max(ceil(k|V|/alpha), k*omega) with omega a greedily found clique;
    previously computed values seed an upper bound by subadditivity.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.order > max_order:
        raise BoundExceededError(
            f"instance too large: order {g.order} > bound {max_order}"
        )
    if g.order == 0:
        raise ValueError("empty graph")
    hit = _CHI_CACHE.get((g, k))
    if hit is not None:
        return hit

    alpha = independence_number(g)
    lb = max(math.ceil(k * g.order / alpha), k * _greedy_clique(g))
    ub = None
    for k1 in range(1, k):
        a1 = _CHI_CACHE.get((g, k1))
        a2 = _CHI_CACHE.get((g, k - k1))
        if a1 and a2:
            cand = a1[0] + a2[0]
            ub = cand if ub is None else min(ub, cand)

    m = lb
    while True:
        if ub is not None and m >= ub:
            m = ub
            break
        if _feasible(g, k, m):
            break
        m += 1
    result = (m, _lex_min_witness(g, k, m))
    _CHI_CACHE[(g, k)] = result
    return result


def chi_k_bruteforce(g: Graph, k: int, m: int) -> bool:
    """Plain exhaustive check that a k-fold m-colouring exists.

    Independent oracle for chi_k: vertex-index order, no symmetry breaking,
    no forward checking; only adjacency-disjointness is tested.
    """
    if g.order > 10 or m > 12:
        raise BoundExceededError("bruteforce range is order <= 10, m <= 12")
    if m < k:
        return False
    adj = g.adjacency()
    subsets = [frozenset(c) for c in combinations(range(1, m + 1), k)]
    assign: dict[int, frozenset] = {}

    def rec(v: int) -> bool:
        if v == g.order:
            return True
        for s in subsets:
            if all(assign[w].isdisjoint(s) for w in adj[v] if w in assign):
                assign[v] = s
                if rec(v + 1):
                    return True
                del assign[v]
        return False

    return rec(0)


# ---------------------------------------------------------------------------
# fractional chromatic number


def fractional_chromatic(g: Graph, max_order: int = 18) -> Fraction:
    """Optimum of the fractional covering LP over maximal independent sets.

    min sum x_I  s.t.  sum_{I contains v} x_I >= 1, x >= 0, solved exactly:
    the simplex runs on the packing dual max sum y_v s.t. y(I) <= 1 (whose
    all-slack basis is feasible), and the covering optimum equals it by
    strong duality.  The primal weights are read off the final tableau and
    re-checked for feasibility and matching objective before returning.
    This optimum equals inf_k chi_k/k, which the tests cross-check against
    chi_k for small k.
    """
    if g.order > max_order:
        raise BoundExceededError(
            f"instance too large: order {g.order} > bound {max_order}"
        )
    sets = maximal_independent_sets(g, max_order=max_order)
    n = g.order
    A = [[Fraction(int(v in I)) for v in range(n)] for I in sets]
    b = [Fraction(1)] * len(sets)
    c = [Fraction(1)] * n
    value, _y, x = simplex_max(A, b, c)
    # x are the covering weights; verify the certificate exactly
    assert all(w >= 0 for w in x)
    for v in range(n):
        assert sum(x[i] for i, I in enumerate(sets) if v in I) >= 1
    assert sum(x) == value
    return value


# ---------------------------------------------------------------------------
# constructive colourings


def odd_cycle_multicoloring(m: int) -> MultiColoring:
    """m-fold (2m+1)-colouring of C_{2m+1} whose nonconsecutive vertex
    pairs always share a colour.

    Union of m three-colourings indexed by odd t in {1,3,..,2m-1}: in the
    t-th one, vertex v_t alone gets colour 2m+1 and v_{t+1}, v_{t+2}, ...
    around the cycle get t and t+1 alternately.
    """
    if m < 1:
        raise ValueError("m must be positive")
    n = 2 * m + 1
    sets: list[set[int]] = [set() for _ in range(n)]
    for t in range(1, 2 * m, 2):
        sets[t % n].add(n)
        for j in range(1, n):
            sets[(t + j) % n].add(t if j % 2 == 1 else t + 1)
    return MultiColoring(m, n, tuple(tuple(sorted(s)) for s in sets))


def triangle_free_coloring(g: Graph) -> MultiColoring:
    """m-fold colouring with at most 4m-1 colours, where 2m+1 is the length
    of a shortest odd cycle; certifies a_m < 4m for triangle-free diameter
    graphs.  Bipartite input gets the 1-fold 2-colouring.

    Raises HypothesisError naming the failed hypothesis when the input is
    not of the kind the construction covers (girth-3 inputs, non-bipartite
    remainder after deleting the odd cycle, or a vertex seeing the cycle
    too often).
    """
    parts = is_bipartite_with_parts(g)
    if parts is not None:
        colors = tuple((1,) if v in parts[0] else (2,) for v in range(g.order))
        col = MultiColoring(1, 2, colors)
        ok, bad = validate(g, col)
        assert ok, bad
        return col

    cyc = shortest_odd_cycle(g)
    assert cyc is not None
    if len(cyc) == 3:
        raise HypothesisError("girth 3: shortest odd cycle is a triangle")
    m = (len(cyc) - 1) // 2
    cset = frozenset(cyc.vertices)
    adj = g.adjacency()
    for v in range(g.order):
        if v in cset:
            continue
        on_cycle = [i for i, u in enumerate(cyc.vertices) if u in adj[v]]
        if len(on_cycle) > 2:
            raise HypothesisError(
                f"vertex {v} is adjacent to more than two cycle vertices"
            )
        L = len(cyc)
        if any((a - b) % L in (1, L - 1) for a in on_cycle for b in on_cycle):
            raise HypothesisError(
                f"vertex {v} is adjacent to two consecutive cycle vertices"
            )
    rem = is_bipartite_with_parts(g, skip=cset)
    if rem is None:
        raise HypothesisError("graph minus the shortest odd cycle is not bipartite")
    v1, v2 = rem

    cycle_col = odd_cycle_multicoloring(m)  # palette 1..2m+1 on C_{2m+1}
    sets: list[tuple[int, ...] | None] = [None] * g.order
    for i, u in enumerate(cyc.vertices):
        sets[u] = cycle_col.colors[i]
    high = tuple(range(3 * m, 4 * m))  # the m colours {3m..4m-1}
    for v in v2:
        sets[v] = high
    for v in sorted(v1):
        used = set()
        for u in adj[v] & cset:
            used.update(sets[u])
        avail = [c for c in range(1, 3 * m) if c not in used]
        if len(avail) < m:
            raise HypothesisError(
                f"vertex {v} has fewer than m free low colours"
            )
        sets[v] = tuple(avail[:m])
    col = MultiColoring(m, 4 * m - 1, tuple(sets))
    ok, bad = validate(g, col)
    assert ok, bad
    return col


# ---------------------------------------------------------------------------
# the Borsuk sequence of a diameter graph


def borsuk_sequence(g: Graph, kmax: int, max_order: int = 24) -> BorsukReport:
    """a_k = chi_k(g) for k = 1..kmax with the three verified properties:
    a_k >= 2k, the a_1 = 2 dichotomy, and subadditivity of the sequence."""
    if not g.edges:
        raise ValueError("edgeless input: the diameter is not attained")
    values = tuple(chi_k(g, k, max_order=max_order)[0] for k in range(1, kmax + 1))
    lower_ok = all(a >= 2 * k for k, a in enumerate(values, start=1))
    if values[0] == 2:
        dichotomy_ok = all(a == 2 * k for k, a in enumerate(values, start=1))
    else:
        dichotomy_ok = all(a > 2 * k for k, a in enumerate(values, start=1))
    subadd_ok = all(
        values[i + j + 1] <= values[i] + values[j]
        for i in range(kmax)
        for j in range(kmax)
        if i + j + 1 < kmax
    )
    frac = fractional_chromatic(g) if g.order <= 18 else None
    return BorsukReport(values, frac, lower_ok, subadd_ok, dichotomy_ok)
