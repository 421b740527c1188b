import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from multiborsuk import (
    BoundExceededError,
    Graph,
    HypothesisError,
    MultiColoring,
    borsuk_sequence,
    chi_k,
    chi_k_bruteforce,
    fractional_chromatic,
    independence_number,
    mycielskian,
    odd_cycle_multicoloring,
    shortest_odd_cycle,
    triangle_free_coloring,
    validate,
)

MU1_C3 = mycielskian(Graph.cycle(3), 1)
W6 = mycielskian(Graph.cycle(5), 0)


class TestValidate:
    def test_proper_coloring_of_c3(self):
        col = MultiColoring(1, 3, ((1,), (2,), (3,)))
        ok, violations = validate(Graph.cycle(3), col)
        assert ok and not violations

    def test_adjacent_sharing_color(self):
        col = MultiColoring(1, 3, ((1,), (1,), (3,)))
        ok, violations = validate(Graph.cycle(3), col)
        assert not ok and len(violations) == 1

    def test_vertex_count_mismatch(self):
        with pytest.raises(ValueError):
            validate(Graph.cycle(4), MultiColoring(1, 2, ((1,), (2,))))

    def test_wrong_fold_reported(self):
        col = MultiColoring(2, 5, ((1, 2), (3,), (4, 5)))
        ok, violations = validate(Graph.cycle(3), col)
        assert not ok and any("expected 2" in v for v in violations)


class TestChiK:
    def test_paper_value_c5_k2(self):
        m, w = chi_k(Graph.cycle(5), 2)
        assert m == 5
        assert validate(Graph.cycle(5), w)[0]

    def test_k4_k3(self):
        assert chi_k(Graph.complete(4), 3)[0] == 12

    def test_paper_value_mu1c3_k2(self):
        assert chi_k(MU1_C3, 2)[0] == 7

    def test_paper_value_w6_k2(self):
        assert chi_k(W6, 2)[0] == 7

    def test_witness_is_lexicographically_least(self):
        # oracle: enumerate all valid 2-fold 5-colourings of C5 and take min
        from itertools import combinations, product

        g = Graph.cycle(5)
        best = None
        subsets = list(combinations(range(1, 6), 2))
        for assign in product(subsets, repeat=5):
            if all(
                set(assign[u]).isdisjoint(assign[v]) for u, v in g.edges
            ):
                if best is None or assign < best:
                    best = assign
        m, w = chi_k(g, 2)
        assert w.colors == best

    def test_edgeless(self):
        m, w = chi_k(Graph.edgeless(3), 2)
        assert m == 2 and w.colors == ((1, 2),) * 3

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            chi_k(Graph.edgeless(30), 1)

    def test_odd_cycle_formula_small(self):
        # chi_k(C_{2s+1}) = 2k + ceil(k/s): spot checks beyond acceptance
        assert chi_k(Graph.cycle(7), 3)[0] == 7
        assert chi_k(Graph.cycle(9), 2)[0] == 5

    def test_wheel_formula(self):
        # cone adds k colours: chi_k(W_{2m+2}) = 3k + ceil(k/m)
        for m, k in [(2, 1), (2, 2), (3, 2)]:
            wheel = mycielskian(Graph.cycle(2 * m + 1), 0)
            assert chi_k(wheel, k)[0] == 3 * k + math.ceil(k / m)


class TestBruteforceOracle:
    def test_c5(self):
        assert chi_k_bruteforce(Graph.cycle(5), 2, 5)
        assert not chi_k_bruteforce(Graph.cycle(5), 2, 4)

    def test_k4(self):
        assert chi_k_bruteforce(Graph.complete(4), 1, 4)
        assert not chi_k_bruteforce(Graph.complete(4), 1, 3)

    def test_c7_k3(self):
        assert chi_k_bruteforce(Graph.cycle(7), 3, 7)
        assert not chi_k_bruteforce(Graph.cycle(7), 3, 6)

    def test_range_errors(self):
        with pytest.raises(BoundExceededError):
            chi_k_bruteforce(Graph.edgeless(11), 1, 2)
        with pytest.raises(BoundExceededError):
            chi_k_bruteforce(Graph.cycle(3), 1, 13)


class TestOddCycleMulticoloring:
    @pytest.mark.parametrize("m", [1, 2, 3, 5])
    def test_valid_and_shared(self, m):
        col = odd_cycle_multicoloring(m)
        n = 2 * m + 1
        g = Graph.cycle(n)
        assert col.k == m and col.m == n
        ok, violations = validate(g, col)
        assert ok, violations
        for i in range(n):
            for j in range(i + 2, n):
                if (j - i) % n in (1, n - 1):
                    continue
                assert set(col.colors[i]) & set(col.colors[j]), (i, j)

    def test_m1_proper_3coloring(self):
        col = odd_cycle_multicoloring(1)
        assert col.k == 1 and col.m == 3
        assert validate(Graph.cycle(3), col)[0]


class TestTriangleFreeColoring:
    def test_c5(self):
        g = Graph.cycle(5)
        col = triangle_free_coloring(g)
        assert col.k == 2 and col.m <= 7
        assert validate(g, col)[0]

    def test_mu1_c5_certifies(self):
        g = mycielskian(Graph.cycle(5), 1)
        col = triangle_free_coloring(g)
        assert col.k == 2 and col.m <= 7
        assert validate(g, col)[0]
        # certifies a_2 < 8

    def test_girth3_rejected(self):
        with pytest.raises(HypothesisError, match="girth 3"):
            triangle_free_coloring(MU1_C3)

    def test_bipartite_two_coloring(self):
        g = Graph.cycle(6)
        col = triangle_free_coloring(g)
        assert col.k == 1 and col.m == 2
        assert validate(g, col)[0]

    def test_nonbipartite_remainder_rejected(self):
        # two disjoint C5s: deleting the shortest odd cycle leaves a C5
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
        g = Graph(10, edges)
        with pytest.raises(HypothesisError, match="not bipartite"):
            triangle_free_coloring(g)

    def test_attachment_shortens_the_odd_cycle(self):
        # An apex seeing three C7 vertices creates a shorter odd cycle, so
        # the >2-neighbour guard never fires against a true shortest cycle
        # (that implication is the point of the guard); the construction
        # just works with the 5-cycle it finds instead.
        edges = [(i, (i + 1) % 7) for i in range(7)] + [(0, 7), (2, 7), (4, 7)]
        g = Graph(8, edges)
        col = triangle_free_coloring(g)
        assert col.k == 2 and col.m <= 7
        assert validate(g, col)[0]

    def test_consecutive_cycle_neighbours_mean_triangles(self):
        # a vertex seeing two consecutive cycle vertices is a triangle, so
        # the girth-3 rejection fires first
        edges = [(i, (i + 1) % 7) for i in range(7)] + [(0, 7), (1, 7)]
        g = Graph(8, edges)
        with pytest.raises(HypothesisError, match="girth 3"):
            triangle_free_coloring(g)


class TestBorsukSequence:
    def test_k4(self):
        rep = borsuk_sequence(Graph.complete(4), 3)
        assert rep.a_values == (4, 8, 12)
        assert rep.fractional == 4
        assert rep.lower_bound_2k_ok and rep.subadditive_ok and rep.dichotomy_ok

    def test_c5(self):
        rep = borsuk_sequence(Graph.cycle(5), 4)
        assert rep.a_values == (3, 5, 8, 10)

    def test_single_edge(self):
        rep = borsuk_sequence(Graph.complete(2), 3)
        assert rep.a_values == (2, 4, 6)
        assert rep.dichotomy_ok

    def test_edgeless_rejected(self):
        with pytest.raises(ValueError):
            borsuk_sequence(Graph.edgeless(3), 2)


def graphs_for_props(max_n=7):
    def build(n, mask):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges = [p for idx, p in enumerate(pairs) if mask >> idx & 1]
        return Graph(n, edges)

    return st.integers(2, max_n).flatmap(
        lambda n: st.builds(
            build, st.just(n), st.integers(0, 2 ** (n * (n - 1) // 2) - 1)
        )
    )


class TestChiKProperties:
    @given(graphs_for_props(6), st.integers(1, 2))
    @settings(max_examples=40, deadline=None)
    def test_independence_lower_bound(self, g, k):
        m, w = chi_k(g, k)
        assert m >= math.ceil(k * g.order / independence_number(g))
        assert validate(g, w)[0]

    @given(graphs_for_props(6))
    @settings(max_examples=25, deadline=None)
    def test_subadditive(self, g):
        a1 = chi_k(g, 1)[0]
        a2 = chi_k(g, 2)[0]
        a3 = chi_k(g, 3)[0]
        assert a2 <= 2 * a1
        assert a3 <= a1 + a2

    @given(graphs_for_props(6), st.integers(1, 2))
    @settings(max_examples=30, deadline=None)
    def test_agrees_with_bruteforce(self, g, k):
        m, _ = chi_k(g, k)
        if m <= 12:
            assert chi_k_bruteforce(g, k, m)
        if m - 1 >= k and m - 1 <= 12:
            assert not chi_k_bruteforce(g, k, m - 1)
