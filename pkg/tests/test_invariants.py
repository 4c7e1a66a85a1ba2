"""Frustration, bipartiteness, balanced cliques, triangle and walk censuses."""

import numpy as np
import pytest
from hypothesis import given, settings

from signed_spectra import (
    InvalidParamsError,
    SignedGraph,
    Switching,
    TooLargeError,
    all_negative_complete,
    apply_switching,
    balanced_clique_number,
    compute_invariant_report,
    edge_bipartiteness,
    frustration_index_exact,
    frustration_index_upper,
    paper_c5,
    r_frustration_index,
    signed_cycle,
    triangle_census,
    walk_census,
)

from .conftest import random_graphs, signed_graphs
from .oracles import (
    brute_balanced_clique,
    deletion_frustration,
    enumerate_walks,
    min_negative_walks,
)


def k4_underlying(sign: int = 1) -> SignedGraph:
    return all_negative_complete(4) if sign < 0 else all_negative_complete(4).with_all_signs(1)


class TestFrustrationIndex:
    def test_all_positive_graph(self):
        g = SignedGraph.from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
        assert frustration_index_exact(g) == 0

    def test_paper_c5(self, c5):
        assert frustration_index_exact(c5) == 1

    def test_all_negative_k4(self):
        # frozen from the deletion oracle: two deletions leave a balanced C4
        assert frustration_index_exact(all_negative_complete(4)) == 2
        assert deletion_frustration(all_negative_complete(4)) == 2

    def test_guard(self):
        with pytest.raises(TooLargeError):
            frustration_index_exact(SignedGraph(26))

    def test_guard_env_override(self, monkeypatch):
        monkeypatch.setenv("SIGNED_SPECTRA_MAX_N", "30")
        assert frustration_index_exact(SignedGraph(26)) == 0
        monkeypatch.setenv("SIGNED_SPECTRA_MAX_N", "3")
        with pytest.raises(TooLargeError):
            frustration_index_exact(SignedGraph(4))

    def test_force_bypasses_guard(self):
        assert frustration_index_exact(SignedGraph(26), force=True) == 0

    def test_matches_deletion_oracle_on_corpus(self):
        for g in random_graphs(60, max_n=8, seed=41):
            assert frustration_index_exact(g) == deletion_frustration(g), g.to_sg()

    @given(signed_graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_matches_deletion_oracle_property(self, g):
        assert frustration_index_exact(g) == deletion_frustration(g)


class TestFrustrationUpper:
    def test_balanced_graph_reaches_zero(self):
        g = signed_cycle(4, negative_edges=(0, 1, 2, 3))
        assert frustration_index_upper(g, iters=1, seed=0) == 0

    def test_paper_c5(self, c5):
        assert frustration_index_upper(c5, iters=10, seed=0) == 1

    def test_never_below_exact(self):
        for g in random_graphs(40, max_n=9, seed=7):
            upper = frustration_index_upper(g, iters=5, seed=3)
            assert upper >= frustration_index_exact(g)

    def test_iters_validated(self, c5):
        with pytest.raises(InvalidParamsError):
            frustration_index_upper(c5, iters=0)


class TestEdgeBipartiteness:
    def test_c4_already_bipartite(self):
        g = signed_cycle(4)
        assert edge_bipartiteness(g) == 0

    def test_triangle_needs_one(self):
        g = all_negative_complete(3)
        assert edge_bipartiteness(g) == 1

    def test_k4_needs_two(self):
        assert edge_bipartiteness(k4_underlying()) == 2

    def test_sign_independent(self, c5):
        assert edge_bipartiteness(c5) == edge_bipartiteness(c5.with_all_signs(1)) == 1


class TestBalancedClique:
    def test_all_negative_triangle(self):
        assert balanced_clique_number(all_negative_complete(3)) == 2

    def test_paper_c5(self, c5):
        assert balanced_clique_number(c5) == 2

    def test_all_positive_k5(self):
        assert balanced_clique_number(all_negative_complete(5).with_all_signs(1)) == 5

    def test_edgeless_is_one(self):
        assert balanced_clique_number(SignedGraph(4)) == 1

    def test_empty_graph_rejected(self):
        with pytest.raises(InvalidParamsError):
            balanced_clique_number(SignedGraph(0))

    def test_guard(self):
        with pytest.raises(TooLargeError):
            balanced_clique_number(SignedGraph(41))

    def test_matches_subset_oracle_on_corpus(self):
        for g in random_graphs(60, max_n=9, seed=43, p=(0.4, 0.7)):
            assert balanced_clique_number(g) == brute_balanced_clique(g), g.to_sg()


class TestTriangleCensus:
    def test_all_negative_triangle(self):
        census = triangle_census(all_negative_complete(3))
        assert (census.t_plus, census.t_minus, census.t_s) == (0, 1, -1)

    def test_triangle_free(self, c5):
        census = triangle_census(c5)
        assert (census.t_plus, census.t_minus, census.t_s) == (0, 0, 0)

    def test_all_positive_k4(self):
        census = triangle_census(k4_underlying())
        assert (census.t_plus, census.t_minus, census.t_s) == (4, 0, 4)

    @given(signed_graphs(max_n=8))
    @settings(max_examples=80, deadline=None)
    def test_trace_identity_exact(self, g):
        a = np.zeros((g.n, g.n), dtype=object)
        for u, v, s in g.edges:
            a[u, v] = a[v, u] = s
        trace_cubed = int(np.trace(a @ a @ a)) if g.n else 0
        assert 6 * triangle_census(g).t_s == trace_cubed


class TestWalkCensus:
    def test_r1_counts_vertices(self, c5):
        census = walk_census(c5, 1)
        assert (census.w_total, census.w_signed, census.w_neg) == (5, 5, 0)

    def test_positive_k2_r3(self):
        g = SignedGraph.from_edges(2, [(0, 1, 1)])
        census = walk_census(g, 3)
        assert (census.w_total, census.w_signed) == (2, 2)

    def test_paper_c5_r2(self, c5):
        census = walk_census(c5, 2)
        assert census.w_total == 2 * c5.m == 10
        assert census.w_signed == 2 * (c5.m_plus - c5.m_minus) == 6

    def test_matches_enumeration(self):
        for g in random_graphs(15, max_n=5, seed=11):
            for r in (1, 2, 3, 4):
                census = walk_census(g, r)
                assert (
                    census.w_total,
                    census.w_signed,
                    census.w_pos,
                    census.w_neg,
                ) == enumerate_walks(g, r)

    @given(signed_graphs(max_n=7))
    @settings(max_examples=50, deadline=None)
    def test_parity_and_nonnegativity(self, g):
        census = walk_census(g, 3)
        assert census.w_pos >= 0 and census.w_neg >= 0
        assert census.w_pos + census.w_neg == census.w_total
        assert census.w_total % 2 == census.w_signed % 2

    def test_r_validated(self, c5):
        with pytest.raises(InvalidParamsError):
            walk_census(c5, 0)

    def test_overflow_detected(self):
        g = all_negative_complete(14).with_all_signs(1)
        with pytest.raises(OverflowError):
            walk_census(g, 60)


class TestRFrustration:
    def test_balanced_graph_any_r(self):
        g = signed_cycle(4, negative_edges=(0, 1))
        for r in (1, 2, 3, 4):
            assert r_frustration_index(g, r) == 0

    def test_r1_is_zero(self, c5):
        assert r_frustration_index(c5, 1) == 0

    def test_paper_c5_r2(self, c5):
        assert r_frustration_index(c5, 2) == 2
        assert min_negative_walks(c5, 2) == 2

    def test_matches_enumeration_oracle(self):
        for g in random_graphs(12, max_n=6, seed=17):
            for r in (2, 3):
                assert r_frustration_index(g, r) == min_negative_walks(g, r)

    @given(signed_graphs(max_n=7))
    @settings(max_examples=40, deadline=None)
    def test_eps2_is_twice_frustration(self, g):
        assert r_frustration_index(g, 2) == 2 * frustration_index_exact(g)

    def test_switching_invariant(self, c5):
        eta = Switching((1, -1, 1, -1, 1))
        assert r_frustration_index(apply_switching(c5, eta), 3) == r_frustration_index(c5, 3)

    def test_guard(self):
        with pytest.raises(TooLargeError):
            r_frustration_index(SignedGraph(21), 2)


class TestPositiveEdgeLemma:
    """Every switching representative has at most m - eps positive edges."""

    def test_over_all_switchings(self):
        from itertools import product

        for g in random_graphs(20, max_n=7, seed=23):
            eps = frustration_index_exact(g)
            for bits in product((1, -1), repeat=max(g.n - 1, 0)):
                switched = apply_switching(g, Switching((1,) + bits))
                assert switched.m_plus <= g.m - eps


class TestInvariantReport:
    def test_exact_under_guards(self, c5):
        report = compute_invariant_report(c5)
        assert report.frustration == 1
        assert report.edge_bipartiteness == 1
        assert report.balanced_clique == 2
        assert report.triangle_census.t_s == 0
        assert all(report.exact_flags.values())

    def test_heuristic_fallback_over_guard(self, monkeypatch):
        monkeypatch.setenv("SIGNED_SPECTRA_MAX_N", "4")
        g = paper_c5()
        report = compute_invariant_report(g)
        assert not report.exact_flags["frustration"]
        assert not report.exact_flags["balanced_clique"]
        assert report.frustration >= 1  # upper bound
        assert report.balanced_clique <= 2  # greedy lower bound
