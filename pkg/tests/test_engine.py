import random
from fractions import Fraction
from itertools import combinations

import pytest

from bergex.constructions import FurediParams, furedi_k2t
from bergex.core import (
    Hypergraph,
    complete_graph,
    count_cliques,
    two_uniform,
)
from bergex.berge import contains_berge
from bergex.engine import (
    classify_pairs,
    clique_bound_check,
    eliminate,
    find_bad_set,
    select_blue_representatives,
)


class TestClassifyPairs:
    def test_r3_band(self):
        h = Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)])
        col = classify_pairs(h)
        assert col.pair_class[(0, 1)] == "red"
        for p in [(0, 2), (1, 2), (0, 3), (1, 3)]:
            assert col.pair_class[p] == "blue"
        assert col.hyperedge_class == ("blue", "blue")

    def test_fano_all_blue(self, fano):
        col = classify_pairs(fano)
        assert len(col.pair_class) == 21
        assert set(col.pair_class.values()) == {"blue"}

    def test_r4_threshold_boundary(self):
        h = Hypergraph(10, 4, [(0, 1, 2, 3), (0, 1, 4, 5), (0, 1, 6, 7),
                               (0, 1, 8, 9)])
        col = classify_pairs(h)
        assert col.blue_threshold == 4
        assert col.pair_class[(0, 1)] == "blue"

    def test_partition_covers_exactly_covered_pairs(self):
        rng = random.Random(41)
        for _ in range(20):
            n = rng.randint(3, 8)
            pool = list(combinations(range(n), 3))
            h = Hypergraph(n, 3, rng.sample(pool, rng.randint(1, min(10, len(pool)))))
            col = classify_pairs(h)
            covered = set(h._pair_mult)
            assert set(col.pair_class) == covered

    def test_r2_rejected(self):
        with pytest.raises(ValueError):
            classify_pairs(Hypergraph(3, 2, [(0, 1)]))


class TestSelection:
    def test_one_per_hyperedge(self):
        h = Hypergraph(3, 3, [(0, 1, 2)])
        sel = select_blue_representatives(h, classify_pairs(h))
        assert len(sel.s_prime) == 1

    def test_fano_greedy(self, fano):
        sel = select_blue_representatives(fano, classify_pairs(fano))
        assert len(sel.s_prime) == 7
        assert sel.achieved_ratio == Fraction(1, 3)
        # the claimed 1/(C(r,2)-2) ratio is 1 for r=3; unreachable here
        assert sel.below_claimed

    def test_disjoint_hyperedges(self):
        h = Hypergraph(9, 3, [(0, 1, 2), (3, 4, 5), (6, 7, 8)])
        sel = select_blue_representatives(h, classify_pairs(h))
        assert len(sel.s_prime) == 3

    def test_at_most_one_selected_per_blue_hyperedge(self, fano):
        sel = select_blue_representatives(fano, classify_pairs(fano))
        for e in fano.edges:
            pairs = set(combinations(e, 2))
            assert len(pairs & set(sel.s_prime)) <= 1


class TestFindBadSet:
    def test_two_edges_one_hyperedge(self):
        assert find_bad_set(["e1", "e2"], ["h1"], [[0], [0]]) == (
            ["e1", "e2"], ["h1"])

    def test_perfect_matching_absent(self):
        assert find_bad_set(["e1", "e2"], ["h1", "h2"], [[0], [1]]) is None

    def test_three_over_two(self):
        x, nx = find_bad_set(["a", "b", "c"], ["h1", "h2"],
                             [[0, 1], [0, 1], [0, 1]])
        assert len(x) == 3 and len(nx) == 2

    def test_deficiency_always_strict(self):
        rng = random.Random(42)
        for _ in range(60):
            nl = rng.randint(1, 6)
            nr = rng.randint(0, 6)
            adj = [[j for j in range(nr) if rng.random() < 0.4] for _ in range(nl)]
            out = find_bad_set(list(range(nl)), list(range(nr)), adj)
            if out is not None:
                x, nx = out
                assert len(nx) < len(x)
                # nx really is the whole neighborhood of x
                neigh = {j for i in x for j in adj[i]}
                assert set(nx) == neigh


class TestEliminate:
    def test_obvious_berge_k22(self, k22):
        h = Hypergraph(8, 3, [(0, 1, 4), (1, 2, 5), (2, 3, 6), (0, 3, 7)])
        rep = eliminate(h, k22)
        assert rep.status == "berge_found"
        assert rep.witness is not None and rep.witness.is_valid_for(h, k22)
        assert not rep.violations

    def test_fano_contains_berge_k22(self, fano, k22):
        # the 7-point plane does contain a Berge-K22 (four lines through the
        # pairs of a 4-cycle), so the pipeline must surface a witness
        rep = eliminate(fano, k22)
        assert rep.status == "berge_found"
        assert rep.witness.is_valid_for(fano, k22)

    def test_no_copy_zero_iterations(self, k22):
        rep = eliminate(Hypergraph(6, 3, [(0, 1, 2), (3, 4, 5)]), k22)
        assert rep.status == "clean"
        assert rep.iterations == 0 and not rep.deleted

    def test_kr_pattern_rejected(self, fano, k3):
        with pytest.raises(ValueError):
            eliminate(fano, k3)

    def test_r2_rejected(self, k22):
        with pytest.raises(ValueError):
            eliminate(Hypergraph(4, 2, [(0, 1)]), k22)

    def test_random_invariants(self, k22):
        rng = random.Random(43)
        for _ in range(40):
            n = rng.randint(4, 9)
            pool = list(combinations(range(n), 3))
            m = rng.randint(1, min(12, len(pool)))
            h = Hypergraph(n, 3, rng.sample(pool, m))
            rep = eliminate(h, k22)
            assert not rep.violations
            assert rep.iterations <= len(rep.g.edges)
            assert all(c <= 1 for c in rep.green_pair_incidence.values())
            if rep.status == "berge_found":
                assert rep.witness.is_valid_for(h, k22)
            else:
                assert contains_berge(two_uniform(rep.g1), k22) is None
                assert contains_berge(two_uniform(rep.g2), k22) is None
                # deleted edges never survive into G1
                assert not set(rep.deleted) & set(rep.g1.edges)

    def test_green_recoloring_path(self, k22):
        # a bad-set deletion whose victim sits in a fully-red hyperedge,
        # which must then turn green
        h = Hypergraph(8, 3, [(0, 1, 3), (0, 1, 5), (0, 5, 6), (1, 4, 7),
                              (1, 5, 6), (2, 3, 6), (2, 5, 7), (3, 4, 7),
                              (3, 6, 7)])
        rep = eliminate(h, k22)
        assert not rep.violations
        assert rep.deleted and rep.green_hyperedges == 1
        assert all(c <= 1 for c in rep.green_pair_incidence.values())
        assert any(t.recolored_green for t in rep.trace)

    def test_accounting(self, k22):
        rng = random.Random(44)
        for _ in range(20):
            n = rng.randint(4, 8)
            pool = list(combinations(range(n), 3))
            h = Hypergraph(n, 3, rng.sample(pool, rng.randint(1, min(10, len(pool)))))
            rep = eliminate(h, k22)
            assert (rep.blue_hyperedges + rep.green_hyperedges
                    + rep.purple_hyperedges) == len(h.edges)
            assert rep.x == len(set(rep.g1.edges) & set(rep.g2.edges))


class TestCliqueBoundCheck:
    def test_single_triangle(self):
        rep = clique_bound_check(complete_graph(3), Fraction(1), 1, 3, 3)
        assert rep.clique_count == 1
        assert rep.bound_first == 2 and rep.bound_second == 6
        assert rep.bound == 2 and rep.holds

    def test_no_clique_trivial(self, k22):
        from bergex.core import cycle_graph
        rep = clique_bound_check(cycle_graph(5), Fraction(1), 1, 5, 3)
        assert rep.clique_count == 0 and rep.holds

    def test_k2t_free_graph(self):
        # K_{2,3}-free graph; neighborhoods are K_{1,3}-free so c=1, i=1 work
        g = furedi_k2t(FurediParams.create(5, 3))
        rep = clique_bound_check(g, Fraction(1), 1, 30, 3)
        assert rep.clique_count == count_cliques(g, 3).count == 12
        assert rep.holds
