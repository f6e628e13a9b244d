import random
from itertools import combinations

import pytest

from bergex.berge import BergeWitness, is_berge_free
from bergex.core import Hypergraph, complete_graph, count_cliques
from bergex.reduction import Gp2Decomposition, gp2_certify, gp2_decompose, _lift


class TestDecompose:
    def test_hand_simulated(self):
        h = Hypergraph(5, 3, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])
        d = gp2_decompose(h)
        assert d.blue_graph.edges == ((0, 1), (0, 3), (2, 3))
        assert not d.blue_hyperedges

    def test_single_edge(self):
        d = gp2_decompose(Hypergraph(3, 3, [(0, 1, 2)]))
        assert len(d.blue_graph.edges) == 1 and not d.blue_hyperedges

    def test_all_triples_on_four(self):
        h = Hypergraph(4, 3, list(combinations(range(4), 3)))
        d = gp2_decompose(h)
        assert len(d.blue_graph.edges) <= 6
        assert len(d.blue_graph.edges) + len(d.blue_hyperedges) == 4

    def test_counting_identity_all_orders_and_rules(self, fano):
        rng = random.Random(31)
        hs = [fano,
              Hypergraph(4, 3, list(combinations(range(4), 3))),
              Hypergraph(6, 3, [(0, 1, 2), (0, 1, 3), (0, 1, 4), (2, 3, 4),
                                (1, 2, 5)])]
        for h in hs:
            for _ in range(8):
                order = list(range(len(h.edges)))
                rng.shuffle(order)
                d = gp2_decompose(h, order=order, pair_rule="random", rng=rng)
                assert d.counting_identity_holds(h)
                # every pair of a blue hyperedge is blue
                blue = set(d.blue_graph.edges)
                for i in d.blue_hyperedges:
                    assert all(p in blue for p in combinations(h.edges[i], 2))

    def test_bad_order_rejected(self, fano):
        with pytest.raises(ValueError):
            gp2_decompose(fano, order=[0, 0, 1, 2, 3, 4, 5])

    def test_random_rule_needs_rng(self, fano):
        with pytest.raises(ValueError):
            gp2_decompose(fano, pair_rule="random")


class TestCertify:
    def test_fano_k22(self, fano, k22):
        rep = gp2_certify(fano, k22, gp2_decompose(fano))
        # fano actually contains a Berge-K22, so the F-freeness check is
        # vacuous; identity and clique bound still hold
        assert rep.counting_identity_ok and rep.clique_bound_ok
        assert not rep.host_berge_free
        assert rep.all_ok

    def test_fano_k23(self, fano, k23):
        rep = gp2_certify(fano, k23, gp2_decompose(fano))
        assert rep.host_berge_free
        assert rep.blue_graph_f_free
        assert rep.all_ok

    def test_single_edge_k3(self, k3):
        h = Hypergraph(3, 3, [(0, 1, 2)])
        rep = gp2_certify(h, k3, gp2_decompose(h))
        assert rep.all_ok and rep.host_berge_free

    def test_blowup_host(self, fano_incidence, k22):
        from bergex.constructions import blowup_bipartite
        h = blowup_bipartite(fano_incidence, 3, 2)
        rep = gp2_certify(h, k22, gp2_decompose(h))
        assert rep.all_ok
        assert rep.host_berge_free and rep.blue_graph_f_free

    def test_clique_bound_unconditional(self, k22):
        rng = random.Random(32)
        for _ in range(25):
            n = rng.randint(3, 7)
            pool = list(combinations(range(n), 3))
            h = Hypergraph(n, 3, rng.sample(pool, rng.randint(0, len(pool))))
            d = gp2_decompose(h)
            assert len(d.blue_hyperedges) <= count_cliques(d.blue_graph, 3).count

    def test_malformed_decomposition(self, fano, k22):
        d = gp2_decompose(fano)
        bad = Gp2Decomposition(d.blue_graph, frozenset(), d.pick[:-1], d.order)
        with pytest.raises(ValueError):
            gp2_certify(fano, k22, bad)


class TestLift:
    def test_maps_copy_to_coloring_hyperedges(self, k3):
        # three hyperedges each coloring one side of a triangle
        h = Hypergraph(6, 3, [(0, 1, 3), (0, 2, 4), (1, 2, 5)])
        d = gp2_decompose(h)
        assert d.blue_graph.edges == ((0, 1), (0, 2), (1, 2))
        copy = BergeWitness((0, 1, 2), (0, 1, 2))
        lifted = _lift(d, copy)
        assert lifted.is_valid_for(h, k3)
