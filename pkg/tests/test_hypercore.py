import json
import random
from itertools import combinations

import pytest

from bergex.core import (
    Hypergraph,
    Multigraph,
    complete_graph,
    count_cliques,
    cycle_graph,
    degree,
    is_linear,
    list_triangles,
    naive_count_cliques,
    pair_multiplicity,
    two_uniform,
)
from bergex.serial import InputFormatError, parse, to_json_doc, to_text


def random_hypergraph(rng, n_max=8):
    n = rng.randint(1, n_max)
    r = rng.randint(2, min(4, n)) if n >= 2 else 2
    pool = list(combinations(range(n), r))
    m = rng.randint(0, len(pool))
    return Hypergraph(n, r, rng.sample(pool, m))


def random_graph(rng, n_max=8):
    n = rng.randint(1, n_max)
    pairs = list(combinations(range(n), 2))
    m = rng.randint(0, len(pairs))
    return Multigraph(n, rng.sample(pairs, m))


class TestHypergraph:
    def test_validation(self):
        with pytest.raises(ValueError):
            Hypergraph(3, 3, [(0, 1, 1)])
        with pytest.raises(ValueError):
            Hypergraph(3, 3, [(0, 1, 3)])
        with pytest.raises(ValueError):
            Hypergraph(4, 3, [(0, 1, 2), (2, 1, 0)])
        with pytest.raises(ValueError):
            Hypergraph(4, 1, [(0,)])

    def test_canonical_order(self):
        h = Hypergraph(5, 3, [(4, 3, 2), (2, 1, 0)])
        assert h.edges == ((0, 1, 2), (2, 3, 4))

    def test_isolated_vertices_legal(self):
        h = Hypergraph(10, 3, [(0, 1, 2)])
        assert h.n == 10 and degree(h, 9) == 0

    def test_degree(self, fano):
        h = Hypergraph(5, 3, [(0, 1, 2), (0, 3, 4)])
        assert degree(h, 0) == 2
        assert degree(Hypergraph(4, 3, []), 1) == 0
        assert [degree(fano, v) for v in range(7)] == [3] * 7

    def test_pair_multiplicity(self, fano):
        h = Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)])
        assert pair_multiplicity(h, 0, 1) == 2
        assert pair_multiplicity(h, 2, 3) == 0
        assert pair_multiplicity(h, 1, 0) == 2
        for u in range(7):
            for v in range(u + 1, 7):
                assert pair_multiplicity(fano, u, v) == 1

    def test_is_linear(self, fano):
        assert is_linear(fano)
        assert not is_linear(Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)]))
        assert is_linear(Hypergraph(3, 3, [(0, 1, 2)]))

    def test_degree_sum_identity(self):
        rng = random.Random(11)
        for _ in range(40):
            h = random_hypergraph(rng)
            assert sum(degree(h, v) for v in range(h.n)) == h.r * len(h.edges)

    def test_linearity_matches_multiplicities(self):
        rng = random.Random(12)
        for _ in range(40):
            h = random_hypergraph(rng)
            worst = max((pair_multiplicity(h, u, v)
                         for u in range(h.n) for v in range(u + 1, h.n)),
                        default=0)
            assert is_linear(h) == (worst <= 1)


class TestMultigraph:
    def test_parallel_edges(self, c2):
        assert c2.has_parallel_edges
        assert c2.edge_multiplicity[(0, 1)] == 2
        assert c2.degree(0) == 2
        assert not complete_graph(3).has_parallel_edges

    def test_loops_rejected(self):
        with pytest.raises(ValueError):
            Multigraph(2, [(1, 1)])

    def test_simplified(self):
        g = Multigraph(3, [(0, 1), (0, 1), (1, 2)])
        assert g.simplified().edges == ((0, 1), (1, 2))

    def test_two_uniform_rejects_parallel(self, c2):
        with pytest.raises(ValueError):
            two_uniform(c2)


class TestCliqueCounting:
    def test_small_examples(self):
        k4 = complete_graph(4)
        assert count_cliques(k4, 3).count == 4
        two_tri = Multigraph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
        assert count_cliques(two_tri, 3).count == 2

    def test_edge_and_vertex_counts(self):
        rng = random.Random(13)
        for _ in range(30):
            g = random_graph(rng)
            assert count_cliques(g, 2).count == len(g.edges)
            assert count_cliques(g, 1).count == g.n

    def test_against_naive_oracle(self):
        rng = random.Random(14)
        for _ in range(60):
            g = random_graph(rng)
            for r in range(1, 6):
                assert count_cliques(g, r).count == naive_count_cliques(g, r)

    def test_parallel_rejected(self, c2):
        with pytest.raises(ValueError):
            count_cliques(c2, 2)
        with pytest.raises(ValueError):
            count_cliques(c2, 0)


class TestTriangleListing:
    def test_examples(self):
        assert list_triangles(complete_graph(3)) == [(0, 1, 2)]
        assert list_triangles(cycle_graph(4)) == []
        assert len(list_triangles(complete_graph(4))) == 4

    def test_lexicographic_and_complete(self):
        rng = random.Random(15)
        for _ in range(30):
            g = random_graph(rng)
            tris = list_triangles(g)
            assert tris == sorted(tris)
            assert len(tris) == len(set(tris)) == naive_count_cliques(g, 3)


class TestSerialization:
    def test_text_roundtrip(self, fano):
        assert parse(to_text(fano)) == fano
        g = Multigraph(3, [(0, 1), (0, 1), (1, 2)])
        assert parse(to_text(g)) == g
        assert "GR 3 3" in to_text(g)

    def test_json_roundtrip(self, fano):
        assert parse(json.dumps(to_json_doc(fano))) == fano
        g = Multigraph(4, [(0, 1)])
        doc = to_json_doc(g)
        assert doc["kind"] == "graph"
        assert parse(json.dumps(doc)) == g

    def test_errors(self):
        for bad in ["", "XX 1 2", "HG 3 3 2\n0 1 2", "{not json",
                    '{"kind": "mystery", "n": 1, "edges": []}',
                    "GR 2 1\n0 1 2"]:
            with pytest.raises(InputFormatError):
                parse(bad)
