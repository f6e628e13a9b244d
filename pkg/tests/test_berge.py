import random
from itertools import combinations

import pytest

from bergex.berge import (
    OracleLimitError,
    contains_berge,
    is_berge_free,
    oracle_contains_berge,
)
from bergex.core import (
    Hypergraph,
    Multigraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    is_linear,
    path_graph,
)


class TestContainsBerge:
    def test_single_edge(self):
        h = Hypergraph(3, 3, [(0, 1, 2)])
        w = contains_berge(h, complete_graph(2))
        assert w is not None and w.is_valid_for(h, complete_graph(2))
        assert set(w.core_map) <= {0, 1, 2}

    def test_two_parallel_edges(self, c2):
        h = Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)])
        w = contains_berge(h, c2)
        assert w is not None and w.is_valid_for(h, c2)
        assert set(w.core_map) == {0, 1}
        assert set(w.edge_map) == {0, 1}

    def test_triangle_with_distinct_hyperedges(self, k3):
        h = Hypergraph(6, 3, [(0, 1, 2), (0, 3, 4), (1, 3, 5)])
        w = contains_berge(h, k3)
        assert w is not None and w.is_valid_for(h, k3)
        assert sorted(w.core_map) == [0, 1, 3]

    def test_too_few_hyperedges_absent(self, k3):
        h = Hypergraph(5, 3, [(0, 1, 2), (0, 1, 3)])
        assert contains_berge(h, k3) is None

    def test_fano_facts(self, fano, k22, k23, k3, c2):
        assert contains_berge(fano, k22) is not None
        assert contains_berge(fano, k3) is not None
        assert contains_berge(fano, k23) is None
        assert contains_berge(fano, c2) is None

    def test_deterministic(self, fano, k22):
        a = contains_berge(fano, k22)
        b = contains_berge(fano, k22)
        assert a == b

    def test_require_edge_restriction(self, c2):
        # the pair {0,1} only reaches multiplicity 2 through edge index 1
        h = Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)])
        w = contains_berge(h, c2, require_edge=1)
        assert w is not None and 1 in w.edge_map
        h2 = Hypergraph(6, 3, [(0, 1, 2), (0, 1, 3), (3, 4, 5)])
        assert contains_berge(h2, c2, require_edge=2) is None

    def test_isolated_pattern_vertex_needs_room(self):
        # a pattern vertex beyond the host's vertex count cannot embed
        f = Multigraph(4, [(0, 1)])
        h = Hypergraph(2, 2, [(0, 1)])
        assert contains_berge(h, f) is None


class TestIsBergeFree:
    def test_family(self, fano, c2, k22):
        assert is_berge_free(fano, [c2])
        assert not is_berge_free(fano, [c2, k22])
        assert not is_berge_free(Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)]), [c2])
        assert is_berge_free(Hypergraph(4, 3, []), [c2, k22])

    def test_linearity_bridge(self, c2):
        rng = random.Random(21)
        for _ in range(60):
            n = rng.randint(3, 7)
            pool = list(combinations(range(n), 3))
            m = rng.randint(0, min(9, len(pool)))
            h = Hypergraph(n, 3, rng.sample(pool, m))
            assert is_berge_free(h, [c2]) == is_linear(h)


class TestOracle:
    def test_limits(self):
        big = Hypergraph(8, 3, list(combinations(range(8), 3))[:13])
        with pytest.raises(OracleLimitError):
            oracle_contains_berge(big, complete_graph(2))
        with pytest.raises(OracleLimitError):
            oracle_contains_berge(Hypergraph(3, 3, [(0, 1, 2)]),
                                  complete_bipartite(2, 8))

    def test_randomized_agreement(self, c2, k22, k3):
        rng = random.Random(22)
        patterns = [complete_graph(2), c2, path_graph(3), path_graph(4), k3,
                    k22, complete_bipartite(1, 3)]
        positives = 0
        for _ in range(120):
            n = rng.randint(3, 7)
            r = rng.randint(2, min(4, n))
            pool = list(combinations(range(n), r))
            m = rng.randint(0, min(10, len(pool)))
            h = Hypergraph(n, r, rng.sample(pool, m))
            f = rng.choice(patterns)
            w = contains_berge(h, f)
            assert (w is not None) == oracle_contains_berge(h, f)
            if w is not None:
                positives += 1
                assert w.is_valid_for(h, f)
        assert positives > 10

    def test_monotone_under_edge_addition(self, k3):
        rng = random.Random(23)
        base = Hypergraph(6, 3, [(0, 1, 2), (0, 3, 4), (1, 3, 5)])
        pool = [e for e in combinations(range(6), 3) if e not in base.edges]
        for _ in range(20):
            extra = rng.sample(pool, rng.randint(0, 4))
            bigger = Hypergraph(6, 3, list(base.edges) + extra)
            assert contains_berge(bigger, k3) is not None


class TestWitnessValidation:
    def test_detects_corruption(self, fano, k22):
        from bergex.berge import BergeWitness
        w = contains_berge(fano, k22)
        assert w.violations(fano, k22) == []
        broken = BergeWitness(w.core_map, (w.edge_map[0],) + w.edge_map[:3])
        assert broken.violations(fano, k22)
        not_injective = BergeWitness((0, 0, 1, 2), w.edge_map)
        assert not_injective.violations(fano, k22)
