import pytest

from bergex.constructions import (
    FurediParams,
    furedi_k2t,
    linear_via_independent_set,
    linear_via_matching,
)
from bergex.core import Hypergraph, two_uniform
from bergex.linear_audit import audit, profile


class TestProfile:
    def test_fano_saturated_neighborhood(self, fano):
        p = profile(fano, 0, 3)
        assert p.n1 == frozenset(range(1, 7))
        assert p.n2 == frozenset()
        assert all(not hits for hits in p.e_u.values())

    def test_disjoint_edges(self):
        h = Hypergraph(6, 3, [(0, 1, 2), (3, 4, 5)])
        p = profile(h, 0, 2)
        assert p.n1 == frozenset({1, 2})
        assert p.n2 == frozenset()
        assert p.e_u == {1: (), 2: ()}

    def test_second_neighborhood(self):
        h = Hypergraph(5, 3, [(0, 1, 2), (1, 3, 4)])
        p = profile(h, 0, 2)
        assert p.n1 == frozenset({1, 2})
        assert p.n2 == frozenset({3, 4})
        assert p.e_u[1] == (1,)
        assert p.v_u[1] == frozenset({3, 4})
        assert p.v_i == (frozenset({3, 4}),)

    def test_invariants(self, fano):
        for v in range(7):
            p = profile(fano, v, 3)
            assert not p.n1 & p.n2
            assert v not in p.n1 and v not in p.n2
            for u, hits in p.e_u.items():
                for i in hits:
                    assert [x for x in fano.edges[i] if x in p.n1] == [u]

    def test_nonlinear_rejected(self):
        with pytest.raises(ValueError):
            profile(Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)]), 0, 2)


class TestAudit:
    def test_fano_t3(self, fano):
        rep = audit(fano, 3)
        assert rep.berge_free is True
        assert rep.ok and not rep.violations
        assert rep.global_inequality_ok

    def test_single_edge_t2(self):
        rep = audit(Hypergraph(3, 3, [(0, 1, 2)]), 2)
        assert rep.ok

    def test_independent_set_construction(self):
        g = furedi_k2t(FurediParams.create(5, 3))
        h, _ = linear_via_independent_set(g, 3)
        rep = audit(h, 3)
        assert rep.ok and rep.berge_free

    def test_matching_construction(self):
        g = furedi_k2t(FurediParams.create(5, 3))
        h, _ = linear_via_matching(g, 3)
        rep = audit(h, 3)
        assert rep.ok and rep.berge_free

    def test_r2_graph_case(self):
        # a K_{2,3}-free graph audited as a 2-uniform linear hypergraph
        g = furedi_k2t(FurediParams.create(5, 3))
        rep = audit(two_uniform(g), 3)
        assert rep.r == 2
        assert rep.ok and rep.berge_free

    def test_conditional_label(self, fano):
        rep = audit(fano, 3, detector_edge_limit=2)
        assert rep.conditional and rep.berge_free is None
        assert not rep.violations

    def test_rejections(self, fano):
        with pytest.raises(ValueError):
            audit(Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)]), 2)
        with pytest.raises(ValueError):
            audit(fano, 1)

    def test_constants(self, fano):
        from fractions import Fraction
        rep = audit(fano, 3)
        # r=3: (2*9 - 12 + 1) * 3 / 2 = 21/2
        assert rep.constants.c1 == Fraction(21, 2)
        assert rep.constants.c2 == Fraction(441, 4)
