import pytest

from conftest import to_nx
from dmlab.enumerator import (
    CensusRow,
    EnumerationTask,
    census_pipeline,
    enumerate_regular,
    enumeration_certificates,
)
from dmlab.errors import EnumerationError
from dmlab.graph import canonical_certificate, is_connected, is_regular
from dmlab.qw import build_wreath

# connected quartic graph counts, n = 5..10 (regression fixture, cross-checked
# against the cubic/quartic census literature)
CONNECTED_QUARTIC = {5: 1, 6: 1, 7: 2, 8: 6, 9: 16, 10: 59}


class TestCounts:
    @pytest.mark.parametrize("n,count", sorted(CONNECTED_QUARTIC.items()))
    def test_connected_quartic(self, n, count):
        graphs = list(enumerate_regular(EnumerationTask(n, 4, connected=True)))
        assert len(graphs) == count

    def test_cubic_small(self):
        # 3-regular connected: K4 at n=4, K_{3,3} and the prism at n=6
        assert len(list(enumerate_regular(EnumerationTask(4, 3)))) == 1
        assert len(list(enumerate_regular(EnumerationTask(6, 3)))) == 2

    def test_cycle_is_unique_2_regular(self):
        for n in range(3, 11):
            graphs = list(enumerate_regular(EnumerationTask(n, 2, connected=True)))
            assert len(graphs) == 1

    def test_complete_graph_extremes(self):
        for n in range(2, 8):
            graphs = list(enumerate_regular(EnumerationTask(n, n - 1)))
            assert len(graphs) == 1
            assert graphs[0].edges == frozenset(
                (i, j) for i in range(n) for j in range(i + 1, n)
            )


class TestOutputProperties:
    def test_members_are_regular_connected(self):
        for n in (5, 6, 7, 8):
            for g in enumerate_regular(EnumerationTask(n, 4, connected=True)):
                assert g.n == n
                assert is_regular(g, 4)
                assert is_connected(g)

    def test_pairwise_non_isomorphic(self):
        graphs = list(enumerate_regular(EnumerationTask(8, 4, connected=True)))
        certs = [canonical_certificate(g) for g in graphs]
        assert len(set(certs)) == len(certs)

    def test_matches_networkx_isomorphism_classes(self):
        import itertools

        import networkx as nx

        graphs = list(enumerate_regular(EnumerationTask(8, 4, connected=True)))
        for g1, g2 in itertools.combinations(graphs, 2):
            assert not nx.is_isomorphic(to_nx(g1), to_nx(g2))

    def test_wreath_appears(self):
        for k in (3, 4, 5):
            certs = enumeration_certificates(EnumerationTask(2 * k, 4, connected=True))
            assert canonical_certificate(build_wreath(k)) in certs

    def test_deterministic(self):
        a = [g.edges for g in enumerate_regular(EnumerationTask(8, 4))]
        b = [g.edges for g in enumerate_regular(EnumerationTask(8, 4))]
        assert a == b


class TestErrors:
    def test_order_above_guarantee(self):
        with pytest.raises(EnumerationError, match="order 10"):
            list(enumerate_regular(EnumerationTask(11, 4)))

    def test_valency_at_least_order(self):
        with pytest.raises(EnumerationError):
            list(enumerate_regular(EnumerationTask(4, 4)))

    def test_odd_degree_sum(self):
        with pytest.raises(EnumerationError):
            list(enumerate_regular(EnumerationTask(5, 3)))


class TestCensus:
    def test_orders_6_8_10(self):
        rows = census_pipeline([6, 8, 10])
        assert [(r.order, r.total, len(r.candidates), r.dm_confirmed) for r in rows] == [
            (6, 1, 1, 1),
            (8, 6, 1, 1),
            (10, 59, 1, 1),
        ]
        for row in rows:
            (cand,) = row.candidates
            assert canonical_certificate(cand) == canonical_certificate(
                build_wreath(row.order // 2)
            )

    def test_odd_orders_have_no_survivors(self):
        rows = census_pipeline([7, 9])
        assert [(r.total, len(r.candidates)) for r in rows] == [(2, 0), (16, 0)]
