import pytest

from spheresys.enumeration import (
    EnumerationQuery,
    KNOWN_COUNTS,
    ResourceLimitError,
    enumerate_triangulations,
    max_min_density,
    naive_enumerate_count,
    verify_proposition,
)
from spheresys.triangulation import icosahedron, octahedron, tetrahedron


def classes(n, **kw):
    return list(enumerate_triangulations(EnumerationQuery(n, **kw)))


class TestCounts:
    @pytest.mark.parametrize("n", range(4, 11))
    def test_reference_counts(self, n):
        assert len(classes(n)) == KNOWN_COUNTS[n]

    @pytest.mark.parametrize("n", range(4, 8))
    def test_independent_oracle(self, n):
        assert len(classes(n)) == naive_enumerate_count(n)

    def test_unique_known_small_cases(self):
        (only4,) = classes(4)
        assert only4.is_isomorphic(tetrahedron())
        (only5,) = classes(5)
        assert sorted(only5.degree) == [3, 3, 4, 4, 4]

    def test_min_degree_filter(self):
        assert len(classes(6, min_degree=4)) == 1
        assert classes(6, min_degree=4)[0].is_isomorphic(octahedron())
        seven = classes(7, min_degree=4)
        assert len(seven) == 1 and sorted(seven[0].degree) == [4, 4, 4, 4, 4, 5, 5]
        assert classes(5, min_degree=4) == []


class TestStreamProperties:
    def test_all_valid_and_distinct(self):
        emitted = classes(8)
        codes = set()
        for t in emitted:
            report = t.validate()
            assert report.ok and report.regular
            codes.add(t.canonical_code())
        assert len(codes) == len(emitted)

    def test_deterministic_order(self):
        first = [t.canonical_form().to_text() for t in classes(7)]
        second = [t.canonical_form().to_text() for t in classes(7)]
        assert first == second

    def test_resource_limit(self):
        with pytest.raises(ResourceLimitError):
            list(enumerate_triangulations(EnumerationQuery(13)))

    def test_degenerate_queries_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_triangulations(EnumerationQuery(6, allow_loops=True)))
        with pytest.raises(ValueError):
            list(enumerate_triangulations(EnumerationQuery(6, allow_duplicates=True)))

    @pytest.mark.parametrize("n", (7, 8, 9))
    def test_low_degree_vertex_has_low_degree_neighbor(self, n):
        # the prose case analyses exclude a degree-3 vertex whose
        # neighbours all have degree >= 7 (planarity via K33); no
        # generated triangulation realizes it
        for t in classes(n):
            lists = t.simple_neighbor_lists()
            for v, nbrs in enumerate(lists):
                if t.degree[v] == 3:
                    assert min(t.degree[w] for w in nbrs) < 7


class TestMaxMinDensity:
    @pytest.mark.parametrize("n,value", [(4, 9), (5, 12), (6, 16), (7, 16),
                                         (8, 18), (9, 20), (10, 20)])
    def test_values(self, n, value):
        got, extremal = max_min_density(EnumerationQuery(n))
        assert got == value
        assert extremal
        for t in extremal:
            assert t.density().min_density == value

    def test_n9_extremal_degree_sequence(self):
        _, extremal = max_min_density(EnumerationQuery(9))
        assert len(extremal) == 1
        assert sorted(extremal[0].degree) == [4, 4, 4, 5, 5, 5, 5, 5, 5]

    def test_n6_extremal_is_octahedron(self):
        _, extremal = max_min_density(EnumerationQuery(6))
        assert len(extremal) == 1
        assert extremal[0].is_isomorphic(octahedron())


class TestVerifyProposition:
    @pytest.mark.parametrize("n", range(4, 10))
    def test_reports(self, n):
        report = verify_proposition(n)
        assert report["ok"]
        assert report["regular_ok"] and report["degenerate_ok"]

    def test_range_check(self):
        with pytest.raises(ValueError):
            verify_proposition(3)
