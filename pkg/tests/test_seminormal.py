"""Tests for the explicit graded representations at e = 0."""

from math import factorial

import pytest

from grkappa.core.cartan import DominantWeight
from grkappa.core.errors import DomainError
from grkappa.core.multipartition import Multipartition, enumerate_multipartitions
from grkappa.core.seminormal import (
    build_seminormal,
    projections,
    sparse_entries,
    verify_klr_relations,
)


@pytest.fixture
def weight():
    return DominantWeight((0,), 0)


def partition(*parts: int) -> Multipartition:
    return Multipartition.from_partition(parts)


class TestBuildSeminormal:
    def test_two_one(self, weight):
        rep = build_seminormal(partition(2, 1), weight)
        assert rep.dimension == 2
        assert rep.labels == ["1,3/2", "1,2/3"]
        assert rep.sequences == [(0, -1, 1), (0, 1, -1)]
        assert rep.degrees == [0, 0]
        assert sorted(rep.matrices()) == [
            "e(0,-1,1)", "e(0,1,-1)", "psi1", "psi2", "y1", "y2", "y3",
        ]
        # s_2 exchanges the two tableaux, s_1 leaves neither standard
        assert sparse_entries(rep.psi[1]) == [(0, 1, "1"), (1, 0, "1")]
        assert sparse_entries(rep.psi[0]) == []

    def test_projections(self):
        found = projections([(0, 1), (0, 1), (1, 0)])
        assert sparse_entries(found[(0, 1)]) == [(0, 0, "1"), (1, 1, "1")]
        assert sparse_entries(found[(1, 0)]) == [(2, 2, "1")]

    def test_rejects_positive_e(self):
        with pytest.raises(DomainError):
            build_seminormal(partition(2, 1), DominantWeight((0,), 3))

    def test_rejects_higher_level(self):
        with pytest.raises(DomainError):
            build_seminormal(partition(1), DominantWeight((0, 1), 0))


class TestRelations:
    @pytest.mark.parametrize("d", range(1, 7))
    def test_every_partition_satisfies_the_relations(self, weight, d):
        for mu in enumerate_multipartitions(d, 1):
            rep = build_seminormal(mu, weight)
            assert verify_klr_relations(rep, weight) == []

    @pytest.mark.parametrize("d", range(1, 7))
    def test_modules_are_separated_and_complete(self, weight, d):
        reps = [build_seminormal(mu, weight) for mu in enumerate_multipartitions(d, 1)]
        sequences = [seq for rep in reps for seq in rep.sequences]
        assert len(sequences) == len(set(sequences))
        assert sum(rep.dimension**2 for rep in reps) == factorial(d)

    def test_corrupted_generator_is_reported(self, weight):
        rep = build_seminormal(partition(2, 1), weight)
        rep.psi[0][0, 0] = 1
        relations = {violation.relation for violation in verify_klr_relations(rep, weight)}
        assert "R2PsiE" in relations

    def test_wrong_generator_count(self, weight):
        rep = build_seminormal(partition(2, 1), weight)
        rep.psi.pop()
        with pytest.raises(DomainError):
            verify_klr_relations(rep, weight)
