"""Tests for the Fock space action and the quantum group relation checker."""

import pytest

from grkappa.core import fock
from grkappa.core.cartan import DominantWeight
from grkappa.core.errors import DomainError
from grkappa.core.fock import (
    FockVector,
    fock_divided_power,
    fock_E,
    fock_F,
    fock_K,
    relevant_residues,
    verify_uqg_relations,
    weight_space_dimension,
)
from grkappa.core.laurent import LaurentPoly
from grkappa.core.multipartition import Multipartition, parse_multipartition

q = LaurentPoly.monomial(1)


def M(text: str) -> FockVector:
    return FockVector.basis(parse_multipartition(text))


@pytest.fixture
def weight():
    return DominantWeight((0,), 2)


class TestFockVector:
    def test_zero_terms_dropped(self):
        mu = parse_multipartition("1")
        v = FockVector({mu: LaurentPoly()})
        assert not v
        assert str(v) == "0"

    def test_arithmetic(self):
        v = M("2") + M("1,1").scale(q)
        assert v.coefficient(parse_multipartition("1,1")) == q
        assert v - v == FockVector()
        assert str(M("1")) == "(1)*M[1]"

    def test_mixed_levels_rejected(self):
        with pytest.raises(DomainError):
            M("1") + M("1|0")


class TestActions:
    def test_raising_from_the_vacuum(self, weight):
        vacuum = FockVector.basis(Multipartition.empty(1))
        assert fock_F(0, vacuum, weight) == M("1")
        assert fock_F(1, vacuum, weight) == FockVector()

    def test_f_weights_by_nodes_above(self, weight):
        assert fock_F(1, M("1"), weight) == M("2") + M("1,1").scale(q.bar())

    def test_e_weights_by_nodes_below(self, weight):
        assert fock_E(1, M("2"), weight) == M("1").scale(q)
        assert fock_E(1, M("1,1"), weight) == M("1")
        assert fock_E(0, M("1"), weight) == FockVector.basis(Multipartition.empty(1))

    def test_k_is_diagonal(self, weight):
        vacuum = FockVector.basis(Multipartition.empty(1))
        assert fock_K(0, vacuum, weight) == vacuum.scale(q)
        assert fock_K(1, vacuum, weight) == vacuum
        assert fock_K(0, vacuum, weight, -1) == vacuum.scale(q.bar())

    def test_residues_reduced_mod_e(self, weight):
        assert fock_F(3, M("1"), weight) == fock_F(1, M("1"), weight)

    def test_divided_power(self, weight):
        assert fock_divided_power("F", 1, 2, M("1"), weight) == M("2,1")
        assert fock_divided_power("E", 1, 1, M("2"), weight) == fock_E(1, M("2"), weight)

    def test_divided_power_rejects_bad_input(self, weight):
        with pytest.raises(DomainError):
            fock_divided_power("X", 0, 1, M("1"), weight)
        with pytest.raises(DomainError):
            fock_divided_power("F", 0, 0, M("1"), weight)

    def test_divided_power_is_linear(self, weight):
        # F_1 F_1 M[1] = (q + q^-1) M[2,1]
        v = M("1").scale(1 + q)
        assert fock_divided_power("F", 1, 2, v, weight) == M("2,1").scale(1 + q)
        assert fock_divided_power("F", 1, 2, M("2"), weight) == FockVector()


class TestWeightSpaces:
    def test_dimensions(self, weight):
        assert weight_space_dimension(2, weight) == {"a0 + a1": 2}
        assert weight_space_dimension(0, weight) == {"0": 1}

    def test_relevant_residues(self):
        assert relevant_residues(3, DominantWeight((0,), 3)) == [0, 1, 2]
        assert relevant_residues(2, DominantWeight((0, 2), 0)) == list(range(-3, 6))


class TestQuantumGroupRelations:
    @pytest.mark.parametrize("e", [2, 3, 4])
    def test_level_one(self, e):
        assert verify_uqg_relations(4, DominantWeight((0,), e)) == []

    def test_level_two(self):
        assert verify_uqg_relations(3, DominantWeight((0, 1), 3)) == []

    def test_e_zero_window(self):
        assert verify_uqg_relations(3, DominantWeight((0,), 0)) == []
        assert verify_uqg_relations(2, DominantWeight((1, 0), 0)) == []

    def test_broken_action_is_reported(self, monkeypatch, weight):
        monkeypatch.setattr(fock, "d_below", lambda mu, node, weight: 0)
        violations = verify_uqg_relations(2, weight)
        assert any(violation.relation == "EF-FE" for violation in violations)

    def test_negative_dmax(self, weight):
        with pytest.raises(DomainError):
            verify_uqg_relations(-1, weight)
