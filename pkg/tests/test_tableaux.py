"""Tests for tableaux, degrees and graded Specht characters."""

from math import factorial

import pytest

from grkappa.core.cartan import DominantWeight, RootElement
from grkappa.core.errors import DomainError
from grkappa.core.laurent import ONE, ZERO, LaurentPoly
from grkappa.core.multipartition import (
    Multipartition,
    blocks,
    enumerate_multipartitions,
    parse_multipartition,
)
from grkappa.core.tableaux import (
    QCharacter,
    Tableau,
    apply_permutation,
    block_graded_dimension,
    block_graded_dimension_total,
    block_sequences,
    branching_expansion,
    cycle_notation,
    leading_tableau,
    restrict_character,
    specht_qcharacter,
    standard_tableaux,
    standard_tableaux_with_degrees,
    tableau_degree,
    tableau_permutation,
)

q = LaurentPoly.monomial(1)


@pytest.fixture
def worked_weight():
    return DominantWeight((0, 1, 1), 3)


@pytest.fixture
def worked_tableau():
    return Tableau.from_rows([[[2, 5, 6], [3]], [], [[1, 4, 9, 10], [7, 8]]])


def partition(*parts: int) -> Multipartition:
    return Multipartition.from_partition(parts)


class TestWorkedExample:
    def test_shape_and_text(self, worked_tableau):
        assert worked_tableau.shape == parse_multipartition("3,1|0|4,2")
        assert worked_tableau.is_standard()
        assert str(worked_tableau) == "2,5,6/3|0|1,4,9,10/7,8"

    def test_leading_tableau_sequence(self, worked_weight):
        leading = leading_tableau(parse_multipartition("3,1|0|4,2"))
        assert leading.residue_sequence(worked_weight) == (0, 1, 2, 2, 1, 2, 0, 1, 0, 1)
        assert tableau_permutation(leading) == tuple(range(1, 11))

    def test_residue_sequence(self, worked_tableau, worked_weight):
        assert worked_tableau.residue_sequence(worked_weight) == (1, 0, 2, 2, 1, 2, 0, 1, 0, 1)

    def test_permutation(self, worked_tableau):
        w = tableau_permutation(worked_tableau)
        assert cycle_notation(w) == "(1 2 5)(3 6 4)(7 9)(8 10)"
        leading = leading_tableau(worked_tableau.shape)
        assert apply_permutation(w, leading) == worked_tableau

    def test_degree_matches_recursive_enumeration(self, worked_tableau, worked_weight):
        degrees = dict(standard_tableaux_with_degrees(worked_tableau.shape, worked_weight))
        assert tableau_degree(worked_tableau, worked_weight) == degrees[worked_tableau]


class TestTableau:
    def test_from_rows_rejects_gaps(self):
        with pytest.raises(DomainError):
            Tableau.from_rows([[[1, 3]]])

    def test_non_standard(self):
        tableau = Tableau.from_rows([[[2, 1]]])
        assert not tableau.is_standard()
        with pytest.raises(DomainError):
            tableau_degree(tableau, DominantWeight((0,), 2))

    def test_restrict_and_swap(self):
        tableau = Tableau.from_rows([[[1, 2], [3]]])
        assert tableau.restrict(2) == Tableau.from_rows([[[1, 2]]])
        assert tableau.swap(2) == Tableau.from_rows([[[1, 3], [2]]])
        assert not Tableau.from_rows([[[1, 2], [3]]]).swap(1).is_standard()

    @pytest.mark.parametrize("text,count", [("3,2", 5), ("2,1|1", 8), ("1|1|1", 6), ("0", 1)])
    def test_standard_tableau_counts(self, text, count):
        mu = parse_multipartition(text)
        found = list(standard_tableaux(mu))
        assert len(found) == count
        assert all(tableau.is_standard() for tableau in found)
        assert len(set(found)) == count

    def test_cycle_notation_identity(self):
        assert cycle_notation((1, 2, 3)) == "()"
        assert cycle_notation(()) == "()"


class TestSpechtCharacters:
    def test_e_two(self):
        weight = DominantWeight((0,), 2)
        assert specht_qcharacter(partition(2), weight) == QCharacter({(0, 1): q})
        assert specht_qcharacter(partition(1, 1), weight) == QCharacter({(0, 1): ONE})
        assert specht_qcharacter(partition(2, 2), weight) == QCharacter({(0, 1, 1, 0): q * q + 1})

    def test_e_three(self):
        weight = DominantWeight((0,), 3)
        assert specht_qcharacter(partition(2, 1), weight) == QCharacter(
            {(0, 1, 2): ONE, (0, 2, 1): q}
        )
        assert specht_qcharacter(partition(3), weight) == QCharacter({(0, 1, 2): q})

    def test_e_zero_degree_zero(self):
        weight = DominantWeight((0,), 0)
        ch = specht_qcharacter(partition(2, 1), weight)
        assert ch == QCharacter({(0, 1, -1): ONE, (0, -1, 1): ONE})

    def test_dimension_counts_tableaux(self, worked_weight):
        mu = parse_multipartition("2,1|0|1")
        ch = specht_qcharacter(mu, worked_weight)
        assert ch.dimension() == len(list(standard_tableaux(mu)))

    def test_empty_multipartition(self):
        ch = specht_qcharacter(Multipartition.empty(2), DominantWeight((0, 1), 3))
        assert ch == QCharacter.unit()


class TestBranching:
    @pytest.mark.parametrize(
        "kappa,e",
        [((0,), 0), ((0,), 2), ((0,), 3), ((0, 1), 0), ((0, 1), 2), ((0, 0), 3)],
    )
    def test_restriction_is_branching_sum(self, kappa, e):
        weight = DominantWeight(kappa, e)
        for d in range(1, 6):
            for mu in enumerate_multipartitions(d, weight.level):
                restricted = restrict_character(specht_qcharacter(mu, weight))
                assert restricted == branching_expansion(mu, weight)

    def test_restrict_length_zero(self):
        with pytest.raises(DomainError):
            restrict_character(QCharacter.unit())


class TestQCharacter:
    def test_mixed_lengths_rejected(self):
        with pytest.raises(DomainError):
            QCharacter({(0,): ONE, (0, 1): ONE})

    def test_arithmetic(self):
        a = QCharacter({(0, 1): q})
        b = QCharacter({(0, 1): q.bar(), (1, 0): ONE})
        assert (a + b).coefficient((0, 1)) == q + q.bar()
        assert (a - a) == QCharacter()
        assert a.bar() == QCharacter({(0, 1): q.bar()})
        assert a.is_bar_invariant() is False
        assert (a + b).is_bar_invariant()
        assert QCharacter({(0, 1): q + q.bar()}).is_bar_invariant()
        assert b.scale(q).graded_dimension() == ONE + q
        assert b.coefficient((2, 2)) == ZERO


class TestGradedDimensions:
    def test_symmetric_example(self):
        weight = DominantWeight((0,), 2)
        alpha = RootElement.from_mapping({0: 1, 1: 1})
        assert block_graded_dimension(alpha, weight, (0, 1), (0, 1)) == q * q + 1

    def test_mixed_sequences(self):
        weight = DominantWeight((0,), 3)
        alpha = RootElement.from_mapping({0: 1, 1: 1, 2: 1})
        assert block_graded_dimension(alpha, weight, (0, 1, 2), (0, 2, 1)) == q

    def test_content_mismatch(self):
        weight = DominantWeight((0,), 3)
        alpha = RootElement.from_mapping({0: 1, 1: 1})
        with pytest.raises(DomainError):
            block_graded_dimension(alpha, weight, (0, 2), (0, 1))

    @pytest.mark.parametrize("kappa,e", [((0,), 2), ((0,), 3), ((0, 1), 3), ((0, 0), 2)])
    def test_both_forms_agree(self, kappa, e):
        weight = DominantWeight(kappa, e)
        for d in range(1, 6):
            for alpha, _ in blocks(d, weight):
                sequences = block_sequences(alpha, weight)
                for i in sequences:
                    for j in sequences:
                        assert block_graded_dimension(
                            alpha, weight, i, j
                        ) == block_graded_dimension(alpha, weight, i, j, dual=True)

    @pytest.mark.parametrize("kappa,e", [((0,), 2), ((0, 1), 3), ((0, 2), 0)])
    def test_totals_count_basis(self, kappa, e):
        weight = DominantWeight(kappa, e)
        for d in range(6):
            total = sum(
                block_graded_dimension_total(alpha, weight).evaluate(1)
                for alpha, _ in blocks(d, weight)
            )
            assert total == weight.level**d * factorial(d)
