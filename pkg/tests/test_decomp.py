"""Tests for graded decomposition matrices and irreducible characters."""

import pytest

from grkappa.core.cartan import DominantWeight, RootElement
from grkappa.core.decomp import (
    DecompositionMatrix,
    available_methods,
    check_method,
    column_consistency,
    compare_matrices,
    decomposition_matrix,
    decomposition_matrix_all,
    decomposition_matrix_llt,
    irreducible_qcharacters,
    j_sequence,
    m_mult,
    r_lambda,
    solve_basic_task,
)
from grkappa.core.errors import DomainError, InconsistentInputError
from grkappa.core.laurent import ONE, ZERO, LaurentPoly
from grkappa.core.multipartition import (
    Multipartition,
    blocks,
    multipartitions_with_content,
    parse_multipartition,
)
from grkappa.core.tableaux import QCharacter, specht_qcharacter

q = LaurentPoly.monomial(1)
two = q + q.bar()


def partition(*parts: int) -> Multipartition:
    return Multipartition.from_partition(parts)


def alpha_of(**coeffs: int) -> RootElement:
    return RootElement.from_mapping({int(k[1:]): v for k, v in coeffs.items()})


@pytest.fixture
def e2():
    return DominantWeight((0,), 2)


@pytest.fixture
def e3():
    return DominantWeight((0,), 3)


class TestBasicTask:
    def test_unit_r(self):
        assert solve_basic_task(2 * q + 1, ONE) == (2 * q, ONE)

    def test_quantum_two(self):
        assert solve_basic_task(q * q + 1, two) == (q, ZERO)
        assert solve_basic_task(two, two) == (ZERO, two)
        assert solve_basic_task(q**3 + 2 * q + q.bar(), two) == (q * q, two)

    def test_inconsistent_input(self):
        with pytest.raises(InconsistentInputError):
            solve_basic_task(q - 1, ONE)
        with pytest.raises(InconsistentInputError):
            solve_basic_task(3 * q, two)

    def test_r_must_be_bar_invariant(self):
        with pytest.raises(DomainError):
            solve_basic_task(q, q)
        with pytest.raises(DomainError):
            solve_basic_task(q, ZERO)


class TestLevelOneSequences:
    def test_j_sequence(self, e2):
        assert j_sequence(Multipartition.empty(1), e2) == ()
        assert j_sequence(partition(1, 1), e2) == (0, 1)
        assert j_sequence(partition(2, 1), e2) == (0, 1, 1)
        assert j_sequence(partition(2, 1, 1), e2) == (0, 1, 1, 0)

    def test_j_sequence_needs_restricted(self, e2):
        with pytest.raises(DomainError):
            j_sequence(partition(2), e2)

    def test_r_lambda(self, e2):
        assert r_lambda(partition(1, 1), e2) == ONE
        assert r_lambda(partition(2, 1), e2) == two

    def test_m_mult(self, e2):
        ch = specht_qcharacter(partition(2, 1), e2)
        assert m_mult(ch, partition(2, 1), e2) == r_lambda(partition(2, 1), e2)
        with pytest.raises(DomainError):
            m_mult(ch, partition(1, 1), e2)

    def test_level_two_rejected(self):
        weight = DominantWeight((0, 1), 3)
        with pytest.raises(DomainError):
            j_sequence(partition(1), weight)
        with pytest.raises(DomainError):
            decomposition_matrix_llt(alpha_of(a0=1), weight)


class TestGoldenMatrices:
    def test_e_two_degree_two(self, e2):
        for method in available_methods(e2):
            matrix = decomposition_matrix(alpha_of(a0=1, a1=1), e2, method)
            assert matrix.rows == [partition(2), partition(1, 1)]
            assert matrix.cols == [partition(1, 1)]
            assert matrix.entry(partition(2), partition(1, 1)) == q
            assert matrix.entry(partition(1, 1), partition(1, 1)) == ONE
            assert matrix.method == method

    def test_e_two_hook_block(self, e2):
        matrix = decomposition_matrix(alpha_of(a0=2, a1=1), e2, "llt")
        assert matrix.cols == [partition(1, 1, 1)]
        assert matrix.entry(partition(3), partition(1, 1, 1)) == q

    def test_e_three_degree_three(self, e3):
        matrix = decomposition_matrix_all(alpha_of(a0=1, a1=1, a2=1), e3)
        assert matrix.method == "all"
        assert matrix.rows == [partition(3), partition(2, 1), partition(1, 1, 1)]
        assert matrix.cols == [partition(2, 1), partition(1, 1, 1)]
        assert matrix.entry(partition(3), partition(2, 1)) == q
        assert matrix.entry(partition(2, 1), partition(1, 1, 1)) == q
        assert matrix.entry(partition(3), partition(1, 1, 1)) == ZERO
        assert matrix.specialize() == [[1, 0], [1, 1], [0, 1]]

    def test_unknown_method(self, e2):
        with pytest.raises(DomainError):
            decomposition_matrix(alpha_of(a0=1), e2, "guess")


class TestAgreement:
    @pytest.mark.parametrize("e", [2, 3])
    @pytest.mark.parametrize("d", range(1, 9))
    def test_three_routes_agree_at_level_one(self, e, d):
        weight = DominantWeight((0,), e)
        for alpha, _ in blocks(d, weight):
            llt = decomposition_matrix(alpha, weight, "llt")
            bar = decomposition_matrix(alpha, weight, "bar")
            extremal = decomposition_matrix(alpha, weight, "extremal")
            assert compare_matrices(llt, bar) == []
            assert compare_matrices(bar, extremal) == []
            assert bar.validate() == []

    @pytest.mark.parametrize("kappa,e", [((0, 1), 3), ((0, 0), 2), ((1, 0), 2), ((0, 0), 3)])
    @pytest.mark.parametrize("d", range(1, 6))
    def test_bar_and_extremal_agree_at_level_two(self, kappa, e, d):
        weight = DominantWeight(kappa, e)
        for alpha, _ in blocks(d, weight):
            bar = decomposition_matrix(alpha, weight, "bar")
            extremal = decomposition_matrix(alpha, weight, "extremal")
            assert compare_matrices(bar, extremal) == []
            assert bar.validate() == []

    @pytest.mark.parametrize(
        "kappa,e,coeffs,mu",
        [
            ((0,), 3, {0: 3, 1: 2, 2: 2}, "3,2,1,1"),
            ((0,), 2, {0: 4, 1: 4}, "3,2,2,1"),
            ((0, 1), 3, {0: 1, 1: 2, 2: 1}, "1,1,1|1"),
            ((0, 0), 2, {0: 2, 1: 2}, "1|2,1"),
        ],
    )
    def test_extremal_route_when_every_label_is_the_top(self, kappa, e, coeffs, mu):
        # every extremal sequence of the residual of S(mu) labels D(mu) itself
        weight = DominantWeight(kappa, e)
        alpha = RootElement.from_mapping(coeffs)
        row = parse_multipartition(mu)
        assert row in multipartitions_with_content(alpha, weight)
        extremal = decomposition_matrix(alpha, weight, "extremal")
        bar = decomposition_matrix(alpha, weight, "bar")
        assert compare_matrices(bar, extremal) == []
        assert any(extremal.entry(row, nu) for nu in extremal.cols if nu != row)

    @pytest.mark.parametrize("kappa,e", [((0,), 3), ((0, 1), 2)])
    @pytest.mark.parametrize("d", range(1, 6))
    def test_irreducible_dimensions_are_consistent(self, kappa, e, d):
        weight = DominantWeight(kappa, e)
        for alpha, _ in blocks(d, weight):
            matrix = decomposition_matrix(alpha, weight)
            irreducible = irreducible_qcharacters(alpha, weight, matrix)
            assert column_consistency(matrix, irreducible) == []
            for ch in irreducible.values():
                assert ch.is_bar_invariant()
                assert ch.is_nonnegative()


class TestCharacteristicZeroQuantum:
    def test_e_zero_matrices_are_identity(self):
        weight = DominantWeight((0,), 0)
        for d in range(1, 5):
            for alpha, members in blocks(d, weight):
                matrix = decomposition_matrix(alpha, weight)
                assert matrix.cols == members
                assert set(matrix.entries) == {(mu, mu) for mu in members}
                irreducible = irreducible_qcharacters(alpha, weight)
                for mu in members:
                    assert irreducible[mu] == specht_qcharacter(mu, weight)


class TestIrreducibleCharacters:
    def test_e_two_degree_two(self, e2):
        found = irreducible_qcharacters(alpha_of(a0=1, a1=1), e2)
        assert found == {partition(1, 1): QCharacter({(0, 1): ONE})}


class TestMatrixChecks:
    def test_validate_reports_each_kind(self, e2):
        mu, nu = partition(2), partition(1, 1)
        matrix = DecompositionMatrix(
            alpha_of(a0=1, a1=1),
            e2,
            rows=[mu, nu],
            cols=[mu, nu],
            entries={(mu, mu): ONE, (nu, mu): q, (mu, nu): q.bar()},
        )
        relations = {violation.relation for violation in matrix.validate()}
        assert relations == {"diagonal", "triangular", "positivity"}

    def test_zero_entries_not_stored(self, e2):
        matrix = DecompositionMatrix(
            alpha_of(a0=1), e2, [partition(1)], [partition(1)], {(partition(1), partition(1)): ZERO}
        )
        assert matrix.entries == {}

    def test_compare_matrices(self, e2):
        alpha = alpha_of(a0=1, a1=1)
        bar = decomposition_matrix(alpha, e2, "bar")
        changed = DecompositionMatrix(
            alpha, e2, bar.rows, bar.cols, {**bar.entries, (partition(2), partition(1, 1)): q * q}, "edited"
        )
        assert compare_matrices(bar, changed) == ["d[2,1,1]: bar=q, edited=q^2"]
        other = decomposition_matrix(alpha_of(a0=1), e2, "bar")
        assert len(compare_matrices(bar, other)) == 1
        assert not bar.same_entries(changed)

    def test_available_methods(self):
        assert available_methods(DominantWeight((0,), 2)) == ["llt", "bar", "extremal"]
        assert available_methods(DominantWeight((0,), 0)) == ["bar", "extremal"]
        assert available_methods(DominantWeight((0, 1), 3)) == ["bar", "extremal"]

    def test_check_method(self):
        level_two = DominantWeight((0, 1), 3)
        for method in ("bar", "extremal", "all"):
            check_method(method, level_two)
        with pytest.raises(DomainError, match="level one"):
            check_method("llt", level_two)
        with pytest.raises(DomainError, match="Unknown method"):
            check_method("guess", level_two)
