"""Graded decomposition numbers of Specht modules in characteristic zero.

Three independent routes compute the same matrix:

* ``llt``: the row-wise level-one algorithm built on the sequences j^lambda,
  the multiplicities r_lambda and the Basic Task;
* ``bar``: for each Specht character, the unique corrections by lower
  irreducible characters that make it bar-invariant, found by exact linear
  algebra;
* ``extremal``: peeling irreducible constituents off Specht characters using
  extremal residue sequences.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import lru_cache

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .cartan import DominantWeight, RootElement
from .crystal import extremal_multiplicity, is_restricted, iter_extremal_sequences
from .errors import (
    DomainError,
    InconsistentInputError,
    VerificationFailure,
)
from .laurent import ONE, ZERO, LaurentPoly, divide_exactly, quantum_factorial
from .multipartition import (
    Multipartition,
    Node,
    dominates,
    is_restricted_closed_form,
    multipartitions_with_content,
    residue,
    strictly_dominates,
)
from .tableaux import (
    QCharacter,
    ResidueSequence,
    specht_qcharacter,
    standard_tableaux,
)
from .verification import Violation

logger = logging.getLogger(__name__)

METHODS = ("llt", "bar", "extremal")
CACHED_METHOD = "bar"

Entry = tuple[Multipartition, Multipartition]


@dataclass
class DecompositionMatrix:
    """Entries d_{mu,nu}(q); rows and columns are lex-descending, zeros not stored."""

    alpha: RootElement
    weight: DominantWeight
    rows: list[Multipartition]
    cols: list[Multipartition]
    entries: dict[Entry, LaurentPoly] = field(default_factory=dict)
    method: str = ""

    def __post_init__(self) -> None:
        self.entries = {key: value for key, value in self.entries.items() if value}

    def entry(self, mu: Multipartition, nu: Multipartition) -> LaurentPoly:
        return self.entries.get((mu, nu), ZERO)

    def specialize(self) -> list[list[int]]:
        """Ungraded decomposition numbers d_{mu,nu}(1)."""
        return [[self.entry(mu, nu).evaluate(1) for nu in self.cols] for mu in self.rows]

    def same_entries(self, other: DecompositionMatrix) -> bool:
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def validate(self) -> list[Violation]:
        """Unitriangularity, d_{mu,mu} = 1 and off-diagonal entries in qZ>=0[q]."""
        problems = []
        for mu in self.rows:
            for nu in self.cols:
                value = self.entry(mu, nu)
                where = f"d[{mu},{nu}]"
                if mu == nu:
                    if value != ONE:
                        problems.append(Violation("diagonal", where, f"expected 1, got {value}"))
                elif not value:
                    continue
                elif not dominates(mu, nu):
                    problems.append(Violation("triangular", where, f"nonzero entry {value}"))
                elif not value.is_nonnegative() or value.min_exponent < 1:
                    problems.append(Violation("positivity", where, f"{value} not in qZ>=0[q]"))
        return problems


def compare_matrices(
    first: DecompositionMatrix,
    second: DecompositionMatrix,
) -> list[str]:
    """Human-readable differences between two matrices of the same block."""
    if first.rows != second.rows or first.cols != second.cols:
        return [f"{first.method} and {second.method} index different rows or columns"]
    differences = []
    for mu in first.rows:
        for nu in first.cols:
            a, b = first.entry(mu, nu), second.entry(mu, nu)
            if a != b:
                differences.append(
                    f"d[{mu},{nu}]: {first.method}={a}, {second.method}={b}"
                )
    return differences


def _specht_characters(
    rows: list[Multipartition],
    weight: DominantWeight,
) -> dict[Multipartition, QCharacter]:
    return {mu: specht_qcharacter(mu, weight) for mu in rows}


# -- level one: j^lambda, r_lambda and the Basic Task -----------------------


def _require_level_one(weight: DominantWeight) -> None:
    if weight.level != 1 or weight.e == 0:
        raise DomainError("This computation needs level one and e > 0")


def _e_restricted(lam: Multipartition, weight: DominantWeight) -> bool:
    return is_restricted_closed_form(lam, weight) is True


def _bottom_restricted_node(lam: Multipartition, weight: DominantWeight) -> Node:
    for node in sorted(lam.removable_nodes(), key=Node.order_key, reverse=True):
        if _e_restricted(lam.remove(node), weight):
            return node
    raise DomainError(f"{lam} has no removable node leaving an e-restricted partition")


@lru_cache(maxsize=None)
def j_sequence(lam: Multipartition, weight: DominantWeight) -> ResidueSequence:
    """j^lambda: its last entry is res A for the bottom removable node A with
    lambda_A e-restricted, and the rest is j^(lambda_A)."""
    _require_level_one(weight)
    if not _e_restricted(lam, weight):
        raise DomainError(f"{lam} is not {weight.e}-restricted")
    if lam.size == 0:
        return ()
    node = _bottom_restricted_node(lam, weight)
    return (*j_sequence(lam.remove(node), weight), residue(node, weight))


@lru_cache(maxsize=None)
def r_lambda(lam: Multipartition, weight: DominantWeight) -> LaurentPoly:
    """[r_1]! ... [r_t]! from repeatedly stripping bottom removable sequences."""
    _require_level_one(weight)
    if not _e_restricted(lam, weight):
        raise DomainError(f"{lam} is not {weight.e}-restricted")
    result = ONE
    current = lam
    while current.size:
        start = _bottom_restricted_node(current, weight)
        sequence = [
            node for node in current.removable_nodes()
            if node.order_key() >= start.order_key()
        ]
        result = result * quantum_factorial(len(sequence))
        parts = list(current.parts[0])
        for node in sequence:
            parts[node.row - 1] -= 1
        current = Multipartition((tuple(parts),))
    return result


def m_mult(ch: QCharacter, lam: Multipartition, weight: DominantWeight) -> LaurentPoly:
    """Coefficient of j^lambda in ch."""
    if ch and ch.length != lam.size:
        raise DomainError(f"Character of length {ch.length} does not match |{lam}| = {lam.size}")
    return ch.coefficient(j_sequence(lam, weight))


def solve_basic_task(t: LaurentPoly, r: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Split t = d * r + m with d in qZ>=0[q] and m bar-invariant and nonnegative."""
    if not r or not r.is_bar_invariant() or not r.is_nonnegative():
        raise DomainError(f"r = {r} must be nonzero, bar-invariant and nonnegative")
    top = r.max_exponent
    lead = r[top]
    d, m, total = ZERO, ZERO, t
    while total:
        if not total.is_nonnegative():
            raise InconsistentInputError(f"Negative coefficient in Basic Task input {t}")
        high, low = total.max_exponent, -total.min_exponent
        if high <= 0:
            m, total = m + total, ZERO
        elif low < high:
            coefficient = total[high]
            if coefficient % lead or high - top < 1:
                raise InconsistentInputError(f"Cannot split {t} against r = {r}")
            term = LaurentPoly.monomial(high - top, coefficient // lead)
            d, total = d + term, total - term * r
        elif low == high:
            piece = LaurentPoly({-low: total[-low], low: total[-low]})
            m, total = m + piece, total - piece
        else:
            raise InconsistentInputError(f"Cannot split {t} against r = {r}")
    if not m.is_bar_invariant() or not m.is_nonnegative():
        raise InconsistentInputError(f"Remainder {m} of {t} is not bar-invariant")
    return d, m


def decomposition_matrix_llt(
    alpha: RootElement,
    weight: DominantWeight,
) -> DecompositionMatrix:
    _require_level_one(weight)
    rows = multipartitions_with_content(alpha, weight)
    cols = [mu for mu in rows if _e_restricted(mu, weight)]
    specht = _specht_characters(rows, weight)
    entries: dict[Entry, LaurentPoly] = {}
    for lam in cols:
        j = j_sequence(lam, weight)
        r = r_lambda(lam, weight)
        if specht[lam].coefficient(j) != r:
            raise InconsistentInputError(
                f"m_lambda(S({lam})) = {specht[lam].coefficient(j)} differs from r = {r}"
            )
        entries[(lam, lam)] = ONE
        irreducible_multiplicity = {lam: r}
        for nu in reversed(rows):
            if nu == lam:
                continue
            if not strictly_dominates(nu, lam):
                if specht[nu].coefficient(j):
                    raise InconsistentInputError(f"j^{lam} occurs in S({nu}) but {nu} does not dominate {lam}")
                continue
            t = specht[nu].coefficient(j)
            for phi, m_phi in irreducible_multiplicity.items():
                if phi != lam and strictly_dominates(nu, phi):
                    t = t - entries.get((nu, phi), ZERO) * m_phi
            if _e_restricted(nu, weight):
                d, m = solve_basic_task(t, r)
                irreducible_multiplicity[nu] = m
            else:
                d = divide_exactly(t, r)
            entries[(nu, lam)] = d
    logger.debug(f"LLT route finished block {alpha}")
    return DecompositionMatrix(alpha, weight, rows, cols, entries, "llt")


# -- any level: bar-invariance -------------------------------------------------


def _restricted_rows(
    rows: list[Multipartition],
    weight: DominantWeight,
) -> list[Multipartition]:
    return [mu for mu in rows if is_restricted(mu, weight)]


def _bar_corrections(
    ch: QCharacter, lower: list[QCharacter]
) -> list[LaurentPoly]:
    """The unique p_a in qZ[q] making ch - sum p_a * lower[a] bar-invariant."""
    if not lower or not ch:
        return [ZERO] * len(lower)
    top = max(poly.max_exponent for _, poly in ch.items())
    if top <= 0:
        return [ZERO] * len(lower)
    sequences = sorted(set(ch.sequences()).union(*(set(x.sequences()) for x in lower)))
    reach = max(
        max(abs(k) for _, poly in x.items() for k in poly.exponents())
        for x in [ch, *lower] if x
    )
    unknowns = [(a, k) for a in range(len(lower)) for k in range(1, top + 1)]
    rows: set[tuple[int, ...]] = set()
    for seq in sequences:
        target = ch.coefficient(seq)
        for n in range(1, top + reach + 1):
            coefficients = tuple(
                lower[a].coefficient(seq)[n - k] - lower[a].coefficient(seq)[-n - k]
                for a, k in unknowns
            )
            rhs = target[n] - target[-n]
            if any(coefficients):
                rows.add((*coefficients, rhs))
            elif rhs:
                raise InconsistentInputError(
                    f"Coefficient of q^{n} at {seq} cannot be made bar-invariant"
                )
    width = len(unknowns)
    if not rows:
        return [ZERO] * len(lower)
    ordered = sorted(rows)
    system = DomainMatrix(
        [[QQ(value) for value in row] for row in ordered], (len(ordered), width + 1), QQ
    )
    reduced, pivots = system.rref()
    if width in pivots:
        raise InconsistentInputError("Bar-invariance system has no solution")
    if len(pivots) < width:
        raise InconsistentInputError("Bar-invariance system has more than one solution")
    solved = reduced.to_Matrix()
    corrections: list[dict[int, int]] = [{} for _ in lower]
    for position, column in enumerate(pivots):
        value = solved[position, width]
        if not value.is_integer or value < 0:
            raise InconsistentInputError(f"Bar-invariance solution {value} is not a nonnegative integer")
        a, k = unknowns[column]
        corrections[a][k] = int(value)
    return [LaurentPoly(c) for c in corrections]


def decomposition_matrix_bar(
    alpha: RootElement,
    weight: DominantWeight,
) -> DecompositionMatrix:
    rows = multipartitions_with_content(alpha, weight)
    cols = _restricted_rows(rows, weight)
    restricted = set(cols)
    irreducible: dict[Multipartition, QCharacter] = {}
    entries: dict[Entry, LaurentPoly] = {}
    for mu in reversed(rows):
        ch = specht_qcharacter(mu, weight)
        lower = [nu for nu in reversed(cols) if nu in irreducible and strictly_dominates(mu, nu)]
        corrections = _bar_corrections(ch, [irreducible[nu] for nu in lower])
        remainder = ch
        for nu, p in zip(lower, corrections):
            if p:
                entries[(mu, nu)] = p
                remainder = remainder - irreducible[nu].scale(p)
        if mu in restricted:
            if not remainder or not remainder.is_bar_invariant() or not remainder.is_nonnegative():
                raise InconsistentInputError(f"Remainder for {mu} is not an irreducible character")
            irreducible[mu] = remainder
            entries[(mu, mu)] = ONE
        elif remainder:
            raise InconsistentInputError(f"Specht character of {mu} leaves remainder {remainder!r}")
    logger.debug(f"Bar route finished block {alpha}")
    return DecompositionMatrix(alpha, weight, rows, cols, entries, "bar")


# -- any level: extremal peeling ------------------------------------------------


def _peel_known(
    residual: QCharacter,
    known: dict[Multipartition, QCharacter],
    weight: DominantWeight,
) -> tuple[Multipartition, LaurentPoly] | None:
    for extremal in iter_extremal_sequences(residual, weight):
        if extremal.mu in known:
            return extremal_multiplicity(residual, weight, extremal)
    return None


def _accept_top(
    mu: Multipartition, residual: QCharacter, weight: DominantWeight
) -> QCharacter:
    """Check that a bar-invariant residual of S(mu) is D(mu) with multiplicity one."""
    label, multiplicity = extremal_multiplicity(residual, weight)
    if label != mu or multiplicity != ONE:
        raise InconsistentInputError(
            f"Residual of S({mu}) is bar-invariant but labelled {label} "
            f"with multiplicity {multiplicity}"
        )
    return residual


def decomposition_matrix_extremal(
    alpha: RootElement,
    weight: DominantWeight,
) -> DecompositionMatrix:
    """Peel constituents off each Specht character by extremal sequences.

    Every extremal sequence of a residual labels a constituent and gives its
    multiplicity. Once all of them label D(mu) itself, the lower
    constituents still inside the residual are fixed by bar-invariance of
    ch D(mu), and the leftover is checked to have extremal label mu with
    multiplicity one.
    """
    rows = multipartitions_with_content(alpha, weight)
    cols = _restricted_rows(rows, weight)
    restricted = set(cols)
    irreducible: dict[Multipartition, QCharacter] = {}
    entries: dict[Entry, LaurentPoly] = {}
    for mu in reversed(rows):
        residual = specht_qcharacter(mu, weight)
        lower = [nu for nu in reversed(cols) if nu in irreducible and strictly_dominates(mu, nu)]
        known = {nu: irreducible[nu] for nu in lower}
        while residual:
            if not residual.is_nonnegative():
                raise InconsistentInputError(f"Residual of S({mu}) has a negative coefficient")
            if mu in restricted and residual.is_bar_invariant():
                # lower multiplicities lie in qZ[q], so a bar-invariant residual is D(mu)
                irreducible[mu] = _accept_top(mu, residual, weight)
                entries[(mu, mu)] = ONE
                break
            found = _peel_known(residual, known, weight)
            if found is not None:
                nu, multiplicity = found
                entries[(mu, nu)] = entries.get((mu, nu), ZERO) + multiplicity
                residual = residual - known[nu].scale(multiplicity)
                continue
            if mu not in restricted:
                raise InconsistentInputError(f"No known constituent found in the residual of S({mu})")
            corrections = _bar_corrections(residual, [known[nu] for nu in lower])
            if not any(corrections):
                raise InconsistentInputError(f"Residual of S({mu}) hides D({mu}) behind no known constituent")
            logger.debug(f"Extremal labels of S({mu}) all point at {mu}; peeling the rest by bar-invariance")
            for nu, p in zip(lower, corrections):
                if p:
                    entries[(mu, nu)] = entries.get((mu, nu), ZERO) + p
                    residual = residual - known[nu].scale(p)
        if mu in restricted and mu not in irreducible:
            raise InconsistentInputError(f"S({mu}) does not contain D({mu})")
    logger.debug(f"Extremal route finished block {alpha}")
    return DecompositionMatrix(alpha, weight, rows, cols, entries, "extremal")


_ROUTES: dict[str, Callable[[RootElement, DominantWeight], DecompositionMatrix]] = {
    "llt": decomposition_matrix_llt,
    "bar": decomposition_matrix_bar,
    "extremal": decomposition_matrix_extremal,
}


def available_methods(weight: DominantWeight) -> list[str]:
    """Routes that apply to the weight: the level-one route needs e > 0."""
    if weight.level == 1 and weight.e > 0:
        return list(METHODS)
    return ["bar", "extremal"]


def check_method(method: str, weight: DominantWeight) -> None:
    """Raise DomainError unless ``method`` names a route that applies to the weight."""
    if method == "all":
        return
    if method not in _ROUTES:
        raise DomainError(f"Unknown method '{method}', expected one of {', '.join(METHODS)}")
    if method not in available_methods(weight):
        _require_level_one(weight)


def decomposition_matrix(
    alpha: RootElement,
    weight: DominantWeight,
    method: str = "bar",
) -> DecompositionMatrix:
    check_method(method, weight)
    if method == "all":
        return decomposition_matrix_all(alpha, weight)
    return _ROUTES[method](alpha, weight)


def decomposition_matrix_all(
    alpha: RootElement,
    weight: DominantWeight,
) -> DecompositionMatrix:
    """Compute with every applicable route and insist that they agree."""
    matrices = [decomposition_matrix(alpha, weight, method) for method in available_methods(weight)]
    reference = matrices[0]
    for other in matrices[1:]:
        differences = compare_matrices(reference, other)
        if differences:
            raise VerificationFailure(
                f"Methods disagree on block {alpha}: " + "; ".join(differences)
            )
    return DecompositionMatrix(
        reference.alpha, weight, reference.rows, reference.cols, dict(reference.entries), "all"
    )


def irreducible_qcharacters(
    alpha: RootElement, weight: DominantWeight, matrix: DecompositionMatrix | None = None
) -> dict[Multipartition, QCharacter]:
    """ch_q D(nu) from the unitriangular system ch_q S(mu) = sum d_{mu,nu} ch_q D(nu)."""
    if matrix is None:
        matrix = decomposition_matrix_bar(alpha, weight)
    irreducible: dict[Multipartition, QCharacter] = {}
    for nu in reversed(matrix.cols):
        ch = specht_qcharacter(nu, weight)
        for lower, character in irreducible.items():
            coefficient = matrix.entry(nu, lower)
            if coefficient:
                ch = ch - character.scale(coefficient)
        irreducible[nu] = ch
    return {nu: irreducible[nu] for nu in matrix.cols}


def column_consistency(
    matrix: DecompositionMatrix, irreducible: dict[Multipartition, QCharacter]
) -> list[Violation]:
    """sum over nu of d_{mu,nu}(1) dim D(nu) equals the number of standard mu-tableaux."""
    problems = []
    dimensions = {nu: ch.dimension() for nu, ch in irreducible.items()}
    for mu, row in zip(matrix.rows, matrix.specialize()):
        total = sum(value * dimensions[nu] for nu, value in zip(matrix.cols, row))
        expected = sum(1 for _ in standard_tableaux(mu))
        if total != expected:
            problems.append(Violation("column-consistency", str(mu), f"{total} != {expected}"))
    return problems
