"""Standard tableaux, tableau degrees and graded q-characters."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache

from sympy.combinatorics import Permutation

from .cartan import DominantWeight, RootElement, defect
from .errors import DomainError
from .laurent import ONE, ZERO, LaurentPoly
from .multipartition import (
    Multipartition,
    Node,
    d_below,
    multipartitions_with_content,
    residue,
)

logger = logging.getLogger(__name__)

ResidueSequence = tuple[int, ...]


@dataclass(frozen=True)
class Tableau:
    """A filling of ``shape`` by 1..d; ``positions[r - 1]`` is the node holding r."""

    shape: Multipartition
    positions: tuple[Node, ...]

    def __post_init__(self) -> None:
        if len(self.positions) != self.shape.size or set(self.positions) != set(
            self.shape.nodes()
        ):
            raise DomainError(f"Positions do not fill the shape {self.shape} bijectively")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Iterable[int]]]) -> Tableau:
        """Build from entries given component by component, row by row."""
        located: dict[int, Node] = {}
        lengths = []
        for m, component in enumerate(rows, start=1):
            component_lengths = []
            for a, row in enumerate(component, start=1):
                row = list(row)
                component_lengths.append(len(row))
                for b, entry in enumerate(row, start=1):
                    located[entry] = Node(a, b, m)
            lengths.append(tuple(component_lengths))
        shape = Multipartition(tuple(lengths))
        if sorted(located) != list(range(1, len(located) + 1)):
            raise DomainError("Tableau entries must be exactly 1..d")
        return cls(shape, tuple(located[r] for r in range(1, len(located) + 1)))

    @property
    def size(self) -> int:
        return len(self.positions)

    def entry_of(self, node: Node) -> int:
        return self.positions.index(node) + 1

    def rows(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        entries = {node: r for r, node in enumerate(self.positions, start=1)}
        return tuple(
            tuple(
                tuple(entries[Node(a, b, m)] for b in range(1, length + 1))
                for a, length in enumerate(component, start=1)
            )
            for m, component in enumerate(self.shape.parts, start=1)
        )

    def is_standard(self) -> bool:
        entries = {node: r for r, node in enumerate(self.positions, start=1)}
        for node, r in entries.items():
            right = Node(node.row, node.col + 1, node.comp)
            below = Node(node.row + 1, node.col, node.comp)
            if right in entries and entries[right] <= r:
                return False
            if below in entries and entries[below] <= r:
                return False
        return True

    def residue_sequence(self, weight: DominantWeight) -> ResidueSequence:
        return tuple(residue(node, weight) for node in self.positions)

    def restrict(self, k: int) -> Tableau:
        """The subtableau holding 1..k."""
        kept = self.positions[:k]
        counts = Counter((node.comp, node.row) for node in kept)
        parts = tuple(
            tuple(
                counts[(m, a)]
                for a in range(1, len(self.shape.parts[m - 1]) + 1)
                if counts[(m, a)]
            )
            for m in range(1, self.shape.level + 1)
        )
        return Tableau(Multipartition(parts), kept)

    def swap(self, r: int) -> Tableau:
        """s_r T: exchange the entries r and r + 1."""
        positions = list(self.positions)
        positions[r - 1], positions[r] = positions[r], positions[r - 1]
        return Tableau(self.shape, tuple(positions))

    def __str__(self) -> str:
        return "|".join(
            "/".join(",".join(str(x) for x in row) for row in component) or "0"
            for component in self.rows()
        )


@lru_cache(maxsize=None)
def _standard_positions(mu: Multipartition) -> tuple[tuple[Node, ...], ...]:
    if mu.size == 0:
        return ((),)
    found = []
    for node in mu.removable_nodes():
        for prefix in _standard_positions(mu.remove(node)):
            found.append((*prefix, node))
    return tuple(found)


def standard_tableaux(mu: Multipartition) -> Iterator[Tableau]:
    for positions in _standard_positions(mu):
        yield Tableau(mu, positions)


@lru_cache(maxsize=None)
def standard_tableaux_with_degrees(
    mu: Multipartition, weight: DominantWeight
) -> tuple[tuple[Tableau, int], ...]:
    """Standard tableaux paired with their degrees, built by removing d."""
    if mu.size == 0:
        return ((Tableau(mu, ()), 0),)
    found = []
    for node in mu.removable_nodes():
        shift = d_below(mu, node, weight)
        for smaller, degree in standard_tableaux_with_degrees(mu.remove(node), weight):
            found.append((Tableau(mu, (*smaller.positions, node)), degree + shift))
    return tuple(found)


def leading_tableau(mu: Multipartition) -> Tableau:
    """T^mu: 1..d filled along the rows of each component in turn."""
    return Tableau(mu, tuple(mu.nodes()))


def residue_sequence(tableau: Tableau, weight: DominantWeight) -> ResidueSequence:
    return tableau.residue_sequence(weight)


def tableau_permutation(tableau: Tableau) -> tuple[int, ...]:
    """w_T in one-line notation, with w_T T^mu = T."""
    return tuple(tableau.entry_of(node) for node in tableau.shape.nodes())


def apply_permutation(w: tuple[int, ...], tableau: Tableau) -> Tableau:
    """w T: replace each entry r by w(r)."""
    positions: list[Node | None] = [None] * tableau.size
    for r, node in enumerate(tableau.positions, start=1):
        positions[w[r - 1] - 1] = node
    return Tableau(tableau.shape, tuple(p for p in positions if p is not None))


def cycle_notation(w: tuple[int, ...]) -> str:
    """Disjoint cycles with fixed points omitted, e.g. ``(1 2 5)(3 6 4)``."""
    if not w:
        return "()"
    cycles = Permutation([x - 1 for x in w]).cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in cycle) + ")" for cycle in cycles)


def tableau_degree(tableau: Tableau, weight: DominantWeight) -> int:
    if not tableau.is_standard():
        raise DomainError(f"Tableau {tableau} is not standard")
    degree = 0
    shape = tableau.shape
    for node in reversed(tableau.positions):
        degree += d_below(shape, node, weight)
        shape = shape.remove(node)
    return degree


class QCharacter:
    """A map from residue sequences to Laurent polynomials.

    All sequences share one length; a zero character may leave it unset.
    """

    __slots__ = ("_terms", "length")

    def __init__(
        self,
        terms: Mapping[ResidueSequence, LaurentPoly] | None = None,
        length: int | None = None,
    ):
        self._terms = {tuple(seq): poly for seq, poly in (terms or {}).items() if poly}
        lengths = {len(seq) for seq in self._terms}
        if len(lengths) > 1 or (length is not None and lengths - {length}):
            raise DomainError("All sequences of a q-character must have one length")
        self.length = length if length is not None else next(iter(lengths), None)

    @classmethod
    def unit(cls) -> QCharacter:
        """The character of the trivial module of H_0: the empty sequence."""
        return cls({(): ONE}, 0)

    def coefficient(self, seq: Iterable[int]) -> LaurentPoly:
        return self._terms.get(tuple(seq), ZERO)

    def items(self) -> list[tuple[ResidueSequence, LaurentPoly]]:
        return sorted(self._terms.items())

    def sequences(self) -> list[ResidueSequence]:
        return sorted(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QCharacter):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def _combine(self, other: QCharacter, sign: int) -> QCharacter:
        terms = dict(self._terms)
        for seq, poly in other._terms.items():
            terms[seq] = terms.get(seq, ZERO) + (poly if sign > 0 else -poly)
        length = self.length if self.length is not None else other.length
        return QCharacter(terms, length)

    def __add__(self, other: QCharacter) -> QCharacter:
        return self._combine(other, 1)

    def __sub__(self, other: QCharacter) -> QCharacter:
        return self._combine(other, -1)

    def scale(self, factor: LaurentPoly) -> QCharacter:
        return QCharacter(
            {seq: poly * factor for seq, poly in self._terms.items()}, self.length
        )

    def bar(self) -> QCharacter:
        return QCharacter(
            {seq: poly.bar() for seq, poly in self._terms.items()}, self.length
        )

    def is_bar_invariant(self) -> bool:
        return all(poly.is_bar_invariant() for poly in self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(poly.is_nonnegative() for poly in self._terms.values())

    def graded_dimension(self) -> LaurentPoly:
        total = ZERO
        for poly in self._terms.values():
            total = total + poly
        return total

    def dimension(self) -> int:
        return self.graded_dimension().evaluate(1)

    def __repr__(self) -> str:
        body = ", ".join(f"{seq}: {poly}" for seq, poly in self.items())
        return f"QCharacter({{{body}}})"


def specht_qcharacter(mu: Multipartition, weight: DominantWeight) -> QCharacter:
    """ch_q S(mu) = sum over standard T of q^deg(T) at i^T."""
    terms: dict[ResidueSequence, LaurentPoly] = {}
    for tableau, degree in standard_tableaux_with_degrees(mu, weight):
        seq = tableau.residue_sequence(weight)
        terms[seq] = terms.get(seq, ZERO) + LaurentPoly.monomial(degree)
    return QCharacter(terms, mu.size)


def restrict_character(ch: QCharacter) -> QCharacter:
    """Drop the last residue of every sequence."""
    if not ch.length:
        raise DomainError("Cannot restrict a character of length 0")
    terms: dict[ResidueSequence, LaurentPoly] = {}
    for seq, poly in ch.items():
        terms[seq[:-1]] = terms.get(seq[:-1], ZERO) + poly
    return QCharacter(terms, ch.length - 1)


def branching_expansion(mu: Multipartition, weight: DominantWeight) -> QCharacter:
    """sum over removable A of q^d_A(mu) ch_q S(mu_A)."""
    total = QCharacter(length=mu.size - 1)
    for node in mu.removable_nodes():
        shift = LaurentPoly.monomial(d_below(mu, node, weight))
        total = total + specht_qcharacter(mu.remove(node), weight).scale(shift)
    return total


def block_graded_dimension(
    alpha: RootElement,
    weight: DominantWeight,
    i: ResidueSequence,
    j: ResidueSequence,
    *,
    dual: bool = False,
) -> LaurentPoly:
    """Graded dimension of e(i) H_alpha e(j).

    With ``dual`` the exponents 2 def(alpha) - deg S - deg T are summed
    instead of deg S + deg T; both forms give the same polynomial.
    """
    for seq in (i, j):
        if RootElement.from_residues(weight.reduce(x) for x in seq) != alpha:
            raise DomainError(f"Sequence {seq} does not have content {alpha}")
    total = ZERO
    for mu in multipartitions_with_content(alpha, weight):
        ch = specht_qcharacter(mu, weight)
        total = total + ch.coefficient(i) * ch.coefficient(j)
    if dual:
        return total.bar().shift(2 * defect(weight, alpha))
    return total


def block_graded_dimension_total(
    alpha: RootElement, weight: DominantWeight
) -> LaurentPoly:
    """Sum of the graded dimensions of e(i) H_alpha e(j) over all i, j."""
    total = ZERO
    for mu in multipartitions_with_content(alpha, weight):
        graded = specht_qcharacter(mu, weight).graded_dimension()
        total = total + graded * graded
    return total


def block_sequences(
    alpha: RootElement,
    weight: DominantWeight,
) -> list[ResidueSequence]:
    """Residue sequences that occur in some Specht character of the block."""
    found: set[ResidueSequence] = set()
    for mu in multipartitions_with_content(alpha, weight):
        found.update(specht_qcharacter(mu, weight).sequences())
    return sorted(found)


def character_content(ch: QCharacter) -> set[RootElement]:
    return {RootElement.from_residues(seq) for seq in ch.sequences()}
