"""Explicit graded representations and a checker for the KLR presentation.

Matrices act on column vectors; column b of a matrix is the image of the
basis vector b. Every relation is checked by comparing both sides column by
column, so relations carrying an idempotent e(i) only look at the columns
of basis vectors whose residue sequence is i.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field

from sympy import Matrix, eye, zeros

from .cartan import DominantWeight, QuiverRelation, cartan_entry, quiver_relation
from .errors import DomainError
from .multipartition import Multipartition
from .tableaux import ResidueSequence, standard_tableaux, tableau_degree
from .verification import Violation

logger = logging.getLogger(__name__)


@dataclass
class KLRRep:
    """A finite-dimensional graded module given by generator matrices."""

    d: int
    labels: list[str]
    sequences: list[ResidueSequence]
    degrees: list[int]
    idempotents: dict[ResidueSequence, Matrix]
    y: list[Matrix]
    psi: list[Matrix]
    shape: Multipartition | None = field(default=None, compare=False)

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def idempotent(self, seq: ResidueSequence) -> Matrix:
        return self.idempotents.get(seq, zeros(self.dimension, self.dimension))

    def matrices(self) -> dict[str, Matrix]:
        named: dict[str, Matrix] = {}
        for seq, matrix in sorted(self.idempotents.items()):
            named["e(" + ",".join(str(x) for x in seq) + ")"] = matrix
        for r, matrix in enumerate(self.y, start=1):
            named[f"y{r}"] = matrix
        for r, matrix in enumerate(self.psi, start=1):
            named[f"psi{r}"] = matrix
        return named


def sparse_entries(matrix: Matrix) -> list[tuple[int, int, str]]:
    """Nonzero entries as (row, col, value) with 0-based indices."""
    return [
        (a, b, str(matrix[a, b]))
        for a in range(matrix.rows)
        for b in range(matrix.cols)
        if matrix[a, b] != 0
    ]


def projections(sequences: list[ResidueSequence]) -> dict[ResidueSequence, Matrix]:
    n = len(sequences)
    result: dict[ResidueSequence, Matrix] = {}
    for b, seq in enumerate(sequences):
        result.setdefault(seq, zeros(n, n))[b, b] = 1
    return result


def build_seminormal(mu: Multipartition, weight: DominantWeight) -> KLRRep:
    """The irreducible graded module with basis v_T, T standard (e = 0, level 1)."""
    if weight.e != 0 or weight.level != 1 or mu.level != 1:
        raise DomainError("Seminormal representations need e = 0 and level 1")
    tableaux = list(standard_tableaux(mu))
    index = {tableau.positions: b for b, tableau in enumerate(tableaux)}
    n, d = len(tableaux), mu.size
    psi = []
    for r in range(1, d):
        matrix = zeros(n, n)
        for b, tableau in enumerate(tableaux):
            swapped = tableau.swap(r)
            if swapped.is_standard():
                matrix[index[swapped.positions], b] = 1
        psi.append(matrix)
    sequences = [tableau.residue_sequence(weight) for tableau in tableaux]
    logger.debug(f"Built seminormal representation of {mu} with dimension {n}")
    return KLRRep(
        d=d,
        labels=[str(tableau) for tableau in tableaux],
        sequences=sequences,
        degrees=[tableau_degree(tableau, weight) for tableau in tableaux],
        idempotents=projections(sequences),
        y=[zeros(n, n) for _ in range(d)],
        psi=psi,
        shape=mu,
    )


def _swap(seq: ResidueSequence, r: int) -> ResidueSequence:
    values = list(seq)
    values[r - 1], values[r] = values[r], values[r - 1]
    return tuple(values)


class _Checker:
    def __init__(self, rep: KLRRep, weight: DominantWeight):
        self.rep = rep
        self.weight = weight
        self.n = rep.dimension
        self.identity = eye(self.n)
        self.zero = zeros(self.n, self.n)
        self.violations: list[Violation] = []

    def same(self, relation: str, location: str, lhs: Matrix, rhs: Matrix) -> None:
        if lhs != rhs:
            self.violations.append(Violation(relation, location, f"{lhs.tolist()} != {rhs.tolist()}"))

    def columns(
        self,
        relation: str,
        r: int,
        lhs: Matrix,
        rhs_for: Callable[[ResidueSequence], Matrix],
    ) -> None:
        """Compare column b of lhs with column b of rhs_for(i^b) for every b."""
        for b, seq in enumerate(self.rep.sequences):
            rhs = rhs_for(seq)
            if lhs[:, b] != rhs[:, b]:
                self.violations.append(
                    Violation(
                        relation,
                        f"r={r}, basis {self.rep.labels[b]}, i={seq}",
                        f"{lhs[:, b].T.tolist()} != {rhs[:, b].T.tolist()}",
                    )
                )

    def idempotent_relations(self) -> None:
        rep = self.rep
        total = self.zero
        for seq, projector in rep.idempotents.items():
            total = total + projector
            for other, other_projector in rep.idempotents.items():
                expected = projector if seq == other else self.zero
                self.same("R0", f"i={seq}, j={other}", projector * other_projector, expected)
        self.same("R1", "sum of e(i)", total, self.identity)
        for r, y in enumerate(rep.y, start=1):
            for seq, projector in rep.idempotents.items():
                self.same("y-e", f"r={r}, i={seq}", y * projector, projector * y)
        for r, psi in enumerate(rep.psi, start=1):
            targets = set(rep.idempotents) | {_swap(seq, r) for seq in rep.idempotents}
            for seq in sorted(targets):
                self.same(
                    "R2PsiE",
                    f"r={r}, i={seq}",
                    psi * rep.idempotent(seq),
                    rep.idempotent(_swap(seq, r)) * psi,
                )

    def commutation_relations(self) -> None:
        rep = self.rep
        for r, y_r in enumerate(rep.y, start=1):
            for s, y_s in enumerate(rep.y, start=1):
                if r < s:
                    self.same("R3Y", f"r={r}, s={s}", y_r * y_s, y_s * y_r)
        for r, psi in enumerate(rep.psi, start=1):
            for s, y_s in enumerate(rep.y, start=1):
                if s not in (r, r + 1):
                    self.same("R3YPsi", f"r={r}, s={s}", psi * y_s, y_s * psi)
            for s, psi_s in enumerate(rep.psi, start=1):
                if s > r + 1:
                    self.same("R3Psi", f"r={r}, s={s}", psi * psi_s, psi_s * psi)

    def mixed_relations(self) -> None:
        rep = self.rep
        for r, psi in enumerate(rep.psi, start=1):
            y_r, y_next = rep.y[r - 1], rep.y[r]

            def delta(seq: ResidueSequence, base: Matrix, r: int = r) -> Matrix:
                return base + self.identity if seq[r - 1] == seq[r] else base

            after = y_r * psi
            self.columns("R6", r, psi * y_next, lambda seq: delta(seq, after))
            before = psi * y_r
            self.columns("R5", r, y_next * psi, lambda seq: delta(seq, before))

    def quadratic_relations(self) -> None:
        rep = self.rep
        e = self.weight.e
        for r, psi in enumerate(rep.psi, start=1):
            y_r, y_next = rep.y[r - 1], rep.y[r]
            cases = {
                QuiverRelation.EQUAL: self.zero,
                QuiverRelation.NONE: self.identity,
                QuiverRelation.RIGHT: y_next - y_r,
                QuiverRelation.LEFT: y_r - y_next,
                QuiverRelation.DOUBLE: (y_next - y_r) * (y_r - y_next),
            }
            self.columns(
                "R4",
                r,
                psi * psi,
                lambda seq, r=r, cases=cases: cases[quiver_relation(seq[r - 1], seq[r], e)],
            )

    def braid_relations(self) -> None:
        rep = self.rep
        e = self.weight.e
        for r in range(1, len(rep.psi)):
            psi_r, psi_next = rep.psi[r - 1], rep.psi[r]
            y_r, y_mid, y_last = rep.y[r - 1], rep.y[r], rep.y[r + 1]
            braid = psi_next * psi_r * psi_next
            cases = {
                QuiverRelation.RIGHT: braid + self.identity,
                QuiverRelation.LEFT: braid - self.identity,
                QuiverRelation.DOUBLE: braid - 2 * y_mid + y_r + y_last,
            }

            def expected(
                seq: ResidueSequence,
                r: int = r,
                braid: Matrix = braid,
                cases: dict[QuiverRelation, Matrix] = cases,
            ) -> Matrix:
                if seq[r + 1] != seq[r - 1]:
                    return braid
                return cases.get(quiver_relation(seq[r - 1], seq[r], e), braid)

            self.columns("R7", r, psi_r * psi_next * psi_r, expected)

    def cyclotomic_relation(self) -> None:
        rep = self.rep
        for b, seq in enumerate(rep.sequences):
            if not seq:
                continue
            power = self.weight.multiplicities.get(self.weight.reduce(seq[0]), 0)
            image = (rep.y[0] ** power)[:, b]
            if any(value != 0 for value in image):
                self.violations.append(
                    Violation(
                        "cyclotomic",
                        f"basis {rep.labels[b]}, i={seq}",
                        f"y1^{power} e(i) is nonzero",
                    )
                )

    def grading(self) -> None:
        rep = self.rep
        degrees = rep.degrees
        for r, y in enumerate(rep.y, start=1):
            for a, b, _ in sparse_entries(y):
                if degrees[a] - degrees[b] != 2:
                    self.violations.append(
                        Violation("degree", f"y{r}[{a},{b}]", "y must raise degree by 2")
                    )
        for r, psi in enumerate(rep.psi, start=1):
            for a, b, _ in sparse_entries(psi):
                seq = rep.sequences[b]
                shift = -cartan_entry(seq[r - 1], seq[r], self.weight.e)
                if degrees[a] - degrees[b] != shift:
                    self.violations.append(
                        Violation(
                            "degree",
                            f"psi{r}[{a},{b}]",
                            f"expected shift {shift}, got {degrees[a] - degrees[b]}",
                        )
                    )


def verify_klr_relations(rep: KLRRep, weight: DominantWeight) -> list[Violation]:
    """Evaluate every defining relation of the cyclotomic KLR algebra on rep."""
    if len(rep.y) != rep.d or len(rep.psi) != max(rep.d - 1, 0):
        raise DomainError(f"Representation of rank {rep.d} has the wrong number of generators")
    checker = _Checker(rep, weight)
    checker.idempotent_relations()
    checker.commutation_relations()
    checker.mixed_relations()
    checker.quadratic_relations()
    checker.braid_relations()
    checker.cyclotomic_relation()
    checker.grading()
    if checker.violations:
        logger.warning(f"{len(checker.violations)} KLR relation violations found")
    return checker.violations
