"""Quiver, Cartan matrix, root lattice and dominant weights.

Residues are plain integers. For e > 0 they are taken mod e (canonical
representatives 0..e-1); for e = 0 they are unbounded and the quiver is the
infinite line.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum

from .errors import DomainError


def validate_e(e: int) -> int:
    if e < 0 or e == 1:
        raise DomainError(f"Quantum characteristic must be 0 or at least 2, got {e}")
    return e


def reduce_residue(i: int, e: int) -> int:
    return i % e if e > 0 else i


class QuiverRelation(str, Enum):
    """How two residues are joined in the quiver."""

    EQUAL = "equal"
    NONE = "none"
    RIGHT = "right"  # i -> j
    LEFT = "left"  # i <- j
    DOUBLE = "double"  # i <=> j, only for e = 2


def quiver_relation(i: int, j: int, e: int) -> QuiverRelation:
    i, j = reduce_residue(i, e), reduce_residue(j, e)
    if i == j:
        return QuiverRelation.EQUAL
    if e == 2:
        return QuiverRelation.DOUBLE
    if reduce_residue(i + 1, e) == j:
        return QuiverRelation.RIGHT
    if reduce_residue(j + 1, e) == i:
        return QuiverRelation.LEFT
    return QuiverRelation.NONE


def cartan_entry(i: int, j: int, e: int) -> int:
    relation = quiver_relation(i, j, e)
    if relation is QuiverRelation.EQUAL:
        return 2
    if relation is QuiverRelation.DOUBLE:
        return -2
    if relation is QuiverRelation.NONE:
        return 0
    return -1


@dataclass(frozen=True)
class RootElement:
    """An element sum c_i alpha_i of the positive root lattice."""

    coeffs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, coeffs: Mapping[int, int]) -> RootElement:
        for residue, value in coeffs.items():
            if value < 0:
                raise DomainError(
                    f"Root lattice coefficient of alpha_{residue} is negative: {value}"
                )
        return cls(tuple(sorted((i, c) for i, c in coeffs.items() if c)))

    @classmethod
    def from_residues(cls, residues: Iterable[int]) -> RootElement:
        return cls.from_mapping(Counter(residues))

    @classmethod
    def simple(cls, i: int) -> RootElement:
        return cls(((i, 1),))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.as_dict().get(i, 0)

    def __add__(self, other: RootElement) -> RootElement:
        total = Counter(self.as_dict())
        total.update(other.as_dict())
        return RootElement.from_mapping(total)

    def __sub__(self, other: RootElement) -> RootElement:
        total = self.as_dict()
        for i, c in other.coeffs:
            total[i] = total.get(i, 0) - c
        return RootElement.from_mapping(total)

    def residues(self) -> list[int]:
        return [i for i, _ in self.coeffs]

    def key(self) -> str:
        """Filesystem-safe identifier, e.g. ``0x3_1x4_2x3``."""
        if not self.coeffs:
            return "empty"
        return "_".join(f"{i}x{c}" for i, c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"a{i}" if c == 1 else f"{c}*a{i}" for i, c in self.coeffs
        )


def sym_form(a: RootElement, b: RootElement, e: int) -> int:
    return sum(
        x * y * cartan_entry(i, j, e) for i, x in a.coeffs for j, y in b.coeffs
    )


def height(a: RootElement) -> int:
    return sum(c for _, c in a.coeffs)


@dataclass(frozen=True)
class DominantWeight:
    """Lambda = Lambda_{k_1} + ... + Lambda_{k_l} together with its e.

    ``kappa`` is stored reduced mod e, so ``DominantWeight((0, 4), 3)`` and
    ``DominantWeight((0, 1), 3)`` compare equal.
    """

    kappa: tuple[int, ...]
    e: int
    multiplicities: dict[int, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        validate_e(self.e)
        if not self.kappa:
            raise DomainError("kappa must contain at least one residue")
        reduced = tuple(reduce_residue(k, self.e) for k in self.kappa)
        object.__setattr__(self, "kappa", reduced)
        object.__setattr__(self, "multiplicities", dict(Counter(reduced)))

    @property
    def level(self) -> int:
        return len(self.kappa)

    def reduce(self, i: int) -> int:
        return reduce_residue(i, self.e)

    def key(self) -> str:
        return "_".join(str(k) for k in self.kappa)

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.kappa)


def weight_pairing(weight: DominantWeight, a: RootElement) -> int:
    """(Lambda, alpha) = sum over residues of mult(Lambda_i) * coeff(alpha_i)."""
    return sum(weight.multiplicities.get(i, 0) * c for i, c in a.coeffs)


def defect(weight: DominantWeight, a: RootElement) -> int:
    """def(alpha) = (Lambda, alpha) - (alpha, alpha) / 2."""
    return weight_pairing(weight, a) - sym_form(a, a, weight.e) // 2


def weight_coordinate(weight: DominantWeight, a: RootElement, i: int) -> int:
    """(Lambda - alpha, alpha_i)."""
    i = weight.reduce(i)
    return weight.multiplicities.get(i, 0) - sym_form(a, RootElement.simple(i), weight.e)
