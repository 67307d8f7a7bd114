"""Multipartitions, nodes, residues and the degree statistics d_A, d^B, d_i."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .cartan import DominantWeight, RootElement
from .errors import DomainError

logger = logging.getLogger(__name__)


class Node(NamedTuple):
    """A box (row, col) in component ``comp``; all coordinates start at 1."""

    row: int
    col: int
    comp: int

    def order_key(self) -> tuple[int, int, int]:
        """Top-to-bottom position: by component, then row."""
        return (self.comp, self.row, self.col)

    def __str__(self) -> str:
        return f"({self.row},{self.col},{self.comp})"


@dataclass(frozen=True, order=False)
class Multipartition:
    """An ordered tuple of partitions.

    Comparison operators implement the lexicographic order (component by
    component, then part by part), which refines dominance.
    """

    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise DomainError("A multipartition needs at least one component")
        cleaned = []
        for component in self.parts:
            stripped = tuple(int(p) for p in component if p != 0)
            if any(p < 0 for p in stripped):
                raise DomainError(f"Negative part in {component}")
            if any(a < b for a, b in zip(stripped, stripped[1:])):
                raise DomainError(f"Parts must be weakly decreasing: {component}")
            cleaned.append(stripped)
        object.__setattr__(self, "parts", tuple(cleaned))

    @classmethod
    def empty(cls, level: int) -> Multipartition:
        return cls(tuple(() for _ in range(level)))

    @classmethod
    def from_partition(cls, parts: Sequence[int]) -> Multipartition:
        return cls((tuple(parts),))

    @property
    def level(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(sum(component) for component in self.parts)

    def __lt__(self, other: Multipartition) -> bool:
        return lex_less(self, other)

    def __le__(self, other: Multipartition) -> bool:
        return self == other or lex_less(self, other)

    def __gt__(self, other: Multipartition) -> bool:
        return lex_less(other, self)

    def __ge__(self, other: Multipartition) -> bool:
        return self == other or lex_less(other, self)

    def part(self, comp: int, row: int) -> int:
        """mu^(comp)_row, zero beyond the last part."""
        component = self.parts[comp - 1]
        return component[row - 1] if row <= len(component) else 0

    def nodes(self) -> Iterator[Node]:
        """All nodes, row by row in each component, components in order."""
        for m, component in enumerate(self.parts, start=1):
            for a, length in enumerate(component, start=1):
                for b in range(1, length + 1):
                    yield Node(a, b, m)

    def __contains__(self, node: object) -> bool:
        if not isinstance(node, tuple) or len(node) != 3:
            return False
        row, col, comp = node
        return 1 <= comp <= self.level and row >= 1 and 1 <= col <= self.part(comp, row)

    def removable_nodes(self) -> list[Node]:
        nodes = []
        for m, component in enumerate(self.parts, start=1):
            for a, length in enumerate(component, start=1):
                if length > self.part(m, a + 1):
                    nodes.append(Node(a, length, m))
        return nodes

    def addable_nodes(self) -> list[Node]:
        nodes = []
        for m, component in enumerate(self.parts, start=1):
            for a in range(1, len(component) + 2):
                length = self.part(m, a)
                if a == 1 or self.part(m, a - 1) > length:
                    nodes.append(Node(a, length + 1, m))
        return nodes

    def remove(self, node: Node) -> Multipartition:
        """mu_A."""
        if node not in self.removable_nodes():
            raise DomainError(f"Node {node} is not removable from {self}")
        return self._replace_part(node, node.col - 1)

    def add(self, node: Node) -> Multipartition:
        """mu^B."""
        if node not in self.addable_nodes():
            raise DomainError(f"Node {node} is not addable to {self}")
        return self._replace_part(node, node.col)

    def _replace_part(self, node: Node, length: int) -> Multipartition:
        component = list(self.parts[node.comp - 1])
        if node.row > len(component):
            component.append(length)
        else:
            component[node.row - 1] = length
        parts = list(self.parts)
        parts[node.comp - 1] = tuple(component)
        return Multipartition(tuple(parts))

    def transpose(self) -> Multipartition:
        """Conjugate multipartition: each component transposed, order reversed."""
        conjugates = []
        for component in reversed(self.parts):
            width = component[0] if component else 0
            conjugates.append(
                tuple(sum(1 for p in component if p >= c) for c in range(1, width + 1))
            )
        return Multipartition(tuple(conjugates))

    def __str__(self) -> str:
        return "|".join(
            ",".join(str(p) for p in component) if component else "0"
            for component in self.parts
        )

    def __repr__(self) -> str:
        return f"Multipartition('{self}')"


def parse_multipartition(text: str) -> Multipartition:
    """Parse ``"3,1|0|4,2"``; ``0`` or an empty string stands for an empty component."""
    components = []
    for chunk in text.strip().split("|"):
        chunk = chunk.strip()
        if chunk in ("", "0"):
            components.append(())
            continue
        try:
            parts = tuple(int(p) for p in chunk.split(","))
        except ValueError:
            raise DomainError(f"Malformed multipartition text: '{text}'") from None
        if any(p <= 0 for p in parts):
            raise DomainError(f"Malformed multipartition text: '{text}'")
        components.append(parts)
    return Multipartition(tuple(components))


def residue(node: Node, weight: DominantWeight) -> int:
    """k_m + b - a, reduced mod e when e > 0."""
    if not 1 <= node.comp <= weight.level:
        raise DomainError(
            f"Component {node.comp} out of range for level {weight.level}"
        )
    return weight.reduce(weight.kappa[node.comp - 1] + node.col - node.row)


def content(mu: Multipartition, weight: DominantWeight) -> RootElement:
    return RootElement.from_residues(residue(node, weight) for node in mu.nodes())


def boundary_nodes(mu: Multipartition) -> tuple[list[Node], list[Node]]:
    """Removable and addable nodes, each ordered top to bottom."""
    removable = sorted(mu.removable_nodes(), key=Node.order_key)
    addable = sorted(mu.addable_nodes(), key=Node.order_key)
    return removable, addable


def i_nodes(
    mu: Multipartition, i: int, weight: DominantWeight
) -> list[tuple[Node, int]]:
    """Addable (+1) and removable (-1) i-nodes of mu, top to bottom."""
    removable, addable = boundary_nodes(mu)
    i = weight.reduce(i)
    marked = [(node, -1) for node in removable if residue(node, weight) == i]
    marked += [(node, 1) for node in addable if residue(node, weight) == i]
    return sorted(marked, key=lambda item: item[0].order_key())


def d_below(mu: Multipartition, node: Node, weight: DominantWeight) -> int:
    """d_A(mu): addable minus removable i-nodes strictly below A, i = res A."""
    if node not in mu.removable_nodes():
        raise DomainError(f"Node {node} is not removable from {mu}")
    i = residue(node, weight)
    return sum(
        sign
        for other, sign in i_nodes(mu, i, weight)
        if other.order_key() > node.order_key()
    )


def d_above(mu: Multipartition, node: Node, weight: DominantWeight) -> int:
    """d^B(mu): addable minus removable i-nodes strictly above B, i = res B."""
    if node not in mu.addable_nodes():
        raise DomainError(f"Node {node} is not addable to {mu}")
    i = residue(node, weight)
    return sum(
        sign
        for other, sign in i_nodes(mu, i, weight)
        if other.order_key() < node.order_key()
    )


def d_total(mu: Multipartition, i: int, weight: DominantWeight) -> int:
    """d_i(mu): all addable minus all removable i-nodes."""
    return sum(sign for _, sign in i_nodes(mu, i, weight))


def dominates(mu: Multipartition, nu: Multipartition) -> bool:
    """True when mu dominates nu (reflexive)."""
    if mu.level != nu.level or mu.size != nu.size:
        raise DomainError(f"Cannot compare {mu} and {nu}: size or level differs")
    before_mu = before_nu = 0
    for m in range(1, mu.level + 1):
        rows = max(len(mu.parts[m - 1]), len(nu.parts[m - 1]))
        partial_mu, partial_nu = before_mu, before_nu
        for c in range(1, rows + 1):
            partial_mu += mu.part(m, c)
            partial_nu += nu.part(m, c)
            if partial_mu < partial_nu:
                return False
        before_mu += sum(mu.parts[m - 1])
        before_nu += sum(nu.parts[m - 1])
        if before_mu < before_nu:
            return False
    return True


def strictly_dominates(mu: Multipartition, nu: Multipartition) -> bool:
    return mu != nu and dominates(mu, nu)


def lex_less(mu: Multipartition, nu: Multipartition) -> bool:
    if mu.level != nu.level:
        raise DomainError(f"Cannot compare {mu} and {nu}: level differs")
    return mu.parts < nu.parts


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of n with parts at most ``largest``, lex-descending."""
    if n == 0:
        return ((),)
    top = n if largest is None else min(n, largest)
    result: list[tuple[int, ...]] = []
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            result.append((first, *rest))
    return tuple(result)


def enumerate_multipartitions(d: int, level: int) -> list[Multipartition]:
    """All l-multipartitions of d, lex-descending."""
    if d < 0 or level < 1:
        raise DomainError(f"Need d >= 0 and level >= 1, got d={d}, level={level}")

    def compositions(total: int, slots: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if slots == 1:
            for p in partitions(total):
                yield (p,)
            return
        for first_size in range(total, -1, -1):
            for first in partitions(first_size):
                for rest in compositions(total - first_size, slots - 1):
                    yield (first, *rest)

    found = [Multipartition(parts) for parts in compositions(d, level)]
    return sorted(found, key=lambda mu: mu.parts, reverse=True)


def multipartitions_with_content(
    alpha: RootElement, weight: DominantWeight
) -> list[Multipartition]:
    """The block P^kappa_alpha, lex-descending."""
    d = sum(c for _, c in alpha.coeffs)
    return [
        mu
        for mu in enumerate_multipartitions(d, weight.level)
        if content(mu, weight) == alpha
    ]


def blocks(
    d: int,
    weight: DominantWeight,
) -> list[tuple[RootElement, list[Multipartition]]]:
    """Group P^kappa_d by content; blocks ordered by their lex-largest member."""
    grouped: dict[RootElement, list[Multipartition]] = {}
    for mu in enumerate_multipartitions(d, weight.level):
        grouped.setdefault(content(mu, weight), []).append(mu)
    logger.debug(f"Found {len(grouped)} blocks of size {d} for kappa={weight}")
    return list(grouped.items())


def is_restricted_closed_form(
    mu: Multipartition,
    weight: DominantWeight,
) -> bool | None:
    """Closed-form restrictedness test, or None when no closed form applies.

    Supported: level 1 with e > 0 (e-restricted partitions), and e = 0 with
    kappa weakly decreasing or weakly increasing.
    """
    kappa, e = weight.kappa, weight.e
    if mu.level != weight.level:
        raise DomainError(f"{mu} has level {mu.level}, expected {weight.level}")
    if e > 0:
        if mu.level != 1:
            return None
        return all(mu.part(1, a) - mu.part(1, a + 1) < e for a in range(1, len(mu.parts[0]) + 1))
    pairs = list(zip(kappa, kappa[1:]))
    if all(k >= k_next for k, k_next in pairs):
        for m, (k, k_next) in enumerate(pairs, start=1):
            rows = len(mu.parts[m - 1]) + len(mu.parts[m])
            for a in range(1, rows + 1):
                if mu.part(m, a + k - k_next) > mu.part(m + 1, a):
                    return False
        return True
    if all(k <= k_next for k, k_next in pairs):
        for m, (k, k_next) in enumerate(pairs, start=1):
            rows = len(mu.parts[m - 1])
            for a in range(1, rows + 1):
                if mu.part(m, a) > mu.part(m + 1, a) + k_next - k:
                    return False
        return True
    return None
