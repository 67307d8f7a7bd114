"""Crystal operators on multipartitions and the combinatorics built on them.

The i-signature lists the addable (+) and removable (-) i-nodes of a
multipartition from top to bottom. A '-' followed by a '+' with only
cancelled entries between them cancels; what survives is a run of '+'
followed by a run of '-'.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass

import networkx as nx

from .cartan import DominantWeight, weight_coordinate
from .errors import DomainError, InexactDivisionError
from .laurent import LaurentPoly, divide_exactly, quantum_factorial
from .multipartition import Multipartition, Node, content, i_nodes, residue
from .tableaux import QCharacter, ResidueSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedSignature:
    """Signs per i-node, top to bottom: +1 addable, -1 removable, 0 cancelled."""

    items: tuple[tuple[Node, int], ...]

    @property
    def epsilon(self) -> int:
        return sum(1 for _, sign in self.items if sign < 0)

    @property
    def phi(self) -> int:
        return sum(1 for _, sign in self.items if sign > 0)

    def good_node(self) -> Node | None:
        """Node of the leftmost surviving '-'."""
        return next((node for node, sign in self.items if sign < 0), None)

    def cogood_node(self) -> Node | None:
        """Node of the rightmost surviving '+'."""
        return next((node for node, sign in reversed(self.items) if sign > 0), None)

    def normal_nodes(self) -> list[Node]:
        return [node for node, sign in self.items if sign < 0]

    def conormal_nodes(self) -> list[Node]:
        return [node for node, sign in self.items if sign > 0]

    def word(self) -> str:
        return "".join({1: "+", -1: "-", 0: "0"}[sign] for _, sign in self.items)


def reduced_signature(
    mu: Multipartition,
    i: int,
    weight: DominantWeight,
) -> ReducedSignature:
    marked = i_nodes(mu, i, weight)
    signs = [sign for _, sign in marked]
    open_minus: list[int] = []
    for position, sign in enumerate(signs):
        if sign < 0:
            open_minus.append(position)
        elif open_minus:
            signs[open_minus.pop()] = 0
            signs[position] = 0
    return ReducedSignature(tuple((node, sign) for (node, _), sign in zip(marked, signs)))


def epsilon(mu: Multipartition, i: int, weight: DominantWeight) -> int:
    return reduced_signature(mu, i, weight).epsilon


def phi(mu: Multipartition, i: int, weight: DominantWeight) -> int:
    return reduced_signature(mu, i, weight).phi


def e_tilde(
    mu: Multipartition,
    i: int,
    weight: DominantWeight,
) -> Multipartition | None:
    node = reduced_signature(mu, i, weight).good_node()
    return mu.remove(node) if node is not None else None


def f_tilde(
    mu: Multipartition,
    i: int,
    weight: DominantWeight,
) -> Multipartition | None:
    node = reduced_signature(mu, i, weight).cogood_node()
    return mu.add(node) if node is not None else None


def weight_vector(
    mu: Multipartition,
    weight: DominantWeight,
    residues: list[int],
) -> tuple[int, ...]:
    """(Lambda - cont(mu), alpha_i) for each i in ``residues``."""
    alpha = content(mu, weight)
    return tuple(weight_coordinate(weight, alpha, i) for i in residues)


def candidate_residues(mu: Multipartition, weight: DominantWeight) -> list[int]:
    """Residues of the addable nodes of mu, the only ones f_tilde can act with."""
    return sorted({residue(node, weight) for node in mu.addable_nodes()})


def enumerate_restricted(d: int, weight: DominantWeight) -> list[Multipartition]:
    """RP^kappa of size at most d: closure of the empty multipartition under f_tilde.

    Ordered by size, then lex-descending within a size.
    """
    if d < 0:
        raise DomainError(f"Need d >= 0, got {d}")
    layer = {Multipartition.empty(weight.level)}
    found = sorted(layer, reverse=True)
    for size in range(1, d + 1):
        next_layer: set[Multipartition] = set()
        for mu in layer:
            for i in candidate_residues(mu, weight):
                nu = f_tilde(mu, i, weight)
                if nu is not None:
                    next_layer.add(nu)
        logger.debug(f"Restricted multipartitions of size {size}: {len(next_layer)}")
        found.extend(sorted(next_layer, reverse=True))
        layer = next_layer
    return found


def restricted_of_size(d: int, weight: DominantWeight) -> list[Multipartition]:
    return [mu for mu in enumerate_restricted(d, weight) if mu.size == d]


def is_restricted(mu: Multipartition, weight: DominantWeight) -> bool:
    """Whether mu is reachable from the empty multipartition by f_tilde.

    Removing good nodes in any order reaches the empty multipartition exactly
    when mu is restricted.
    """
    current = mu
    while current.size:
        step = None
        for node in current.removable_nodes():
            smaller = e_tilde(current, residue(node, weight), weight)
            if smaller is not None:
                step = smaller
                break
        if step is None:
            return False
        current = step
    return True


@dataclass(frozen=True)
class CrystalGraph:
    vertices: tuple[Multipartition, ...]
    edges: tuple[tuple[Multipartition, Multipartition, int], ...]

    def as_digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        for source, target, i in self.edges:
            graph.add_edge(source, target, residue=i)
        return graph

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for vertex in self.vertices:
            lines.append(f'  "{vertex}";')
        for source, target, i in self.edges:
            lines.append(f'  "{source}" -> "{target}" [label="i={i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def crystal_graph(d: int, weight: DominantWeight) -> CrystalGraph:
    vertices = enumerate_restricted(d, weight)
    edges = []
    for mu in vertices:
        if mu.size >= d:
            continue
        for i in candidate_residues(mu, weight):
            nu = f_tilde(mu, i, weight)
            if nu is not None:
                edges.append((mu, nu, i))
    order = {mu: position for position, mu in enumerate(vertices)}
    edges.sort(key=lambda edge: (order[edge[0]], edge[2]))
    return CrystalGraph(tuple(vertices), tuple(edges))


def good_node_chain(mu: Multipartition, weight: DominantWeight) -> list[int]:
    """Residues i_1, ..., i_d with mu = f_{i_1} ... f_{i_d} (empty).

    Good nodes are removed one at a time, taking the smallest residue with a
    good node, and i_1 is the residue removed first.
    """
    chain = []
    current = mu
    while current.size:
        for i in sorted({residue(node, weight) for node in current.removable_nodes()}):
            smaller = e_tilde(current, i, weight)
            if smaller is not None:
                chain.append(i)
                current = smaller
                break
        else:
            raise DomainError(f"{mu} is not restricted")
    return chain


def build_from_chain(chain: list[int], weight: DominantWeight) -> Multipartition:
    """f_{i_1} ... f_{i_d} applied to the empty multipartition (i_d first)."""
    current = Multipartition.empty(weight.level)
    for i in reversed(chain):
        step = f_tilde(current, i, weight)
        if step is None:
            raise DomainError(f"f_{i} vanishes on {current}")
        current = step
    return current


def mullineux(mu: Multipartition, weight: DominantWeight) -> Multipartition:
    """Label of the sign twist of D(mu) in level one.

    Residues are negated about k for kappa = (k,).
    """
    if weight.level != 1:
        raise DomainError("The Mullineux map is defined in level one only")
    k = weight.kappa[0]
    chain = good_node_chain(mu, weight)
    return build_from_chain([weight.reduce(2 * k - i) for i in chain], weight)


@dataclass(frozen=True)
class ExtremalSequence:
    """Runs (j_1, m_1), ..., (j_n, m_n), read left to right, and the label mu."""

    runs: tuple[tuple[int, int], ...]
    mu: Multipartition

    @property
    def sequence(self) -> ResidueSequence:
        return tuple(j for j, m in self.runs for _ in range(m))

    def run_form(self) -> str:
        if not self.runs:
            return "()"
        return " ".join(f"{j}^{m}" if m > 1 else str(j) for j, m in self.runs)


def _trailing_runs(ch: QCharacter) -> dict[int, int]:
    """epsilon_j(ch) for every j: the longest trailing run of j over the support."""
    runs: dict[int, int] = {}
    for seq in ch.sequences():
        if not seq:
            continue
        last = seq[-1]
        length = 0
        for x in reversed(seq):
            if x != last:
                break
            length += 1
        runs[last] = max(runs.get(last, 0), length)
    return runs


def _restrict_run(ch: QCharacter, j: int, m: int) -> QCharacter:
    """Keep the sequences ending in j^m and drop those m entries."""
    assert ch.length is not None
    terms = {
        seq[:-m]: poly
        for seq, poly in ch.items()
        if seq[len(seq) - m:] == (j,) * m
    }
    return QCharacter(terms, ch.length - m)


def iter_extremal_sequences(
    ch: QCharacter,
    weight: DominantWeight,
) -> Iterator[ExtremalSequence]:
    """Every extremal sequence of ch, one per choice of residue at each step.

    Choices are explored smallest residue first, depth first.
    """
    if not ch:
        raise DomainError("The zero character has no extremal sequence")

    def explore(
        current: QCharacter,
        runs: tuple[tuple[int, int], ...],
    ) -> Iterator[tuple[tuple[int, int], ...]]:
        if not current.length:
            yield runs
            return
        for j, m in sorted(_trailing_runs(current).items()):
            yield from explore(_restrict_run(current, j, m), ((j, m), *runs))

    for runs in explore(ch, ()):
        sequence = [j for j, m in runs for _ in range(m)]
        mu = Multipartition.empty(weight.level)
        for j in sequence:
            step = f_tilde(mu, j, weight)
            if step is None:
                raise DomainError(
                    f"Extremal sequence {sequence} is not a crystal path; "
                    "the character is not a nonnegative combination of irreducibles"
                )
            mu = step
        yield ExtremalSequence(runs, mu)


def extremal_sequence(ch: QCharacter, weight: DominantWeight) -> ExtremalSequence:
    return next(iter_extremal_sequences(ch, weight))


def extremal_multiplicity(
    ch: QCharacter, weight: DominantWeight, extremal: ExtremalSequence | None = None
) -> tuple[Multipartition, LaurentPoly]:
    """Graded multiplicity of D(mu) in ch for the extremal label mu."""
    if extremal is None:
        extremal = extremal_sequence(ch, weight)
    divisor = LaurentPoly.constant(1)
    for _, m in extremal.runs:
        divisor = divisor * quantum_factorial(m)
    coefficient = ch.coefficient(extremal.sequence)
    try:
        return extremal.mu, divide_exactly(coefficient, divisor)
    except InexactDivisionError:
        logger.error(
            f"Extremal coefficient {coefficient} at {extremal.sequence} "
            f"is not divisible by {divisor}"
        )
        raise
