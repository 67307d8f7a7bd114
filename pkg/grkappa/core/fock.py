"""The level-l Fock space over Z[q, q^-1] and its quantum group action."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Mapping
from itertools import product

from .cartan import DominantWeight, cartan_entry
from .errors import DomainError
from .laurent import ZERO, LaurentPoly, divide_exactly, quantum_binomial, quantum_factorial
from .multipartition import (
    Multipartition,
    content,
    d_above,
    d_below,
    d_total,
    enumerate_multipartitions,
    residue,
)
from .verification import Violation

logger = logging.getLogger(__name__)


class FockVector:
    """A finite linear combination of monomial basis vectors M_mu."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Multipartition, LaurentPoly] | None = None):
        self._terms = {mu: poly for mu, poly in (terms or {}).items() if poly}
        if len({mu.level for mu in self._terms}) > 1:
            raise DomainError("All terms of a Fock vector must have one level")

    @classmethod
    def basis(cls, mu: Multipartition) -> FockVector:
        return cls({mu: LaurentPoly.constant(1)})

    def coefficient(self, mu: Multipartition) -> LaurentPoly:
        return self._terms.get(mu, ZERO)

    def items(self) -> list[tuple[Multipartition, LaurentPoly]]:
        return sorted(self._terms.items(), key=lambda item: item[0].parts, reverse=True)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: FockVector) -> FockVector:
        terms = dict(self._terms)
        for mu, poly in other._terms.items():
            terms[mu] = terms.get(mu, ZERO) + poly
        return FockVector(terms)

    def __neg__(self) -> FockVector:
        return FockVector({mu: -poly for mu, poly in self._terms.items()})

    def __sub__(self, other: FockVector) -> FockVector:
        return self + (-other)

    def scale(self, factor: LaurentPoly) -> FockVector:
        return FockVector({mu: poly * factor for mu, poly in self._terms.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({poly})*M[{mu}]" for mu, poly in self.items())


def _linear(
    action: Callable[[Multipartition], FockVector],
) -> Callable[[FockVector], FockVector]:
    def apply(v: FockVector) -> FockVector:
        total = FockVector()
        for mu, poly in v.items():
            total = total + action(mu).scale(poly)
        return total

    return apply


def fock_E(i: int, v: FockVector, weight: DominantWeight) -> FockVector:
    """E_i M_mu = sum over removable i-nodes A of q^d_A(mu) M_{mu_A}."""
    i = weight.reduce(i)

    def on_basis(mu: Multipartition) -> FockVector:
        return FockVector({
            mu.remove(node): LaurentPoly.monomial(d_below(mu, node, weight))
            for node in mu.removable_nodes()
            if residue(node, weight) == i
        })

    return _linear(on_basis)(v)


def fock_F(i: int, v: FockVector, weight: DominantWeight) -> FockVector:
    """F_i M_mu = sum over addable i-nodes B of q^-d^B(mu) M_{mu^B}."""
    i = weight.reduce(i)

    def on_basis(mu: Multipartition) -> FockVector:
        return FockVector({
            mu.add(node): LaurentPoly.monomial(-d_above(mu, node, weight))
            for node in mu.addable_nodes()
            if residue(node, weight) == i
        })

    return _linear(on_basis)(v)


def fock_K(i: int, v: FockVector, weight: DominantWeight, power: int = 1) -> FockVector:
    """K_i^power M_mu = q^(power * d_i(mu)) M_mu."""
    return FockVector({
        mu: poly.shift(power * d_total(mu, i, weight)) for mu, poly in v.items()
    })


def fock_divided_power(
    op: str, i: int, n: int, v: FockVector, weight: DominantWeight
) -> FockVector:
    """E_i^(n) or F_i^(n): n applications followed by exact division by [n]!."""
    if n < 1:
        raise DomainError(f"Divided powers need n >= 1, got {n}")
    step = {"E": fock_E, "F": fock_F}.get(op)
    if step is None:
        raise DomainError(f"Unknown Chevalley generator '{op}'")
    result = v
    for _ in range(n):
        result = step(i, result, weight)
    factorial = quantum_factorial(n)
    return FockVector({mu: divide_exactly(poly, factorial) for mu, poly in result.items()})


def weight_space_dimension(d: int, weight: DominantWeight) -> dict[str, int]:
    """Number of basis vectors M_mu per content, keyed by the content's text form."""
    counts: dict[str, int] = {}
    for mu in enumerate_multipartitions(d, weight.level):
        key = str(content(mu, weight))
        counts[key] = counts.get(key, 0) + 1
    return counts


def relevant_residues(dmax: int, weight: DominantWeight) -> list[int]:
    """All residues for e > 0; for e = 0 the window touched by sizes up to dmax + 1."""
    if weight.e > 0:
        return list(range(weight.e))
    low = min(weight.kappa) - dmax - 1
    high = max(weight.kappa) + dmax + 1
    return list(range(low, high + 1))


def _serre(
    step: Callable[[int, FockVector, DominantWeight], FockVector],
    i: int,
    j: int,
    v: FockVector,
    weight: DominantWeight,
) -> FockVector:
    """sum_m (-1)^m [n, m] X_i^(n-m) X_j X_i^m v with n = 1 - a_ji."""
    n = 1 - cartan_entry(j, i, weight.e)
    total = FockVector()
    powers = [v]
    for _ in range(n):
        powers.append(step(i, powers[-1], weight))
    for m in range(n + 1):
        term = step(j, powers[m], weight)
        for _ in range(n - m):
            term = step(i, term, weight)
        coefficient = quantum_binomial(n, m) * (-1 if m % 2 else 1)
        total = total + term.scale(coefficient)
    return total


def verify_uqg_relations(
    dmax: int, weight: DominantWeight, residues: Iterable[int] | None = None
) -> list[Violation]:
    """Check the quantum group relations on every M_mu with |mu| <= dmax."""
    if dmax < 0:
        raise DomainError(f"Need dmax >= 0, got {dmax}")
    residue_list = list(residues) if residues is not None else relevant_residues(dmax, weight)
    q_minus_inverse = LaurentPoly({1: 1, -1: -1})
    violations: list[Violation] = []
    basis = [
        mu for d in range(dmax + 1) for mu in enumerate_multipartitions(d, weight.level)
    ]
    logger.info(
        f"Verifying quantum group relations on {len(basis)} basis vectors "
        f"and {len(residue_list)} residues"
    )

    def record(
        relation: str,
        mu: Multipartition,
        i: int,
        j: int,
        lhs: FockVector,
        rhs: FockVector,
    ) -> None:
        if lhs != rhs:
            violations.append(
                Violation(relation, f"M[{mu}], i={i}, j={j}", f"{lhs} != {rhs}")
            )

    for mu in basis:
        v = FockVector.basis(mu)
        for i, j in product(residue_list, repeat=2):
            a_ij = cartan_entry(i, j, weight.e)
            for name, step, sign in (("KEK", fock_E, 1), ("KFK", fock_F, -1)):
                lhs = fock_K(i, step(j, fock_K(i, v, weight, -1), weight), weight)
                rhs = step(j, v, weight).scale(LaurentPoly.monomial(sign * a_ij))
                record(name, mu, i, j, lhs, rhs)

            commutator = fock_E(i, fock_F(j, v, weight), weight) - fock_F(
                j, fock_E(i, v, weight), weight
            )
            expected = FockVector()
            if i == j:
                expected = fock_K(i, v, weight) - fock_K(i, v, weight, -1)
            record("EF-FE", mu, i, j, commutator.scale(q_minus_inverse), expected)

            if i != j:
                record("Serre-E", mu, i, j, _serre(fock_E, i, j, v, weight), FockVector())
                record("Serre-F", mu, i, j, _serre(fock_F, i, j, v, weight), FockVector())
    return violations
