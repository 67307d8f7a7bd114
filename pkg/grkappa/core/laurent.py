"""Exact arithmetic in Z[q, q^-1]."""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from functools import lru_cache

from .errors import DomainError, InexactDivisionError

_TERM_SPLIT_RE = re.compile(r"(?<!\^)(?=[+-])")
_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?:(?P<coeff>\d+)(?P<var>\*q(?:\^(?P<exp>-?\d+))?)?"
    r"|(?P<bare>q(?:\^(?P<bexp>-?\d+))?))"
)


class LaurentPoly:
    """Finitely supported integer coefficients on integer powers of q.

    Values are immutable and hashable. Zero coefficients are never stored,
    so two polynomials are equal exactly when their coefficient maps are.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._coeffs: dict[int, int] = {
            int(k): int(v) for k, v in (coeffs or {}).items() if v
        }
        self._hash: int | None = None

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        return cls({0: value})

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the textual form produced by ``str()``, e.g. ``"3*q^-2 + 1 + q^4"``."""
        compact = text.replace(" ", "")
        if not compact:
            raise DomainError("Empty Laurent polynomial text")
        coeffs: dict[int, int] = {}
        for term in _TERM_SPLIT_RE.split(compact):
            if not term:
                continue
            match = _TERM_RE.fullmatch(term)
            if match is None:
                raise DomainError(f"Malformed Laurent polynomial term: '{term}'")
            sign = -1 if match["sign"] == "-" else 1
            if match["coeff"] is not None:
                value = int(match["coeff"])
                if match["var"]:
                    exponent = int(match["exp"]) if match["exp"] else 1
                else:
                    exponent = 0
            else:
                value = 1
                exponent = int(match["bexp"]) if match["bexp"] else 1
            coeffs[exponent] = coeffs.get(exponent, 0) + sign * value
        return cls(coeffs)

    # -- mapping-like access ------------------------------------------------

    def __getitem__(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def items(self) -> list[tuple[int, int]]:
        """Terms as (exponent, coefficient) pairs, ascending by exponent."""
        return sorted(self._coeffs.items())

    def exponents(self) -> list[int]:
        return sorted(self._coeffs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @property
    def max_exponent(self) -> int:
        if not self._coeffs:
            raise ValueError("The zero polynomial has no top exponent")
        return max(self._coeffs)

    @property
    def min_exponent(self) -> int:
        if not self._coeffs:
            raise ValueError("The zero polynomial has no bottom exponent")
        return min(self._coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        coeffs = dict(self._coeffs)
        for k, v in other._coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + v
        return LaurentPoly(coeffs)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        coeffs: dict[int, int] = {}
        for a, x in self._coeffs.items():
            for b, y in other._coeffs.items():
                coeffs[a + b] = coeffs.get(a + b, 0) + x * y
        return LaurentPoly(coeffs)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise DomainError("Negative powers are only defined for monomials")
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        return LaurentPoly({e + k: v for e, v in self._coeffs.items()})

    def bar(self) -> LaurentPoly:
        return LaurentPoly({-k: v for k, v in self._coeffs.items()})

    def evaluate(self, q: int = 1) -> int:
        """Value at an integer q; only q = +-1 is allowed with negative exponents."""
        if q in (1, -1):
            return sum(v * q ** (k % 2) for k, v in self._coeffs.items())
        if self._coeffs and self.min_exponent < 0:
            raise DomainError("Cannot evaluate negative powers of q at this point")
        return sum(v * q**k for k, v in self._coeffs.items())

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._coeffs.values())

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        text = ""
        for exponent, coeff in self.items():
            magnitude = abs(coeff)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not text:
                text = body if coeff > 0 else f"-{body}"
            else:
                text += f" + {body}" if coeff > 0 else f" - {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def _coerce(value: LaurentPoly | int) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly.constant(value)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
Q = LaurentPoly.monomial(1)


def bar(f: LaurentPoly) -> LaurentPoly:
    """The bar involution q -> q^-1."""
    return f.bar()


def quantum_int(n: int) -> LaurentPoly:
    """[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        raise DomainError(f"Quantum integer needs n >= 0, got {n}")
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise DomainError(f"Quantum factorial needs n >= 0, got {n}")
    if n == 0:
        return ONE
    return quantum_int(n) * quantum_factorial(n - 1)


def quantum_binomial(n: int, m: int) -> LaurentPoly:
    if not 0 <= m <= n:
        raise DomainError(f"Quantum binomial needs 0 <= m <= n, got n={n}, m={m}")
    return divide_exactly(
        quantum_factorial(n), quantum_factorial(n - m) * quantum_factorial(m)
    )


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly | None:
    """Return h with h * g == f, or None when no such h exists in Z[q, q^-1].

    Long division from the top exponent. Exponents of an exact quotient are
    bounded below by min(f) - min(g), which makes the loop terminate.
    """
    if not g:
        raise ZeroDivisionError("Division by the zero Laurent polynomial")
    if not f:
        return ZERO
    g_top = g.max_exponent
    g_lead = g[g_top]
    lowest = f.min_exponent - g.min_exponent
    remainder = {k: v for k, v in f.items()}
    quotient: dict[int, int] = {}
    while remainder:
        top = max(remainder)
        shift = top - g_top
        if shift < lowest or remainder[top] % g_lead:
            return None
        factor = remainder[top] // g_lead
        quotient[shift] = factor
        for k, v in g.items():
            value = remainder.get(k + shift, 0) - factor * v
            if value:
                remainder[k + shift] = value
            else:
                remainder.pop(k + shift, None)
    return LaurentPoly(quotient)


def divide_exactly(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Like :func:`exact_div` but raise when the division leaves a remainder."""
    quotient = exact_div(f, g)
    if quotient is None:
        raise InexactDivisionError(f"({f}) is not divisible by ({g})")
    return quotient


def poly_sum(values: Iterable[LaurentPoly]) -> LaurentPoly:
    total = ZERO
    for value in values:
        total = total + value
    return total
