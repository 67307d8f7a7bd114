"""Exact combinatorics of cyclotomic Hecke algebras and their graded modules."""

from .cartan import DominantWeight, RootElement
from .errors import (
    DomainError,
    GrkappaError,
    InconsistentInputError,
    InexactDivisionError,
    VerificationFailure,
)
from .laurent import LaurentPoly
from .multipartition import Multipartition, Node

__all__ = [
    "DominantWeight",
    "RootElement",
    "LaurentPoly",
    "Multipartition",
    "Node",
    "GrkappaError",
    "DomainError",
    "InexactDivisionError",
    "InconsistentInputError",
    "VerificationFailure",
]
