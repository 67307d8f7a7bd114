"""Violation records shared by the relation verifiers."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    relation: str
    location: str
    detail: str

    def __str__(self) -> str:
        return f"{self.relation} at {self.location}: {self.detail}"
