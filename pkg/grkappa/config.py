"""Configuration for grkappa runs."""

import json
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from .core.cartan import RootElement
from .core.errors import DomainError

OutputFormat = Literal["text", "json", "csv", "dot"]
Method = Literal["llt", "bar", "extremal", "all"]


class GrkappaConfig(BaseModel):
    """Quantum characteristic, charge and output options for one invocation."""

    e: int
    kappa: tuple[int, ...]
    cache_dir: Path | None = None
    output_format: OutputFormat = "text"
    method: Method = "bar"
    jobs: int = Field(default=1, ge=1)
    use_cache: bool = True

    @field_validator("e")
    @classmethod
    def check_e(cls, value: int) -> int:
        if value < 0 or value == 1:
            raise ValueError(f"e must be 0 or at least 2, got {value}")
        return value

    @model_validator(mode="after")
    def reduce_kappa(self) -> "GrkappaConfig":
        if not self.kappa:
            raise ValueError("kappa must contain at least one residue")
        if self.e > 0:
            self.kappa = tuple(k % self.e for k in self.kappa)
        return self


def parse_kappa(text: str) -> tuple[int, ...]:
    """Parse the comma-separated ``--kappa`` flag, e.g. ``"0,1,1"``."""
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise DomainError(f"Malformed kappa: '{text}'") from None


def parse_alpha(text: str) -> RootElement:
    """Parse ``--alpha`` as ``"0:2,1:1"`` or as a JSON object ``{"0": 2, "1": 1}``."""
    text = text.strip()
    try:
        if text.startswith("{"):
            raw = json.loads(text)
            pairs = {int(k): int(v) for k, v in raw.items()}
        else:
            pairs = {}
            for chunk in text.split(","):
                if not chunk.strip():
                    continue
                residue, coefficient = chunk.split(":")
                pairs[int(residue)] = pairs.get(int(residue), 0) + int(coefficient)
    except (ValueError, AttributeError):
        raise DomainError(f"Malformed alpha: '{text}'") from None
    return RootElement.from_mapping(pairs)
