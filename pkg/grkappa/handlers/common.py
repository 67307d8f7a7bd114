"""Shared helpers for command handlers."""

import json
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from pydantic import BaseModel, ValidationError

from ..config import parse_alpha
from ..core.cartan import RootElement
from ..core.errors import DomainError, InconsistentInputError, VerificationFailure
from ..core.multipartition import Multipartition, parse_multipartition

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_VERIFICATION_FAILURE = 2


@dataclass
class CommandOutput:
    text: str
    exit_code: int = EXIT_OK


def heading(title: str) -> str:
    return f"{title}\n" + "=" * len(title) + "\n"


def dump_json(payload: BaseModel | Sequence[BaseModel] | dict[str, Any]) -> str:
    def plain(value: Any) -> Any:
        if isinstance(value, BaseModel):
            return value.model_dump(mode="json")
        if isinstance(value, dict):
            return {k: plain(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [plain(v) for v in value]
        return value

    return json.dumps(plain(payload), indent=2) + "\n"


def error_output(action: str, e: Exception) -> CommandOutput:
    """Map an exception to the error text and exit code of a failed command."""
    if isinstance(e, (VerificationFailure, InconsistentInputError)):
        logger.error(f"{action} failed verification: {e}")
        return CommandOutput(f"Verification failed: {e}\n", EXIT_VERIFICATION_FAILURE)
    if isinstance(e, (DomainError, ValidationError)):
        return CommandOutput(f"Error: {e}\n", EXIT_DOMAIN_ERROR)
    logger.error(f"{action} failed: {e}")
    return CommandOutput(f"Error {action}: {str(e)}\n", EXIT_DOMAIN_ERROR)


def optional_alpha(arguments: dict[str, Any]) -> RootElement | None:
    text = arguments.get("alpha")
    return parse_alpha(text) if text else None


def optional_multipartition(arguments: dict[str, Any]) -> Multipartition | None:
    text = arguments.get("mu")
    return parse_multipartition(text) if text else None


def parse_sequence(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise DomainError(f"Malformed residue sequence: '{text}'") from None


def unsupported_format(
    command: str,
    output_format: str,
    allowed: Sequence[str],
) -> CommandOutput:
    return CommandOutput(
        f"Error: {command} supports --format {', '.join(allowed)}, not {output_format}\n",
        EXIT_DOMAIN_ERROR,
    )
