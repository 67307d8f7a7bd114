"""Irreducible graded character handler."""

import logging
from typing import Any

from ..core.decomp import column_consistency
from ..engine import HeckeEngine
from ..models import IrreducibleCharacterPayload, qcharacter_payload
from .common import (
    EXIT_VERIFICATION_FAILURE,
    CommandOutput,
    dump_json,
    error_output,
    heading,
    optional_alpha,
    unsupported_format,
)

logger = logging.getLogger(__name__)


async def handle_irr_char(
    engine: HeckeEngine,
    arguments: dict[str, Any],
) -> CommandOutput:
    """Print ch_q D(nu) for every restricted nu in the requested blocks."""
    output_format = engine.config.output_format

    if output_format not in ("text", "json"):
        return unsupported_format("irr-char", output_format, ("text", "json"))

    try:
        alphas = engine.block_alphas(arguments.get("d"), optional_alpha(arguments))
        results = await engine.irreducible_characters(alphas, engine.config.method)

        problems = [
            violation
            for matrix, characters in results
            for violation in column_consistency(matrix, characters)
        ]
        exit_code = EXIT_VERIFICATION_FAILURE if problems else 0

        if output_format == "json":
            return CommandOutput(dump_json([
                IrreducibleCharacterPayload(
                    label=str(nu),
                    dimension=ch.dimension(),
                    character=qcharacter_payload(ch),
                )
                for _, characters in results
                for nu, ch in characters.items()
            ]), exit_code)

        text = ""
        for matrix, characters in results:
            for nu, ch in characters.items():
                text += heading(f"D({nu}) in block {matrix.alpha}, dimension {ch.dimension()}")
                for term in qcharacter_payload(ch):
                    text += "(" + ",".join(str(x) for x in term.seq) + f"): {term.coeff}\n"
                text += "\n"
        for problem in problems:
            text += f"violation: {problem}\n"
        return CommandOutput(text, exit_code)

    except Exception as e:
        return error_output("computing irreducible characters", e)
