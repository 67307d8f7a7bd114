"""Mullineux involution handler."""

import logging
from typing import Any

from ..engine import HeckeEngine
from .common import (
    EXIT_DOMAIN_ERROR,
    CommandOutput,
    dump_json,
    error_output,
    heading,
    optional_multipartition,
    unsupported_format,
)

logger = logging.getLogger(__name__)


async def handle_mullineux(
    engine: HeckeEngine,
    arguments: dict[str, Any],
) -> CommandOutput:
    """Image of one restricted partition (--mu) or of every one of size d."""
    d = arguments.get("d")
    output_format = engine.config.output_format

    if not arguments.get("mu") and d is None:
        return CommandOutput("Error: either --mu or --d is required\n", EXIT_DOMAIN_ERROR)
    if output_format not in ("text", "json"):
        return unsupported_format("mullineux", output_format, ("text", "json"))

    try:
        mu = optional_multipartition(arguments)
        sources = [mu] if mu is not None else engine.restricted(d, exact=True)
        images = [(source, engine.mullineux(source)) for source in sources]

        if output_format == "json":
            return CommandOutput(dump_json([
                {"mu": str(source), "image": str(image)} for source, image in images
            ]))

        text = heading(f"Mullineux map (e={engine.weight.e}, kappa={engine.weight})")
        for source, image in images:
            text += f"{source} -> {image}\n"
        return CommandOutput(text)

    except Exception as e:
        return error_output("computing the Mullineux map", e)
