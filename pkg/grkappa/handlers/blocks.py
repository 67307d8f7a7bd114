"""Block listing handler."""

import logging
from typing import Any

from ..engine import HeckeEngine
from ..models import BlockPayload, alpha_payload
from .common import (
    EXIT_DOMAIN_ERROR,
    CommandOutput,
    dump_json,
    error_output,
    heading,
    unsupported_format,
)

logger = logging.getLogger(__name__)


async def handle_blocks(
    engine: HeckeEngine,
    arguments: dict[str, Any],
) -> CommandOutput:
    """List the blocks of size d with their members, restricted members and defects."""
    d = arguments.get("d")
    output_format = engine.config.output_format

    if d is None:
        return CommandOutput("Error: --d is required\n", EXIT_DOMAIN_ERROR)
    if output_format not in ("text", "json"):
        return unsupported_format("blocks", output_format, ("text", "json"))

    try:
        summaries = engine.blocks(d)

        if output_format == "json":
            return CommandOutput(dump_json([
                BlockPayload(
                    alpha=alpha_payload(summary.alpha),
                    defect=summary.defect,
                    multipartitions=[str(mu) for mu in summary.members],
                    restricted=[str(mu) for mu in summary.restricted],
                )
                for summary in summaries
            ]))

        text = heading(f"Blocks of size {d} (e={engine.weight.e}, kappa={engine.weight})")
        for summary in summaries:
            text += f"\nalpha = {summary.alpha}  (defect {summary.defect})\n"
            text += "  multipartitions: " + "  ".join(str(mu) for mu in summary.members) + "\n"
            restricted = "  ".join(str(mu) for mu in summary.restricted) or "-"
            text += f"  restricted: {restricted}\n"
        return CommandOutput(text)

    except Exception as e:
        return error_output("listing blocks", e)
