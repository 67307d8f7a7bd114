"""Restricted multipartition handler."""

import logging
from typing import Any

from ..core.multipartition import enumerate_multipartitions, is_restricted_closed_form
from ..engine import HeckeEngine
from .common import (
    EXIT_DOMAIN_ERROR,
    EXIT_VERIFICATION_FAILURE,
    CommandOutput,
    dump_json,
    error_output,
    heading,
    unsupported_format,
)

logger = logging.getLogger(__name__)


async def handle_restricted(
    engine: HeckeEngine,
    arguments: dict[str, Any],
) -> CommandOutput:
    """List the restricted multipartitions of size d found by the crystal search.

    Where a closed-form description applies, every multipartition of size d
    is also tested against it and any disagreement is a verification failure.
    """
    d = arguments.get("d")
    output_format = engine.config.output_format

    if d is None:
        return CommandOutput("Error: --d is required\n", EXIT_DOMAIN_ERROR)
    if output_format not in ("text", "json"):
        return unsupported_format("restricted", output_format, ("text", "json"))

    try:
        weight = engine.weight
        found = engine.restricted(d, exact=True)
        found_set = set(found)

        closed_form: bool | None = True
        mismatches = []
        for mu in enumerate_multipartitions(d, weight.level):
            verdict = is_restricted_closed_form(mu, weight)
            if verdict is None:
                closed_form = None
                break
            if verdict != (mu in found_set):
                mismatches.append(mu)
        if mismatches:
            closed_form = False
            logger.error(f"Closed form disagrees with the crystal on {len(mismatches)} multipartitions")
        exit_code = EXIT_VERIFICATION_FAILURE if mismatches else 0

        if output_format == "json":
            return CommandOutput(dump_json({
                "d": d,
                "restricted": [str(mu) for mu in found],
                "closed_form_agrees": closed_form,
                "mismatches": [str(mu) for mu in mismatches],
            }), exit_code)

        text = heading(f"Restricted multipartitions of size {d} (e={weight.e}, kappa={weight})")
        text += f"count: {len(found)}\n\n"
        for mu in found:
            text += f"{mu}\n"
        if closed_form is None:
            text += "\nclosed form: not available for this charge\n"
        else:
            text += f"\nclosed form agrees: {'yes' if closed_form else 'no'}\n"
        for mu in mismatches:
            text += f"mismatch: {mu}\n"
        return CommandOutput(text, exit_code)

    except Exception as e:
        return error_output("enumerating restricted multipartitions", e)
