"""Graded Specht character handler."""

import logging
from typing import Any

from ..core.tableaux import (
    cycle_notation,
    leading_tableau,
    standard_tableaux_with_degrees,
    tableau_permutation,
)
from ..engine import HeckeEngine
from ..models import QCharacterTerm, alpha_payload, qcharacter_payload
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


async def handle_specht_char(
    engine: HeckeEngine,
    arguments: dict[str, Any],
) -> CommandOutput:
    """Print ch_q S(mu), optionally with every standard tableau behind it."""
    show_tableaux = arguments.get("tableaux", False)
    output_format = engine.config.output_format

    if not arguments.get("mu"):
        return CommandOutput("Error: --mu is required\n", EXIT_DOMAIN_ERROR)
    if output_format not in ("text", "json"):
        return unsupported_format("specht-char", output_format, ("text", "json"))

    try:
        mu = optional_multipartition(arguments)
        assert mu is not None
        ch = engine.specht_character(mu)
        weight = engine.weight
        leading = leading_tableau(mu).residue_sequence(weight)

        if output_format == "json":
            payload: dict[str, Any] = {
                "mp": str(mu),
                "content": alpha_payload(engine.content_of(mu)),
                "leading_sequence": list(leading),
                "character": qcharacter_payload(ch),
            }
            if show_tableaux:
                payload["tableaux"] = [
                    {
                        "tableau": str(tableau),
                        "seq": list(tableau.residue_sequence(weight)),
                        "degree": degree,
                        "permutation": cycle_notation(tableau_permutation(tableau)),
                    }
                    for tableau, degree in standard_tableaux_with_degrees(mu, weight)
                ]
            return CommandOutput(dump_json(payload))

        text = heading(f"Graded character of S({mu})")
        text += f"content: {engine.content_of(mu)}\n"
        text += "leading residue sequence: (" + ",".join(str(x) for x in leading) + ")\n\n"
        terms: list[QCharacterTerm] = qcharacter_payload(ch)
        for term in terms:
            text += "(" + ",".join(str(x) for x in term.seq) + f"): {term.coeff}\n"
        if show_tableaux:
            text += "\nStandard tableaux:\n"
            for tableau, degree in standard_tableaux_with_degrees(mu, weight):
                sequence = ",".join(str(x) for x in tableau.residue_sequence(weight))
                permutation = cycle_notation(tableau_permutation(tableau))
                text += f"  {tableau}  i=({sequence})  deg={degree}  w={permutation}\n"
        return CommandOutput(text)

    except Exception as e:
        return error_output("computing the Specht character", e)
