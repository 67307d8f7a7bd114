"""Fock space relation check handler."""

import logging
from typing import Any

from ..engine import HeckeEngine
from ..models import FockActionPayload, FockVerificationReport, ViolationPayload, fock_payload
from .common import (
    EXIT_DOMAIN_ERROR,
    EXIT_VERIFICATION_FAILURE,
    CommandOutput,
    dump_json,
    error_output,
    heading,
    optional_multipartition,
    unsupported_format,
)

logger = logging.getLogger(__name__)


async def handle_fock_verify(
    engine: HeckeEngine,
    arguments: dict[str, Any],
) -> CommandOutput:
    """Check the quantum group relations on the Fock space up to size dmax.

    With ``mu``, also report E_i M_mu and F_i M_mu for every residue i that
    acts nontrivially.
    """
    dmax = arguments.get("dmax")
    output_format = engine.config.output_format

    if dmax is None:
        return CommandOutput("Error: --dmax is required\n", EXIT_DOMAIN_ERROR)
    if output_format not in ("text", "json"):
        return unsupported_format("fock-verify", output_format, ("text", "json"))

    try:
        mu = optional_multipartition(arguments)
        actions = engine.fock_actions(mu) if mu is not None else []
        violations = engine.fock_verify(dmax)
        exit_code = EXIT_VERIFICATION_FAILURE if violations else 0
        checked = f"Fock space relations, e={engine.weight.e}, kappa={engine.weight}, dmax={dmax}"

        if output_format == "json":
            return CommandOutput(dump_json(FockVerificationReport(
                passed=not violations,
                checked=checked,
                violations=[ViolationPayload.from_violation(v) for v in violations],
                vector=str(mu) if mu is not None else None,
                actions=[
                    FockActionPayload(generator=name, residue=i, vector=fock_payload(image))
                    for name, i, image in actions
                ],
            )), exit_code)

        text = heading(checked)
        if not violations:
            text += "no violations\n"
        for violation in violations:
            text += f"{violation}\n"
        if mu is not None:
            text += "\n" + heading(f"Chevalley generators on M[{mu}]")
            for name, i, image in actions:
                text += f"{name}_{i} M[{mu}] = {image}\n"
        return CommandOutput(text, exit_code)

    except Exception as e:
        return error_output("verifying Fock space relations", e)
