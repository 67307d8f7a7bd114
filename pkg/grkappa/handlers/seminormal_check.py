"""Seminormal representation check handler."""

import logging
from math import factorial
from typing import Any

from ..core.multipartition import enumerate_multipartitions
from ..core.verification import Violation
from ..engine import HeckeEngine
from ..models import KLRRepPayload, VerificationReport, ViolationPayload
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


async def handle_seminormal_check(
    engine: HeckeEngine,
    arguments: dict[str, Any],
) -> CommandOutput:
    """Build seminormal representations and verify the KLR relations on them.

    With --d every partition of d is checked, together with the global
    distinctness of residue sequences and sum of dim^2 = d!.
    """
    d = arguments.get("d")
    dump = arguments.get("dump", False)
    output_format = engine.config.output_format

    if not arguments.get("mu") and d is None:
        return CommandOutput("Error: either --mu or --d is required\n", EXIT_DOMAIN_ERROR)
    if output_format not in ("text", "json"):
        return unsupported_format("seminormal-check", output_format, ("text", "json"))

    try:
        mu = optional_multipartition(arguments)
        shapes = [mu] if mu is not None else enumerate_multipartitions(d, engine.weight.level)
        checked = [engine.seminormal(shape) for shape in shapes]

        violations: list[Violation] = [v for _, found in checked for v in found]
        if mu is None:
            owners: dict[tuple[int, ...], str] = {}
            for rep, _ in checked:
                for label, seq in zip(rep.labels, rep.sequences):
                    if seq in owners:
                        violations.append(Violation(
                            "distinct-sequences", str(rep.shape), f"{seq} also occurs in {owners[seq]}"
                        ))
                    owners[seq] = f"{rep.shape} ({label})"
            total = sum(rep.dimension ** 2 for rep, _ in checked)
            if total != factorial(d):
                violations.append(Violation("sum-of-squares", f"d={d}", f"{total} != {factorial(d)}"))
        exit_code = EXIT_VERIFICATION_FAILURE if violations else 0

        if dump:
            return CommandOutput(
                dump_json([KLRRepPayload.from_rep(rep) for rep, _ in checked]), exit_code
            )

        description = f"--mu {mu}" if mu is not None else f"--d {d}"
        if output_format == "json":
            return CommandOutput(dump_json(VerificationReport(
                passed=not violations,
                checked=f"KLR relations on seminormal representations, {description}",
                violations=[ViolationPayload.from_violation(v) for v in violations],
            )), exit_code)

        text = heading(f"Seminormal representations, {description}")
        for rep, found in checked:
            status = "ok" if not found else f"{len(found)} violations"
            text += f"{rep.shape}: dimension {rep.dimension}, {status}\n"
        text += "\n"
        if not violations:
            text += "no violations\n"
        for violation in violations:
            text += f"{violation}\n"
        return CommandOutput(text, exit_code)

    except Exception as e:
        return error_output("checking seminormal representations", e)
