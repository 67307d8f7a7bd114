"""Graded block dimension handler."""

import logging
from math import factorial
from typing import Any

from ..core.cartan import RootElement
from ..engine import HeckeEngine
from .common import (
    EXIT_DOMAIN_ERROR,
    EXIT_VERIFICATION_FAILURE,
    CommandOutput,
    dump_json,
    error_output,
    heading,
    optional_alpha,
    parse_sequence,
    unsupported_format,
)

logger = logging.getLogger(__name__)


async def _pair_mode(engine: HeckeEngine, arguments: dict[str, Any]) -> CommandOutput:
    i = parse_sequence(arguments["i"])
    j = parse_sequence(arguments["j"])
    alpha = optional_alpha(arguments)
    if alpha is None:
        alpha = RootElement.from_residues(engine.weight.reduce(x) for x in i)
    direct, dual = engine.graded_dimension(alpha, i, j)
    agree = direct == dual
    exit_code = 0 if agree else EXIT_VERIFICATION_FAILURE

    if engine.config.output_format == "json":
        return CommandOutput(dump_json({
            "alpha": str(alpha),
            "i": list(i),
            "j": list(j),
            "graded_dimension": str(direct),
            "dual_form": str(dual),
            "forms_agree": agree,
        }), exit_code)

    text = heading(f"Graded dimension of e(i) H e(j) in block {alpha}")
    text += f"i = ({','.join(str(x) for x in i)})\n"
    text += f"j = ({','.join(str(x) for x in j)})\n"
    text += f"sum of deg S + deg T: {direct}\n"
    text += f"sum of 2 def - deg S - deg T: {dual}\n"
    text += f"forms agree: {'yes' if agree else 'no'}\n"
    return CommandOutput(text, exit_code)


async def _totals_mode(engine: HeckeEngine, arguments: dict[str, Any]) -> CommandOutput:
    d = arguments.get("d")
    alphas = engine.block_alphas(d, optional_alpha(arguments))
    totals = await engine.graded_dimension_totals(alphas)

    expected = None
    total_at_one = sum(total.evaluate(1) for total in totals)
    if d is not None and not arguments.get("alpha"):
        expected = engine.weight.level ** d * factorial(d)
    agree = expected is None or expected == total_at_one
    exit_code = 0 if agree else EXIT_VERIFICATION_FAILURE

    if engine.config.output_format == "json":
        return CommandOutput(dump_json({
            "blocks": [
                {"alpha": str(alpha), "total": str(total), "at_one": total.evaluate(1)}
                for alpha, total in zip(alphas, totals)
            ],
            "sum_at_one": total_at_one,
            "expected": expected,
        }), exit_code)

    text = heading(f"Graded block dimensions (e={engine.weight.e}, kappa={engine.weight})")
    for alpha, total in zip(alphas, totals):
        text += f"{alpha}: {total}  (at q=1: {total.evaluate(1)})\n"
    text += f"\nsum at q=1: {total_at_one}\n"
    if expected is not None:
        text += f"l^d * d! = {expected}: {'yes' if agree else 'no'}\n"
    return CommandOutput(text, exit_code)


async def handle_graded_dim(
    engine: HeckeEngine,
    arguments: dict[str, Any],
) -> CommandOutput:
    """Graded dimension of e(i) H_alpha e(j), or block totals without --i/--j."""
    has_i, has_j = bool(arguments.get("i")), bool(arguments.get("j"))

    if has_i != has_j:
        return CommandOutput("Error: --i and --j must be given together\n", EXIT_DOMAIN_ERROR)
    if engine.config.output_format not in ("text", "json"):
        return unsupported_format("graded-dim", engine.config.output_format, ("text", "json"))

    try:
        if has_i:
            return await _pair_mode(engine, arguments)
        return await _totals_mode(engine, arguments)
    except Exception as e:
        return error_output("computing graded dimensions", e)
