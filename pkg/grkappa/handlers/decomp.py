"""Decomposition matrix handler."""

import csv
import io
import logging
from typing import Any

from ..core.decomp import DecompositionMatrix
from ..engine import HeckeEngine
from ..models import MatrixPayload, SpecializedMatrixPayload, alpha_payload
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


def _cell(
    matrix: DecompositionMatrix,
    row: int,
    col: int,
    specialized: list[list[int]] | None,
) -> str:
    if specialized is not None:
        return str(specialized[row][col])
    value = matrix.entry(matrix.rows[row], matrix.cols[col])
    return str(value) if value else "."


def format_matrix_table(matrix: DecompositionMatrix, specialize: bool = False) -> str:
    """Aligned text table, rows labelled by mu and columns by restricted nu."""
    specialized = matrix.specialize() if specialize else None
    header = [""] + [str(nu) for nu in matrix.cols]
    body = [
        [str(mu)] + [_cell(matrix, r, c, specialized) for c in range(len(matrix.cols))]
        for r, mu in enumerate(matrix.rows)
    ]
    widths = [max(len(line[k]) for line in [header, *body]) for k in range(len(header))]
    lines = ["  ".join(text.ljust(width) for text, width in zip(line, widths)).rstrip()
             for line in [header, *body]]
    return "\n".join(lines) + "\n"


def format_matrix_csv(matrix: DecompositionMatrix, specialize: bool = False) -> str:
    specialized = matrix.specialize() if specialize else None
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["mu"] + [str(nu) for nu in matrix.cols])
    for r, mu in enumerate(matrix.rows):
        row = []
        for c in range(len(matrix.cols)):
            text = _cell(matrix, r, c, specialized)
            row.append("0" if text == "." else text)
        writer.writerow([str(mu)] + row)
    return buffer.getvalue()


async def handle_decomp(
    engine: HeckeEngine,
    arguments: dict[str, Any],
) -> CommandOutput:
    """Graded decomposition matrices of one block or of every block of size d.

    Args:
        engine: Engine carrying e, kappa, method and the matrix cache
        arguments: ``d`` or ``alpha``, and ``specialize`` for d_{mu,nu}(1)

    Returns:
        The matrices as a text table, CSV or JSON. Exit code 2 when the
        methods disagree or a matrix fails validation.
    """
    specialize = arguments.get("specialize", False)
    output_format = engine.config.output_format
    method = engine.config.method

    if output_format not in ("text", "json", "csv"):
        return unsupported_format("decomp", output_format, ("text", "json", "csv"))

    try:
        alphas = engine.block_alphas(arguments.get("d"), optional_alpha(arguments))
        matrices = await engine.decomposition_matrices(alphas, method)

        problems = [
            f"block {matrix.alpha}: {violation}"
            for matrix in matrices
            for violation in matrix.validate()
        ]
        exit_code = EXIT_VERIFICATION_FAILURE if problems else 0
        for problem in problems:
            logger.error(f"Matrix validation failed: {problem}")

        if output_format == "json":
            if specialize:
                return CommandOutput(dump_json([
                    SpecializedMatrixPayload(
                        e=matrix.weight.e,
                        kappa=list(matrix.weight.kappa),
                        alpha=alpha_payload(matrix.alpha),
                        rows=[str(mu) for mu in matrix.rows],
                        cols=[str(nu) for nu in matrix.cols],
                        values=matrix.specialize(),
                    )
                    for matrix in matrices
                ]), exit_code)
            return CommandOutput(
                dump_json([MatrixPayload.from_matrix(matrix) for matrix in matrices]),
                exit_code,
            )

        if output_format == "csv":
            text = ""
            for matrix in matrices:
                text += f"# alpha = {matrix.alpha}\n"
                text += format_matrix_csv(matrix, specialize)
            return CommandOutput(text, exit_code)

        label = "Decomposition numbers at q=1" if specialize else "Graded decomposition matrix"
        text = ""
        for matrix in matrices:
            text += heading(f"{label} for alpha = {matrix.alpha}")
            text += format_matrix_table(matrix, specialize)
            text += "\n"
        if method == "all":
            text += "methods agree: yes\n"
        for problem in problems:
            text += f"violation: {problem}\n"
        return CommandOutput(text, exit_code)

    except Exception as e:
        return error_output("computing decomposition matrices", e)
