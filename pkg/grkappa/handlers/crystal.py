"""Crystal graph handler."""

import logging
from typing import Any

import networkx as nx

from ..engine import HeckeEngine
from ..models import CrystalGraphPayload
from .common import (
    EXIT_DOMAIN_ERROR,
    CommandOutput,
    dump_json,
    error_output,
    heading,
    unsupported_format,
)

logger = logging.getLogger(__name__)


async def handle_crystal(
    engine: HeckeEngine,
    arguments: dict[str, Any],
) -> CommandOutput:
    """The crystal B(Lambda) truncated at size d, as DOT, JSON or a text edge list."""
    d = arguments.get("d")
    output_format = engine.config.output_format

    if d is None:
        return CommandOutput("Error: --d is required\n", EXIT_DOMAIN_ERROR)
    if output_format not in ("text", "json", "dot"):
        return unsupported_format("crystal", output_format, ("text", "json", "dot"))

    try:
        graph = engine.crystal(d)

        if output_format == "dot":
            return CommandOutput(graph.to_dot())
        if output_format == "json":
            return CommandOutput(dump_json(CrystalGraphPayload.from_graph(graph, engine.weight)))

        digraph = graph.as_digraph()
        text = heading(f"Crystal graph up to size {d} (e={engine.weight.e}, kappa={engine.weight})")
        text += f"vertices: {digraph.number_of_nodes()}\n"
        text += f"edges: {digraph.number_of_edges()}\n"
        text += f"weakly connected: {'yes' if nx.is_weakly_connected(digraph) else 'no'}\n\n"
        for source, target, i in graph.edges:
            text += f"{source} --{i}--> {target}\n"
        return CommandOutput(text)

    except Exception as e:
        return error_output("building the crystal graph", e)
