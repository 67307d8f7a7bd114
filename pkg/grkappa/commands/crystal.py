"""crystal subcommand."""

import argparse

from ..handlers import handle_crystal


def register_crystal_command(
    subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]",
    parents: list[argparse.ArgumentParser],
) -> None:
    """Register the crystal subcommand."""
    parser = subparsers.add_parser(
        "crystal",
        parents=parents,
        help="Crystal graph of restricted multipartitions up to size d (use --format dot or json)",
    )
    parser.add_argument("--d", type=int, required=True, help="Largest size in the graph")
    parser.set_defaults(handler=handle_crystal)
