"""blocks subcommand."""

import argparse

from ..handlers import handle_blocks


def register_blocks_command(
    subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]",
    parents: list[argparse.ArgumentParser],
) -> None:
    """Register the blocks subcommand."""
    parser = subparsers.add_parser(
        "blocks",
        parents=parents,
        help="List the blocks of size d with their members and defects",
    )
    parser.add_argument("--d", type=int, required=True, help="Size of the multipartitions")
    parser.set_defaults(handler=handle_blocks)
