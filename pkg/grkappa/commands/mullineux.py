"""mullineux subcommand."""

import argparse

from ..handlers import handle_mullineux


def register_mullineux_command(
    subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]",
    parents: list[argparse.ArgumentParser],
) -> None:
    """Register the mullineux subcommand."""
    parser = subparsers.add_parser(
        "mullineux",
        parents=parents,
        help="Mullineux involution on restricted partitions (level one)",
    )
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--mu", help="One restricted partition")
    target.add_argument("--d", type=int, help="Every restricted partition of d")
    parser.set_defaults(handler=handle_mullineux)
