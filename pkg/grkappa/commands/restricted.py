"""restricted subcommand."""

import argparse

from ..handlers import handle_restricted


def register_restricted_command(
    subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]",
    parents: list[argparse.ArgumentParser],
) -> None:
    """Register the restricted subcommand."""
    parser = subparsers.add_parser(
        "restricted",
        parents=parents,
        help="Restricted multipartitions of size d, checked against closed forms",
    )
    parser.add_argument("--d", type=int, required=True, help="Size of the multipartitions")
    parser.set_defaults(handler=handle_restricted)
