"""seminormal-check subcommand."""

import argparse

from ..handlers import handle_seminormal_check


def register_seminormal_check_command(
    subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]",
    parents: list[argparse.ArgumentParser],
) -> None:
    """Register the seminormal-check subcommand."""
    parser = subparsers.add_parser(
        "seminormal-check",
        parents=parents,
        help="Verify the KLR relations on seminormal representations (e=0, level one)",
    )
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--mu", help="One partition")
    target.add_argument("--d", type=int, help="Every partition of d")
    parser.add_argument("--dump", action="store_true", help="Print the representations as JSON")
    parser.set_defaults(handler=handle_seminormal_check)
