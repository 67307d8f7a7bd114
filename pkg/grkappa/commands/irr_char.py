"""irr-char subcommand."""

import argparse

from ..handlers import handle_irr_char


def register_irr_char_command(
    subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]",
    parents: list[argparse.ArgumentParser],
) -> None:
    """Register the irr-char subcommand."""
    parser = subparsers.add_parser(
        "irr-char",
        parents=parents,
        help="Graded characters of the irreducible modules D(nu)",
    )
    block = parser.add_mutually_exclusive_group(required=True)
    block.add_argument("--d", type=int, help="Every block of size d")
    block.add_argument("--alpha", help='One block, e.g. "0:2,1:1"')
    parser.set_defaults(handler=handle_irr_char)
