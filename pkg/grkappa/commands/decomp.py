"""decomp subcommand."""

import argparse

from ..handlers import handle_decomp


def register_decomp_command(
    subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]",
    parents: list[argparse.ArgumentParser],
) -> None:
    """Register the decomp subcommand."""
    parser = subparsers.add_parser(
        "decomp",
        parents=parents,
        help="Graded decomposition matrices",
    )
    block = parser.add_mutually_exclusive_group(required=True)
    block.add_argument("--d", type=int, help="Every block of size d")
    block.add_argument("--alpha", help='One block, e.g. "0:2,1:1"')
    parser.add_argument(
        "--specialize",
        action="store_true",
        help="Print the ungraded decomposition numbers d(1)",
    )
    parser.set_defaults(handler=handle_decomp)
