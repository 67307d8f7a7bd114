"""specht-char subcommand."""

import argparse

from ..handlers import handle_specht_char


def register_specht_char_command(
    subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]",
    parents: list[argparse.ArgumentParser],
) -> None:
    """Register the specht-char subcommand."""
    parser = subparsers.add_parser(
        "specht-char",
        parents=parents,
        help="Graded character of the Specht module S(mu)",
    )
    parser.add_argument("--mu", required=True, help='Multipartition, e.g. "3,1|0|4,2"')
    parser.add_argument(
        "--tableaux",
        action="store_true",
        help="Also list every standard tableau with its residue sequence, degree and w_T",
    )
    parser.set_defaults(handler=handle_specht_char)
