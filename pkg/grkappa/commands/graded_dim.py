"""graded-dim subcommand."""

import argparse

from ..handlers import handle_graded_dim


def register_graded_dim_command(
    subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]",
    parents: list[argparse.ArgumentParser],
) -> None:
    """Register the graded-dim subcommand."""
    parser = subparsers.add_parser(
        "graded-dim",
        parents=parents,
        help="Graded dimension of e(i) H e(j), or per-block totals without --i/--j",
    )
    parser.add_argument("--d", type=int, help="Every block of size d (totals mode)")
    parser.add_argument("--alpha", help='One block, e.g. "0:2,1:1"')
    parser.add_argument("--i", help='Residue sequence, e.g. "0,1,1"')
    parser.add_argument("--j", help="Second residue sequence")
    parser.set_defaults(handler=handle_graded_dim)
