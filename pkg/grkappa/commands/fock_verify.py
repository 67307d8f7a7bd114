"""fock-verify subcommand."""

import argparse

from ..handlers import handle_fock_verify


def register_fock_verify_command(
    subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]",
    parents: list[argparse.ArgumentParser],
) -> None:
    """Register the fock-verify subcommand."""
    parser = subparsers.add_parser(
        "fock-verify",
        parents=parents,
        help="Check the quantum group relations on the Fock space",
    )
    parser.add_argument("--dmax", type=int, required=True, help="Largest multipartition size checked")
    parser.add_argument("--mu", help="Also apply every E_i and F_i to M_mu")
    parser.set_defaults(handler=handle_fock_verify)
