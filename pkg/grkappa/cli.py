"""Command-line entry point for grkappa."""

import argparse
import asyncio
import logging
import os
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, NoReturn

from dotenv import load_dotenv
from pydantic import ValidationError

from .commands import (
    register_blocks_command,
    register_crystal_command,
    register_decomp_command,
    register_fock_verify_command,
    register_graded_dim_command,
    register_irr_char_command,
    register_mullineux_command,
    register_restricted_command,
    register_seminormal_check_command,
    register_specht_char_command,
)
from .config import GrkappaConfig, parse_kappa
from .core.errors import DomainError
from .engine import HeckeEngine
from .handlers.common import EXIT_DOMAIN_ERROR, CommandOutput

logger = logging.getLogger(__name__)

DEFAULT_CACHE_DIR = Path.home() / ".cache" / "grkappa"


class UsageError(DomainError):
    """Raised instead of exiting when the command line does not parse."""


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def common_options() -> ArgumentParser:
    """Flags shared by every subcommand."""
    parser = ArgumentParser(add_help=False)
    parser.add_argument("--e", type=int, required=True, help="Quantum characteristic (0 or at least 2)")
    parser.add_argument("--kappa", required=True, help='Comma-separated residues, e.g. "0,1,1"')
    parser.add_argument(
        "--format",
        dest="output_format",
        default="text",
        choices=["text", "json", "csv", "dot"],
        help="Output format",
    )
    parser.add_argument(
        "--method",
        default="bar",
        choices=["llt", "bar", "extremal", "all"],
        help="Decomposition matrix algorithm; 'all' runs every applicable one and compares",
    )
    parser.add_argument("--cache-dir", type=Path, help="Matrix cache directory (GRKAPPA_CACHE wins)")
    parser.add_argument("--no-cache", action="store_true", help="Neither read nor write the cache")
    parser.add_argument("--jobs", type=int, default=1, help="Worker processes for per-block work")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level to stderr")
    return parser


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="grkappa",
        description="Graded representation theory of cyclotomic Hecke algebras",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)
    parents = [common_options()]

    register_blocks_command(subparsers, parents)
    register_specht_char_command(subparsers, parents)
    register_irr_char_command(subparsers, parents)
    register_decomp_command(subparsers, parents)
    register_crystal_command(subparsers, parents)
    register_restricted_command(subparsers, parents)
    register_mullineux_command(subparsers, parents)
    register_graded_dim_command(subparsers, parents)
    register_fock_verify_command(subparsers, parents)
    register_seminormal_check_command(subparsers, parents)
    return parser


def get_config(args: argparse.Namespace) -> GrkappaConfig:
    """Build the run configuration from parsed flags and the environment."""
    load_dotenv()
    cache_dir = os.getenv("GRKAPPA_CACHE") or args.cache_dir or DEFAULT_CACHE_DIR

    return GrkappaConfig(
        e=args.e,
        kappa=parse_kappa(args.kappa),
        cache_dir=Path(cache_dir),
        output_format=args.output_format,
        method=args.method,
        jobs=args.jobs,
        use_cache=not args.no_cache,
    )


async def run_command(args: argparse.Namespace) -> CommandOutput:
    config = get_config(args)
    arguments: dict[str, Any] = vars(args)
    async with HeckeEngine(config) as engine:
        logger.debug(f"Running {args.command} with e={config.e}, kappa={config.kappa}")
        result: CommandOutput = await args.handler(engine, arguments)
        return result


def dispatch(argv: Sequence[str] | None = None) -> int:
    """Parse argv, run the subcommand and write its output; returns the exit code."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"Error: {e}\n")
        return EXIT_DOMAIN_ERROR

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)

    try:
        result = asyncio.run(run_command(args))
    except (DomainError, ValidationError) as e:
        result = CommandOutput(f"Error: {e}\n", EXIT_DOMAIN_ERROR)

    stream = sys.stderr if result.exit_code == EXIT_DOMAIN_ERROR else sys.stdout
    stream.write(result.text)
    stream.flush()
    return result.exit_code


def run_cli() -> None:
    """Synchronous entry point for the grkappa console script."""
    sys.exit(dispatch())


if __name__ == "__main__":
    run_cli()
