"""Subcommand registration for the grkappa CLI."""

from .blocks import register_blocks_command
from .crystal import register_crystal_command
from .decomp import register_decomp_command
from .fock_verify import register_fock_verify_command
from .graded_dim import register_graded_dim_command
from .irr_char import register_irr_char_command
from .mullineux import register_mullineux_command
from .restricted import register_restricted_command
from .seminormal_check import register_seminormal_check_command
from .specht_char import register_specht_char_command

__all__ = [
    "register_blocks_command",
    "register_specht_char_command",
    "register_irr_char_command",
    "register_decomp_command",
    "register_crystal_command",
    "register_restricted_command",
    "register_mullineux_command",
    "register_graded_dim_command",
    "register_fock_verify_command",
    "register_seminormal_check_command",
]
