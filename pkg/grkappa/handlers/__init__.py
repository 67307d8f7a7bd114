"""grkappa command handlers package."""

from .blocks import handle_blocks
from .crystal import handle_crystal
from .decomp import handle_decomp
from .fock_verify import handle_fock_verify
from .graded_dim import handle_graded_dim
from .irr_char import handle_irr_char
from .mullineux import handle_mullineux
from .restricted import handle_restricted
from .seminormal_check import handle_seminormal_check
from .specht_char import handle_specht_char

__all__ = [
    "handle_blocks",
    "handle_specht_char",
    "handle_irr_char",
    "handle_decomp",
    "handle_crystal",
    "handle_restricted",
    "handle_mullineux",
    "handle_graded_dim",
    "handle_fock_verify",
    "handle_seminormal_check",
]
