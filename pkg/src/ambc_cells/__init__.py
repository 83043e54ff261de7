"""Combinatorics of cells in the extended affine symmetric group.

The affine matrix-ball construction, sign insertion, partial rotations and
standardization of tableaux, with a harness that replays worked examples and
checks the theorems on bounded enumerations.
"""

from .ambc import AmbcTriple, Numbering, greene_kleitman, phi, psi
from .core import AmbcError, Window, format_window, parse_window
from .sign import sign_insert

__all__ = [
    "AmbcError",
    "AmbcTriple",
    "Numbering",
    "Window",
    "format_window",
    "greene_kleitman",
    "parse_window",
    "phi",
    "psi",
    "sign_insert",
]
