"""Affine involutions: atoms, weighted involutions, Bruhat covers and counting series."""

from .affine_core import (
    AffinePermutation, InvalidWindowError, RankMismatchError, ResourceBoundError,
    bruhat_leq, demazure, from_window, identity, length, reflection, simple, star,
)
from .atoms import atom_poset, atoms_bruteforce, is_atom, is_atom_local, is_atom_of
from .bruhat_inv import covers_up_I, tau
from .genfunc import count_N, count_Nhat, series_closed_form
from .involutions import (
    absolute_length, enumerate_involutions, hat_length, involution_from_cycles, standardize,
)
from .weighted import (
    WeightedInvolution, lambda_left, lambda_right, omega_left, omega_right, weighted,
)

__all__ = [
    "AffinePermutation", "InvalidWindowError", "RankMismatchError", "ResourceBoundError",
    "bruhat_leq", "demazure", "from_window", "identity", "length", "reflection", "simple", "star",
    "atom_poset", "atoms_bruteforce", "is_atom", "is_atom_local", "is_atom_of",
    "covers_up_I", "tau", "count_N", "count_Nhat", "series_closed_form",
    "absolute_length", "enumerate_involutions", "hat_length", "involution_from_cycles",
    "standardize", "WeightedInvolution", "lambda_left", "lambda_right", "omega_left",
    "omega_right", "weighted",
]
